#include "wildns/norms.hpp"

#include <algorithm>
#include <cmath>

#include "wildns/ops.hpp"

namespace wildns::field3 {

std::string NormKind::name() const {
  char buf[64];
  switch (kind) {
    case Kind::Lp:
      if (std::isinf(p)) return "Linf";
      std::snprintf(buf, sizeof buf, "L%g", p);
      return buf;
    case Kind::Sobolev:
      std::snprintf(buf, sizeof buf, "H%g", s);
      return buf;
    case Kind::Besov11:
      std::snprintf(buf, sizeof buf, "B%g_11", beta);
      return buf;
    case Kind::CNtx:
      std::snprintf(buf, sizeof buf, "C%d_tx", N);
      return buf;
    case Kind::HolderTime:
      std::snprintf(buf, sizeof buf, "C^%g_t", alpha);
      return buf;
  }
  return "?";
}

namespace {

inline double point_mag2(const RealField& f, std::size_t i) {
  switch (f.rank) {
    case Rank::Scalar:
      return f.c[0][i] * f.c[0][i];
    case Rank::Vector:
      return f.c[0][i] * f.c[0][i] + f.c[1][i] * f.c[1][i] + f.c[2][i] * f.c[2][i];
    case Rank::SymTensor:
      return f.c[0][i] * f.c[0][i] + f.c[1][i] * f.c[1][i] + f.c[2][i] * f.c[2][i] +
             2 * (f.c[3][i] * f.c[3][i] + f.c[4][i] * f.c[4][i] + f.c[5][i] * f.c[5][i]);
  }
  return 0;
}

}  // namespace

double pointwise_sup(const RealField& f) {
  double m = 0;
  for (std::size_t i = 0; i < f.grid.npoints(); ++i) m = std::max(m, point_mag2(f, i));
  return std::sqrt(m);
}

double lp_norm(const RealField& f, double p) {
  if (p < 1.0) throw WildError("lp_norm: p must be >= 1");
  if (std::isinf(p)) return pointwise_sup(f);
  double cell = VOL / double(f.grid.npoints());
  double acc = 0;
  if (p == 2.0) {
    for (std::size_t i = 0; i < f.grid.npoints(); ++i) acc += point_mag2(f, i);
  } else {
    for (std::size_t i = 0; i < f.grid.npoints(); ++i)
      acc += std::pow(point_mag2(f, i), 0.5 * p);
  }
  return std::pow(cell * acc, 1.0 / p);
}

double sobolev_norm(const SpectralField& f, double s) {
  double acc = 0;
  for_each_mode(f.grid, [&](std::size_t i, int kx, int ky, int kz) {
    double w = hermitian_weight(f.grid, kz);
    double k2 = double(kx * kx + ky * ky + kz * kz);
    double mult = std::pow(1.0 + k2, s);
    double m = 0;
    for (int c = 0; c < ncomp(f.rank); ++c) m += std::norm(f.c[c][i]);
    if (f.rank == Rank::SymTensor) {
      m = 0;
      for (int c = 0; c < 3; ++c) m += std::norm(f.c[c][i]);
      for (int c = 3; c < 6; ++c) m += 2 * std::norm(f.c[c][i]);
    }
    acc += w * mult * m;
  });
  return std::sqrt(acc);
}

double lp_cutoff(double r) {
  if (r <= 1.0) return 1.0;
  if (r >= 2.0) return 0.0;
  auto bump = [](double x) { return x > 0 ? std::exp(-1.0 / x) : 0.0; };
  double x = r - 1.0;
  return bump(1.0 - x) / (bump(1.0 - x) + bump(x));
}

double lp_block(int j, double absk) {
  if (j == -1) return lp_cutoff(absk);
  double pj = std::pow(2.0, j);
  return lp_cutoff(absk / pj) - lp_cutoff(2.0 * absk / pj);
}

double besov11_norm(const SpectralField& f, double beta) {
  double kmax = std::sqrt(3.0) * (f.grid.n / 2);
  int jmax = 0;
  while (std::pow(2.0, jmax - 1) <= kmax) ++jmax;
  double acc = 0;
  SpectralField block(f.grid, f.rank);
  for (int j = -1; j <= jmax; ++j) {
    bool any = false;
    for_each_mode(f.grid, [&](std::size_t i, int kx, int ky, int kz) {
      double absk = std::sqrt(double(kx * kx + ky * ky + kz * kz));
      double m = lp_block(j, absk);
      for (int c = 0; c < ncomp(f.rank); ++c) block.c[c][i] = m * f.c[c][i];
      if (m != 0.0) any = true;
    });
    if (!any) continue;
    acc += std::pow(2.0, beta * j) * lp_norm(inverse_transform(block), 1.0);
  }
  return acc;
}

double spatial_norm(const RealField& f, const NormKind& kind) {
  switch (kind.kind) {
    case NormKind::Kind::Lp:
      return lp_norm(f, kind.p);
    case NormKind::Kind::Sobolev:
      return sobolev_norm(transform(f), kind.s);
    case NormKind::Kind::Besov11:
      return besov11_norm(transform(f), kind.beta);
    default:
      throw WildError("spatial_norm: time norms need a family");
  }
}

namespace {

std::vector<RealField> time_derivative(const std::vector<RealField>& f,
                                       const std::vector<double>& t) {
  std::size_t n = f.size();
  if (n < 3) throw WildError("time_derivative: need at least 3 samples");
  double dt = t[1] - t[0];
  std::vector<RealField> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0)
      out.push_back(add(f[1], f[0], 1.0 / dt, -1.0 / dt));
    else if (i == n - 1)
      out.push_back(add(f[n - 1], f[n - 2], 1.0 / dt, -1.0 / dt));
    else
      out.push_back(add(f[i + 1], f[i - 1], 0.5 / dt, -0.5 / dt));
  }
  return out;
}

double sup_spatial_derivs(const RealField& f, int maxorder) {
  double best = pointwise_sup(f);
  if (maxorder == 0) return best;
  SpectralField s = transform(f);
  // breadth-first over multi-indices up to maxorder
  std::vector<SpectralField> level{s};
  for (int o = 1; o <= maxorder; ++o) {
    std::vector<SpectralField> next;
    for (auto& g : level)
      for (int ax = 0; ax < 3; ++ax) next.push_back(derivative(g, ax));
    for (auto& g : next) best = std::max(best, pointwise_sup(inverse_transform(g)));
    level = std::move(next);
  }
  return best;
}

}  // namespace

double cntx_norm(const TimeFamily& fam, int N) {
  if (fam.size() == 0) throw WildError("cntx_norm: empty family");
  double best = 0;
  std::vector<RealField> cur = fam.f;
  for (int m = 0; m <= N; ++m) {
    for (auto& g : cur) best = std::max(best, sup_spatial_derivs(g, N - m));
    if (m < N) cur = time_derivative(cur, fam.t);
  }
  return best;
}

double holder_time_norm(const TimeFamily& fam, double alpha, const NormKind& value_kind,
                        double hmin) {
  if (fam.size() < 2) throw WildError("holder_time_norm: need at least 2 samples");
  double best = 0;
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      double dt = fam.t[j] - fam.t[i];
      if (dt < hmin) continue;
      RealField diff = add(fam.f[j], fam.f[i], 1.0, -1.0);
      best = std::max(best, spatial_norm(diff, value_kind) / std::pow(dt, alpha));
    }
  return best;
}

double holder_time_norm_scalar(const std::vector<double>& t, const std::vector<double>& x,
                               double alpha, double hmin) {
  double best = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      double dt = t[j] - t[i];
      if (dt < hmin) continue;
      best = std::max(best, std::abs(x[j] - x[i]) / std::pow(dt, alpha));
    }
  return best;
}

double compute_norm(const TimeFamily& fam, const NormKind& kind, double hmin) {
  switch (kind.kind) {
    case NormKind::Kind::CNtx:
      return cntx_norm(fam, kind.N);
    case NormKind::Kind::HolderTime: {
      NormKind value;
      value.kind = kind.value_kind;
      value.p = kind.p;
      value.s = kind.s;
      value.beta = kind.beta;
      double h = hmin > 0 ? hmin : (fam.size() > 1 ? fam.t[1] - fam.t[0] : 0.0);
      return holder_time_norm(fam, kind.alpha, value, h);
    }
    default: {
      // C_t of a spatial norm
      double best = 0;
      for (auto& g : fam.f) best = std::max(best, spatial_norm(g, kind));
      return best;
    }
  }
}

}  // namespace wildns::field3
