#include "wildns/ops.hpp"

namespace wildns::field3 {

namespace {

inline bool nyquist(const Grid3& g, int kx, int ky, int iz) {
  int half = g.n / 2;
  return kx == half || ky == half || iz == half;
}

template <typename Mult>
SpectralField apply_multiplier(const SpectralField& f, Mult&& m) {
  SpectralField out(f.grid, f.rank);
  for_each_mode(f.grid, [&](std::size_t i, int kx, int ky, int kz) {
    double s = m(kx, ky, kz);
    for (int c = 0; c < ncomp(f.rank); ++c) out.c[c][i] = f.c[c][i] * s;
  });
  return out;
}

}  // namespace

SpectralField derivative(const SpectralField& f, int axis) {
  SpectralField out(f.grid, f.rank);
  for_each_mode(f.grid, [&](std::size_t i, int kx, int ky, int kz) {
    if (nyquist(f.grid, kx, ky, kz)) {
      for (int c = 0; c < ncomp(f.rank); ++c) out.c[c][i] = 0.0;
      return;
    }
    double k = axis == 0 ? kx : (axis == 1 ? ky : kz);
    cplx ik(0.0, k);
    for (int c = 0; c < ncomp(f.rank); ++c) out.c[c][i] = ik * f.c[c][i];
  });
  return out;
}

SpectralField laplacian(const SpectralField& f) {
  return apply_multiplier(f, [](int kx, int ky, int kz) {
    return -double(kx * kx + ky * ky + kz * kz);
  });
}

SpectralField gradient(const SpectralField& scalar) {
  if (scalar.rank != Rank::Scalar) throw WildError("gradient: scalar input required");
  SpectralField out(scalar.grid, Rank::Vector);
  for_each_mode(scalar.grid, [&](std::size_t i, int kx, int ky, int kz) {
    if (nyquist(scalar.grid, kx, ky, kz)) return;
    cplx v = scalar.c[0][i];
    out.c[0][i] = cplx(0, kx) * v;
    out.c[1][i] = cplx(0, ky) * v;
    out.c[2][i] = cplx(0, kz) * v;
  });
  return out;
}

SpectralField divergence(const SpectralField& v) {
  if (v.rank != Rank::Vector) throw WildError("divergence: vector input required");
  SpectralField out(v.grid, Rank::Scalar);
  for_each_mode(v.grid, [&](std::size_t i, int kx, int ky, int kz) {
    if (nyquist(v.grid, kx, ky, kz)) return;
    out.c[0][i] = cplx(0, kx) * v.c[0][i] + cplx(0, ky) * v.c[1][i] + cplx(0, kz) * v.c[2][i];
  });
  return out;
}

SpectralField divergence_tensor(const SpectralField& t) {
  if (t.rank != Rank::SymTensor) throw WildError("divergence_tensor: symtensor input required");
  SpectralField out(t.grid, Rank::Vector);
  for_each_mode(t.grid, [&](std::size_t i, int kx, int ky, int kz) {
    if (nyquist(t.grid, kx, ky, kz)) return;
    cplx ikx(0, kx), iky(0, ky), ikz(0, kz);
    // order xx yy zz xy xz yz
    out.c[0][i] = ikx * t.c[0][i] + iky * t.c[3][i] + ikz * t.c[4][i];
    out.c[1][i] = ikx * t.c[3][i] + iky * t.c[1][i] + ikz * t.c[5][i];
    out.c[2][i] = ikx * t.c[4][i] + iky * t.c[5][i] + ikz * t.c[2][i];
  });
  return out;
}

SpectralField curl(const SpectralField& v) {
  if (v.rank != Rank::Vector) throw WildError("curl: vector input required");
  SpectralField out(v.grid, Rank::Vector);
  for_each_mode(v.grid, [&](std::size_t i, int kx, int ky, int kz) {
    if (nyquist(v.grid, kx, ky, kz)) return;
    cplx ikx(0, kx), iky(0, ky), ikz(0, kz);
    out.c[0][i] = iky * v.c[2][i] - ikz * v.c[1][i];
    out.c[1][i] = ikz * v.c[0][i] - ikx * v.c[2][i];
    out.c[2][i] = ikx * v.c[1][i] - iky * v.c[0][i];
  });
  return out;
}

SpectralField leray_project(const SpectralField& v) {
  if (v.rank != Rank::Vector) throw WildError("leray_project: vector input required");
  SpectralField out(v.grid, Rank::Vector);
  for_each_mode(v.grid, [&](std::size_t i, int kx, int ky, int kz) {
    double k2 = double(kx * kx + ky * ky + kz * kz);
    if (k2 == 0.0) {
      for (int c = 0; c < 3; ++c) out.c[c][i] = v.c[c][i];
      return;
    }
    cplx kv = (double(kx) * v.c[0][i] + double(ky) * v.c[1][i] + double(kz) * v.c[2][i]) / k2;
    out.c[0][i] = v.c[0][i] - double(kx) * kv;
    out.c[1][i] = v.c[1][i] - double(ky) * kv;
    out.c[2][i] = v.c[2][i] - double(kz) * kv;
  });
  return out;
}

SpectralField inverse_divergence(const SpectralField& v) {
  if (v.rank != Rank::Vector) throw WildError("inverse_divergence: vector input required");
  auto means = component_means(v);
  double scale = 0.0;
  for (int c = 0; c < 3; ++c) {
    double m = 0;
    for (auto& z : v.c[c]) m = std::max(m, std::abs(z));
    scale = std::max(scale, m);
  }
  for (double m : means)
    if (std::abs(m) > 1e-12 * std::max(scale, 1.0))
      throw WildError("inverse_divergence: input must be mean-zero");

  SpectralField out(v.grid, Rank::SymTensor);
  for_each_mode(v.grid, [&](std::size_t i, int kx, int ky, int kz) {
    double k2 = double(kx * kx + ky * ky + kz * kz);
    if (k2 == 0.0 || nyquist(v.grid, kx, ky, kz)) return;
    double k[3] = {double(kx), double(ky), double(kz)};
    cplx vh[3] = {v.c[0][i], v.c[1][i], v.c[2][i]};
    // dhat_l = (Delta^{-1} v)_l
    cplx dh[3] = {-vh[0] / k2, -vh[1] / k2, -vh[2] / k2};
    cplx divd = cplx(0, 1) * (k[0] * dh[0] + k[1] * dh[1] + k[2] * dh[2]);
    for (int a = 0; a < 3; ++a)
      for (int b = a; b < 3; ++b) {
        cplx val = cplx(0, k[a]) * dh[b] + cplx(0, k[b]) * dh[a];
        double dd = (a == b) ? 1.0 : 0.0;
        val -= 0.5 * (dd - k[a] * k[b] / k2) * divd;
        out.c[Sym3::idx(a, b)][i] = val;
      }
  });
  return out;
}

SpectralField filter_leq(const SpectralField& f, double fmax) {
  if (fmax < 0) throw WildError("filter_leq: fmax must be >= 0");
  return apply_multiplier(f, [fmax](int kx, int ky, int kz) {
    double k = std::sqrt(double(kx * kx + ky * ky + kz * kz));
    return k <= fmax ? 1.0 : 0.0;
  });
}

SpectralField filter_neq0(const SpectralField& f) {
  SpectralField out = f;
  for (int c = 0; c < ncomp(f.rank); ++c) out.c[c][0] = 0.0;
  return out;
}

SpectralField heat_apply(const SpectralField& f, double t) {
  if (t < 0) throw WildError("heat_apply: t must be >= 0");
  return apply_multiplier(f, [t](int kx, int ky, int kz) {
    return std::exp(-double(kx * kx + ky * ky + kz * kz) * t);
  });
}

SpectralField inverse_laplacian(const SpectralField& f) {
  auto means = component_means(f);
  for (double m : means)
    if (std::abs(m) > 1e-10) throw WildError("inverse_laplacian: input must be mean-zero");
  return apply_multiplier(f, [](int kx, int ky, int kz) {
    double k2 = double(kx * kx + ky * ky + kz * kz);
    return k2 == 0.0 ? 0.0 : -1.0 / k2;
  });
}

SpectralField mollify_space(const SpectralField& f, double ell) {
  return apply_multiplier(f, [ell](int kx, int ky, int kz) {
    return std::exp(-0.5 * double(kx * kx + ky * ky + kz * kz) * ell * ell);
  });
}

std::vector<double> component_means(const SpectralField& f) {
  std::vector<double> out(ncomp(f.rank));
  for (int c = 0; c < ncomp(f.rank); ++c) out[c] = f.c[c][0].real() / VOL_SQRT;
  return out;
}

RealField add(const RealField& a, const RealField& b, double sa, double sb) {
  if (!(a.grid == b.grid) || a.rank != b.rank) throw WildError("add: shape mismatch");
  RealField out(a.grid, a.rank);
  for (int c = 0; c < ncomp(a.rank); ++c)
    for (std::size_t i = 0; i < a.c[c].size(); ++i) out.c[c][i] = sa * a.c[c][i] + sb * b.c[c][i];
  return out;
}

void axpy(RealField& y, const RealField& x, double a) {
  if (!(y.grid == x.grid) || y.rank != x.rank) throw WildError("axpy: shape mismatch");
  for (int c = 0; c < ncomp(y.rank); ++c)
    for (std::size_t i = 0; i < y.c[c].size(); ++i) y.c[c][i] += a * x.c[c][i];
}

RealField outer_product_sym(const RealField& v, const RealField& w) {
  if (v.rank != Rank::Vector || w.rank != Rank::Vector)
    throw WildError("outer_product_sym: vector inputs required");
  RealField out(v.grid, Rank::SymTensor);
  std::size_t np = v.grid.npoints();
  for (std::size_t i = 0; i < np; ++i) {
    double a0 = v.c[0][i], a1 = v.c[1][i], a2 = v.c[2][i];
    double b0 = w.c[0][i], b1 = w.c[1][i], b2 = w.c[2][i];
    out.c[0][i] = a0 * b0;
    out.c[1][i] = a1 * b1;
    out.c[2][i] = a2 * b2;
    out.c[3][i] = 0.5 * (a0 * b1 + a1 * b0);
    out.c[4][i] = 0.5 * (a0 * b2 + a2 * b0);
    out.c[5][i] = 0.5 * (a1 * b2 + a2 * b1);
  }
  return out;
}

RealField scalar_multiply(const RealField& s, const RealField& f) {
  if (s.rank != Rank::Scalar || !(s.grid == f.grid)) throw WildError("scalar_multiply: bad shapes");
  RealField out(f.grid, f.rank);
  for (int c = 0; c < ncomp(f.rank); ++c)
    for (std::size_t i = 0; i < f.c[c].size(); ++i) out.c[c][i] = s.c[0][i] * f.c[c][i];
  return out;
}

RealField traceless_part(const RealField& t) {
  if (t.rank != Rank::SymTensor) throw WildError("traceless_part: symtensor required");
  RealField out = t;
  for (std::size_t i = 0; i < t.grid.npoints(); ++i) {
    double tr3 = (t.c[0][i] + t.c[1][i] + t.c[2][i]) / 3.0;
    out.c[0][i] -= tr3;
    out.c[1][i] -= tr3;
    out.c[2][i] -= tr3;
  }
  return out;
}

RealField multiply(const RealField& a, const RealField& b) {
  if (a.rank != Rank::Scalar || b.rank != Rank::Scalar) throw WildError("multiply: scalars required");
  RealField out(a.grid, Rank::Scalar);
  for (std::size_t i = 0; i < a.c[0].size(); ++i) out.c[0][i] = a.c[0][i] * b.c[0][i];
  return out;
}

SpectralField dealias_two_thirds(const SpectralField& f) {
  int cutoff = f.grid.n / 3;
  return [&] {
    SpectralField out(f.grid, f.rank);
    for_each_mode(f.grid, [&](std::size_t i, int kx, int ky, int kz) {
      bool keep = std::abs(kx) <= cutoff && std::abs(ky) <= cutoff && kz <= cutoff;
      if (!keep) return;
      for (int c = 0; c < ncomp(f.rank); ++c) out.c[c][i] = f.c[c][i];
    });
    return out;
  }();
}

}  // namespace wildns::field3
