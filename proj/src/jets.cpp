#include "wildns/jets.hpp"

#include <cmath>

namespace wildns::jets {

using field3::Grid3;
using field3::Rank;
using field3::RealField;

void JetParams::validate() const {
  if (lambda < 1) throw WildError("jet params: lambda must be >= 1");
  if (!(r_perp > 0 && r_perp < r_par && r_par < 1))
    throw WildError("jet params: need 0 < r_perp < r_par < 1");
  if (mu <= 0) throw WildError("jet params: mu must be positive");
  double lrp = lambda * r_perp;
  if (std::abs(lrp - std::round(lrp)) > 1e-9 || std::round(lrp) < 1)
    throw WildError("jet params: lambda * r_perp must be a natural number");
}

namespace {
inline double wrap_pi(double y) { return std::remainder(y, TWO_PI); }
}  // namespace

struct JetFamily::PointEval {
  Bundle1 p;    // scaled psi bundle, derivatives in the wrapped argument
  Bundle2 f;    // scaled phi bundle, derivatives in the wrapped arguments
  Bundle2 F;    // scaled big-phi bundle
};

JetFamily::JetFamily(const DirectionSet& dirs, const Profiles& prof, const JetParams& params,
                     const Grid3& grid)
    : dirs_(&dirs), prof_(&prof), params_(params), grid_(grid) {
  params_.validate();
  if (grid.n < 4 * params.lambda)
    throw WildError("jet family: unresolved frequency, need n >= 4*lambda");
  choose_shifts();
}

JetFamily::PointEval JetFamily::eval_point(int j, double t, double x0, double x1,
                                           double x2) const {
  const double cy = dirs_->n_star() * params_.lam_rp();
  Vec3 xi = dirs_->xi(j), A = dirs_->a_frame(j), B = dirs_->b_frame(j), al = alpha_[j];
  double y = wrap_pi(cy * (x0 * xi.x + x1 * xi.y + x2 * xi.z + params_.mu * t));
  double v1 = wrap_pi(cy * ((x0 - al.x) * A.x + (x1 - al.y) * A.y + (x2 - al.z) * A.z));
  double v2 = wrap_pi(cy * ((x0 - al.x) * B.x + (x1 - al.y) * B.y + (x2 - al.z) * B.z));

  PointEval e;
  const double rp = params_.r_par, rq = params_.r_perp;
  if (std::abs(y) < rp) {
    Bundle1 u = prof_->psi(y / rp);
    double s = 1.0 / std::sqrt(rp);
    e.p = {s * u.v, s / rp * u.d1, s / (rp * rp) * u.d2, s / (rp * rp * rp) * u.d3};
  }
  if (v1 * v1 + v2 * v2 < rq * rq) {
    Bundle2 u = prof_->phi(v1 / rq, v2 / rq);
    Bundle2 U = prof_->big_phi(v1 / rq, v2 / rq);
    double s1 = 1.0 / rq;
    e.f = {s1 * u.v,        s1 / rq * u.d1,        s1 / rq * u.d2,
           s1 / (rq * rq) * u.d11, s1 / (rq * rq) * u.d12, s1 / (rq * rq) * u.d22};
    e.F = {s1 * U.v,        s1 / rq * U.d1,        s1 / rq * U.d2,
           s1 / (rq * rq) * U.d11, s1 / (rq * rq) * U.d12, s1 / (rq * rq) * U.d22};
  }
  return e;
}

JetSlice JetFamily::slice(int j, double t) const {
  JetSlice out{RealField(grid_, Rank::Vector), RealField(grid_, Rank::Vector),
               RealField(grid_, Rank::Vector), RealField(grid_, Rank::Vector),
               RealField(grid_, Rank::Vector), RealField(grid_, Rank::Scalar),
               RealField(grid_, Rank::Scalar)};
  const double cy = dirs_->n_star() * params_.lam_rp();
  const double n2l2 = double(dirs_->n_star() * dirs_->n_star()) * params_.lambda * params_.lambda;
  const double rq2 = params_.r_perp * params_.r_perp;
  Vec3 xi = dirs_->xi(j), A = dirs_->a_frame(j), B = dirs_->b_frame(j);
  const int n = grid_.n;
  std::size_t idx = 0;
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < n; ++iz, ++idx) {
        PointEval e = eval_point(j, t, grid_.x(ix), grid_.x(iy), grid_.x(iz));
        double w = e.p.v * e.f.v;
        double dpsi_t = cy * params_.mu * e.p.d1;
        for (int c = 0; c < 3; ++c) {
          double xic = xi[c], Ac = A[c], Bc = B[c];
          out.W.c[c][idx] = xic * w;
          out.Wc.c[c][idx] = rq2 * e.p.d1 * (e.F.d1 * Ac + e.F.d2 * Bc);
          out.V.c[c][idx] = xic * e.p.v * e.F.v / n2l2;
          out.curlV.c[c][idx] = cy / n2l2 * e.p.v * (e.F.d2 * Ac - e.F.d1 * Bc);
          out.dtV.c[c][idx] = xic * dpsi_t * e.F.v / n2l2;
        }
        out.psi2phi2.c[0][idx] = e.p.v * e.p.v * e.f.v * e.f.v;
        out.dt_psi2phi2.c[0][idx] = 2.0 * dpsi_t * e.p.v * e.f.v * e.f.v;
      }
  return out;
}

RealField JetFamily::psi_field(int j, double t) const {
  RealField out(grid_, Rank::Scalar);
  std::size_t idx = 0;
  for (int ix = 0; ix < grid_.n; ++ix)
    for (int iy = 0; iy < grid_.n; ++iy)
      for (int iz = 0; iz < grid_.n; ++iz, ++idx)
        out.c[0][idx] = eval_point(j, t, grid_.x(ix), grid_.x(iy), grid_.x(iz)).p.v;
  return out;
}

RealField JetFamily::phi_field(int j) const {
  RealField out(grid_, Rank::Scalar);
  std::size_t idx = 0;
  for (int ix = 0; ix < grid_.n; ++ix)
    for (int iy = 0; iy < grid_.n; ++iy)
      for (int iz = 0; iz < grid_.n; ++iz, ++idx)
        out.c[0][idx] = eval_point(j, 0.0, grid_.x(ix), grid_.x(iy), grid_.x(iz)).f.v;
  return out;
}

RealField JetFamily::big_phi_field(int j) const {
  RealField out(grid_, Rank::Scalar);
  std::size_t idx = 0;
  for (int ix = 0; ix < grid_.n; ++ix)
    for (int iy = 0; iy < grid_.n; ++iy)
      for (int iz = 0; iz < grid_.n; ++iz, ++idx)
        out.c[0][idx] = eval_point(j, 0.0, grid_.x(ix), grid_.x(iy), grid_.x(iz)).F.v;
  return out;
}

double JetFamily::check_divergence_free(double t) const {
  const double cy = dirs_->n_star() * params_.lam_rp();
  const double rq2 = params_.r_perp * params_.r_perp;
  double worst = 0, scale = 0;
  const int n = grid_.n;
  for (int j = 0; j < DirectionSet::count; ++j) {
    Vec3 xi = dirs_->xi(j), A = dirs_->a_frame(j), B = dirs_->b_frame(j);
    double xx = dot(xi, xi), ax = dot(A, xi), bx = dot(B, xi), ab = dot(A, B);
    for (int ix = 0; ix < n; ++ix)
      for (int iy = 0; iy < n; ++iy)
        for (int iz = 0; iz < n; ++iz) {
          PointEval e = eval_point(j, t, grid_.x(ix), grid_.x(iy), grid_.x(iz));
          double divW = cy * (e.p.d1 * e.f.v * xx + e.p.v * (e.f.d1 * ax + e.f.d2 * bx));
          double divWc = rq2 * cy *
                         (e.p.d2 * (e.F.d1 * ax + e.F.d2 * bx) +
                          e.p.d1 * (e.F.d11 + 2 * e.F.d12 * ab + e.F.d22));
          worst = std::max(worst, std::abs(divW + divWc));
          scale = std::max({scale, std::abs(divW), std::abs(divWc)});
        }
  }
  return scale > 0 ? worst / scale : 0.0;
}

double JetFamily::check_curlcurl(double t) const {
  const double rq2 = params_.r_perp * params_.r_perp;
  double worst = 0, scale = 0;
  const int n = grid_.n;
  for (int j = 0; j < DirectionSet::count; ++j) {
    Vec3 xi = dirs_->xi(j), A = dirs_->a_frame(j), B = dirs_->b_frame(j);
    for (int ix = 0; ix < n; ++ix)
      for (int iy = 0; iy < n; ++iy)
        for (int iz = 0; iz < n; ++iz) {
          PointEval e = eval_point(j, t, grid_.x(ix), grid_.x(iy), grid_.x(iz));
          for (int c = 0; c < 3; ++c) {
            double route1 = xi[c] * e.p.v * e.f.v +
                            rq2 * e.p.d1 * (e.F.d1 * A[c] + e.F.d2 * B[c]);
            double route2 = rq2 * (e.p.d1 * (e.F.d1 * A[c] + e.F.d2 * B[c]) -
                                   xi[c] * e.p.v * (e.F.d11 + e.F.d22));
            worst = std::max(worst, std::abs(route1 - route2));
            scale = std::max(scale, std::abs(route1));
          }
        }
  }
  return scale > 0 ? worst / scale : 0.0;
}

double JetFamily::check_disjoint_on_grid() const {
  std::array<RealField, 6> phis;
  double supsq = 0;
  for (int j = 0; j < 6; ++j) {
    phis[j] = big_phi_field(j);
    for (double v : phis[j].c[0]) supsq = std::max(supsq, v * v);
  }
  double worst = 0;
  for (int j = 0; j < 6; ++j)
    for (int k = j + 1; k < 6; ++k)
      for (std::size_t i = 0; i < grid_.npoints(); ++i)
        worst = std::max(worst, std::abs(phis[j].c[0][i] * phis[k].c[0][i]));
  return supsq > 0 ? worst / supsq : 0.0;
}

double JetFamily::check_mean_zero() const {
  // avg W factorizes into 1D x 2D profile means; both vanish by construction
  const int N = 20001;
  double mpsi = 0, h = 2.0 / (N - 1);
  for (int i = 0; i < N - 1; ++i) {
    double x0 = -1 + i * h, x1 = x0 + h;
    mpsi += 0.5 * h * (prof_->psi(x0).v + prof_->psi(x1).v);
  }
  double mphi = 0;
  for (int i = 0; i < N - 1; ++i) {
    double r0 = double(i) / (N - 1), r1 = double(i + 1) / (N - 1);
    mphi += 0.5 * (r1 - r0) *
            (prof_->phi(r0, 0).v * r0 + prof_->phi(r1, 0).v * r1) * TWO_PI;
  }
  double s_psi = std::sqrt(params_.r_par);          // int of scaled psi = r^{1/2} int psi
  double s_phi = params_.r_perp;                    // int of scaled phi = r int phi
  return std::abs(mpsi * s_psi / TWO_PI) * std::abs(mphi * s_phi / (TWO_PI * TWO_PI));
}

double JetFamily::mean_ww_error(int quad_intervals) const {
  double ipsi = prof_->psi_l2sq_quadrature(quad_intervals);
  double iphi = prof_->phi_l2sq_quadrature(quad_intervals);
  return std::abs(ipsi / TWO_PI * iphi / (TWO_PI * TWO_PI) - 1.0);
}

bool JetFamily::shifts_disjoint(const std::array<Vec3, 6>& alpha, double inflate) const {
  const double cy = dirs_->n_star() * params_.lam_rp();
  const double d = TWO_PI / cy;
  const double rho = params_.r_perp;  // support half-width in the wrapped coordinate
  const int mcount = int(std::ceil(cy)) + 2;
  const double slen = TWO_PI * dirs_->n_star();
  const double sstep = 0.5 * rho / cy;  // half the tube radius in x units
  for (int j = 0; j < 6; ++j) {
    Vec3 xi = dirs_->xi(j), A = dirs_->a_frame(j), B = dirs_->b_frame(j);
    for (int m1 = 0; m1 < mcount; ++m1)
      for (int m2 = 0; m2 < mcount; ++m2) {
        Vec3 x0 = alpha[j] + (d * m1) * A + (d * m2) * B;
        for (double s = 0; s < slen; s += sstep) {
          Vec3 x = x0 + s * xi;
          for (int k = 0; k < 6; ++k) {
            if (k == j) continue;
            Vec3 Ak = dirs_->a_frame(k), Bk = dirs_->b_frame(k);
            double w1 = wrap_pi(cy * dot(x - alpha[k], Ak));
            double w2 = wrap_pi(cy * dot(x - alpha[k], Bk));
            if (w1 * w1 + w2 * w2 < inflate * inflate * (2 * rho) * (2 * rho)) return false;
          }
        }
      }
  }
  return true;
}

void JetFamily::choose_shifts() {
  const double cy = dirs_->n_star() * params_.lam_rp();
  const double d = TWO_PI / cy;
  const double g1 = 0.3819660112501051, g2 = 0.6180339887498949;
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::array<Vec3, 6> cand;
    for (int j = 0; j < 6; ++j) {
      double s1 = std::fmod(g1 * (j + 1) * (attempt + 1) + 0.25 * (j + 1), 1.0);
      double s2 = std::fmod(g2 * (j + 2) * (attempt + 1) + 0.17 * (j + 1), 1.0);
      cand[j] = (d * s1) * dirs_->a_frame(j) + (d * s2) * dirs_->b_frame(j);
    }
    if (shifts_disjoint(cand, 1.25)) {
      alpha_ = cand;
      if (check_disjoint_on_grid() == 0.0) return;
    }
  }
  throw WildError("jet family: no admissible shifts found (supports overlap)");
}

// ---- scaling table -----------------------------------------------------------

namespace {

struct LocalQuad {
  // local integrals of scaled profile derivative powers over their supports
  const Profiles* prof;
  double rp, rq;

  double psi_lp(int deriv, double p) const {
    double unit = prof->psi_norm(deriv, p);
    if (std::isinf(p)) return unit * std::pow(rp, -0.5 - deriv);
    return unit * std::pow(rp, 1.0 / p - 0.5 - deriv);
  }
  double phi_lp(double p) const {
    double unit = prof->phi_norm(p);
    if (std::isinf(p)) return unit / rq;
    return unit * std::pow(rq, 2.0 / p - 1.0);
  }
  double grad_phi_lp(double p) const {
    double unit = prof->grad_phi_norm(p);
    if (std::isinf(p)) return unit / (rq * rq);
    return unit * std::pow(rq, 2.0 / p - 2.0);
  }
};

}  // namespace

JetParams desk_params(double lambda, double rp_exponent, double rpar_exponent) {
  JetParams p;
  p.lambda = lambda;
  double lrp = std::max(1.0, std::round(std::pow(lambda, 1.0 + rp_exponent)));
  p.r_perp = lrp / lambda;
  p.r_par = std::pow(lambda, rpar_exponent);
  if (p.r_par <= p.r_perp) p.r_par = std::min(0.9, 2.0 * p.r_perp);
  p.mu = lambda * p.r_par / p.r_perp;
  p.validate();
  return p;
}

std::vector<BoundsRow> verify_jet_bounds(const Profiles& prof, const DirectionSet& dirs,
                                         const JetParams& params) {
  const double lam = params.lambda, rq = params.r_perp, rp = params.r_par, mu = params.mu;
  const double cy = dirs.n_star() * params.lam_rp();
  LocalQuad q{&prof, rp, rq};
  std::vector<BoundsRow> rows;
  auto push = [&](const std::string& name, double measured, double theory) {
    rows.push_back({name, lam, rq, rp, mu, measured, theory,
                    theory > 0 ? measured / theory : 0.0});
  };

  auto lp_theory = [&](int N, int M, double p) {
    return std::pow(rq, 2.0 / p - 1.0) * std::pow(rp, 1.0 / p - 0.5) * std::pow(lam, N) *
           std::pow(rq * lam * mu / rp, M);
  };

  // ||W||_{L^2} : the L^2(T^3) norm factorizes through the frame coordinates
  double w_l2 = std::sqrt(q.psi_lp(0, 2) * q.psi_lp(0, 2) / TWO_PI * q.phi_lp(2) * q.phi_lp(2) /
                          (TWO_PI * TWO_PI)) *
                VOL_SQRT;
  push("W_L2", w_l2, lp_theory(0, 0, 2));

  // ||grad W||_{L^2}: two orthogonal contributions
  double g1 = cy * q.psi_lp(1, 2) * q.phi_lp(2);      // derivative falls on psi
  double g2 = cy * q.psi_lp(0, 2) * q.grad_phi_lp(2);  // derivative falls on phi
  double w_h1 = std::sqrt((g1 * g1 + g2 * g2) / VOL) * VOL_SQRT;
  push("gradW_L2", w_h1, lp_theory(1, 0, 2));

  // ||W||_{L^inf}
  const double inf = std::numeric_limits<double>::infinity();
  push("W_Linf", q.psi_lp(0, inf) * q.phi_lp(inf), lp_theory(0, 0, inf));

  // ||d_t W||_{L^2}
  double wt = cy * mu *
              std::sqrt(q.psi_lp(1, 2) * q.psi_lp(1, 2) * q.phi_lp(2) * q.phi_lp(2) / VOL) *
              VOL_SQRT;
  push("dtW_L2", wt, lp_theory(0, 1, 2));

  // ||phi_(xi)||_{L^2} and ||psi_(xi)||_{L^2}
  double phi_l2 = std::sqrt(q.phi_lp(2) * q.phi_lp(2) / (TWO_PI * TWO_PI)) * VOL_SQRT;
  push("phi_L2", phi_l2, std::pow(rq, 2.0 / 2 - 1.0));
  double psi_l2 = std::sqrt(q.psi_lp(0, 2) * q.psi_lp(0, 2) / TWO_PI) * VOL_SQRT;
  push("psi_L2", psi_l2, std::pow(rp, 1.0 / 2 - 0.5));

  // ||phi_(xi)||_{H^{-5}} against lambda^{-5} r_perp^{-0.1}
  const double gamma = 5.0, delta = 0.1;
  double acc = 0;
  const int M = 48;
  for (int m1 = -M; m1 <= M; ++m1)
    for (int m2 = -M; m2 <= M; ++m2) {
      if (m1 == 0 && m2 == 0) continue;
      double mm = std::sqrt(double(m1 * m1 + m2 * m2));
      double k = cy * mm;
      double co = prof.phi_hat(rq * mm) * rq / (TWO_PI * TWO_PI);
      acc += std::pow(1.0 + k * k, -gamma) * co * co;
    }
  double hneg = VOL_SQRT * std::sqrt(acc);
  push("phi_Hneg5", hneg, std::pow(lam, -gamma) * std::pow(rq, -delta));

  return rows;
}

double ratio_slope(const std::vector<BoundsRow>& rows, const std::string& quantity) {
  std::vector<double> lx, ly;
  for (const auto& r : rows)
    if (r.quantity == quantity && r.ratio > 0) {
      lx.push_back(std::log(r.lambda));
      ly.push_back(std::log(r.ratio));
    }
  if (lx.size() < 2) throw WildError("ratio_slope: need at least two sweep points");
  double n = double(lx.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace wildns::jets
