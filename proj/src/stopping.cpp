#include "wildns/stopping.hpp"

namespace wildns::stochastic {

CausalKernel::CausalKernel(double ell_, double dt_) : ell(ell_), dt(dt_) {
  if (ell < 2 * dt) throw WildError("causal kernel: ell below time-grid resolution");
  auto bump = [](double u) { return (u > 0 && u < 1) ? std::exp(-1.0 / (u * (1 - u))) : 0.0; };
  auto dbump = [&](double u) {
    if (u <= 0 || u >= 1) return 0.0;
    double b = bump(u);
    double d = (2 * u - 1) / (u * u * (1 - u) * (1 - u));
    return b * d;
  };
  int taps = int(std::floor(ell / dt)) + 1;
  w.resize(taps);
  dw.resize(taps);
  double z = 0;
  for (int j = 0; j < taps; ++j) {
    w[j] = bump(j * dt / ell);
    z += w[j] * dt;
  }
  if (z <= 0) throw WildError("causal kernel: degenerate weights");
  for (int j = 0; j < taps; ++j) {
    w[j] = w[j] * dt / z;
    dw[j] = -dbump(j * dt / ell) / ell * dt / z;  // d/dt of kernel(t - t_j)
  }
}

double hitting_time(const std::vector<double>& tgrid,
                    const std::vector<std::vector<double>>& observables,
                    const std::vector<double>& thresholds, double cap) {
  if (tgrid.empty()) throw WildError("hitting_time: empty grid");
  if (observables.size() != thresholds.size())
    throw WildError("hitting_time: observable/threshold count mismatch");
  for (std::size_t i = 0; i < tgrid.size(); ++i) {
    if (tgrid[i] > cap) return cap;
    for (std::size_t o = 0; o < observables.size(); ++o)
      if (observables[o][i] >= thresholds[o]) return tgrid[i];
  }
  return cap;
}

std::vector<double> running_holder(const std::vector<double>& t, const std::vector<double>& x,
                                   double alpha) {
  std::vector<double> out(t.size(), 0.0);
  double best = 0;
  for (std::size_t i = 1; i < t.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      best = std::max(best, std::abs(x[i] - x[j]) / std::pow(t[i] - t[j], alpha));
    out[i] = best;
  }
  return out;
}

double stopping_time_additive(const std::vector<double>& tgrid,
                              const std::vector<field3::SpectralField>& z,
                              const StoppingRule& rule) {
  std::vector<double> h1d(tgrid.size()), l2(tgrid.size());
  for (std::size_t i = 0; i < tgrid.size(); ++i) {
    h1d[i] = field3::sobolev_norm(z[i], 1.0 - rule.delta);
    l2[i] = field3::sobolev_norm(z[i], 0.0);
  }
  (void)l2;
  // running L^2-valued Hoelder seminorm on field differences
  std::vector<double> hold2(tgrid.size(), 0.0);
  {
    double run = 0;
    for (std::size_t i = 1; i < tgrid.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        double acc = 0;
        field3::for_each_mode(z[i].grid, [&](std::size_t idx, int, int, int kz) {
          double w = field3::hermitian_weight(z[i].grid, kz);
          for (int c = 0; c < 3; ++c) acc += w * std::norm(z[i].c[c][idx] - z[j].c[c][idx]);
        });
        run = std::max(run, std::sqrt(acc) / std::pow(tgrid[i] - tgrid[j], 0.5 - 2 * rule.delta));
      }
      hold2[i] = run;
    }
  }
  double th1 = std::pow(rule.L, 0.25) / rule.C_S;
  double th2 = std::sqrt(rule.L) / rule.C_S;
  return hitting_time(tgrid, {h1d, hold2}, {th1, th2}, rule.cap());
}

double stopping_time_multiplicative(const SampledPath& B, const StoppingRule& rule) {
  std::vector<double> absB(B.t.size());
  for (std::size_t i = 0; i < B.t.size(); ++i) absB[i] = std::abs(B.B[0][i]);
  std::vector<double> hold = running_holder(B.t, B.B[0], 0.5 - 2 * rule.delta);
  return hitting_time(B.t, {absB, hold}, {std::pow(rule.L, 0.25), std::sqrt(rule.L)}, rule.cap());
}

double stopping_time_nonlinear(const std::vector<double>& tgrid,
                               const std::vector<double>& holderB,
                               const std::vector<double>& bb_seminorm,
                               const std::vector<double>& z0_l2, const StoppingRule& rule) {
  double lnln = std::log(std::log(rule.L));
  return hitting_time(tgrid, {holderB, bb_seminorm, z0_l2}, {lnln, lnln, rule.L}, rule.cap());
}

ThetaPath theta_path(const SampledPath& B, double ell) {
  ThetaPath th;
  th.t = B.t;
  std::size_t n = B.t.size();
  th.theta.resize(n);
  for (std::size_t i = 0; i < n; ++i) th.theta[i] = std::exp(B.B[0][i]);
  double dt = n > 1 ? B.t[1] - B.t[0] : 1.0;
  CausalKernel ker(ell, dt);
  th.theta_ell.resize(n);
  th.dtheta_ell.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0, dacc = 0;
    for (int j = 0; j < ker.taps(); ++j) {
      std::size_t src = i >= std::size_t(j) ? i - j : 0;  // constant extension before 0
      acc += ker.w[j] * th.theta[src];
      dacc += ker.dw[j] * th.theta[src];
    }
    th.theta_ell[i] = acc;
    th.dtheta_ell[i] = dacc;
  }
  return th;
}

double theta_bound_check(const ThetaPath& th, double t_stop, double L, double delta) {
  double mL2 = 3.0 * std::sqrt(L) * std::exp(std::pow(L, 0.25));
  double worst = 0;
  std::vector<double> tt, xx;
  for (std::size_t i = 0; i < th.t.size() && th.t[i] <= t_stop; ++i) {
    worst = std::max({worst, th.theta[i], 1.0 / th.theta[i]});
    tt.push_back(th.t[i]);
    xx.push_back(th.theta[i]);
  }
  if (tt.size() > 1) {
    auto hold = running_holder(tt, xx, 0.5 - 2 * delta);
    worst = std::max(worst, hold.back());
  }
  return worst / mL2;
}

}  // namespace wildns::stochastic
