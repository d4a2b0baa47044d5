#pragma once

#include "wildns/noise.hpp"
#include "wildns/norms.hpp"

namespace wildns::stochastic {

// one-sided (causal) time mollifier on [0, ell]: smooth bump, mass one on the
// sampling grid; derivative weights are the exact t-derivative of the kernel
struct CausalKernel {
  double ell = 0;
  double dt = 0;
  std::vector<double> w;   // weights, offset j means time t - j*dt
  std::vector<double> dw;  // exact derivative weights

  CausalKernel() = default;
  CausalKernel(double ell_, double dt_);
  int taps() const { return int(w.size()); }
};

struct StoppingRule {
  enum class Variant { Additive, Multiplicative, Nonlinear };
  Variant variant = Variant::Additive;
  double L = 2.0;
  double delta = 1.0 / 24;  // must stay below 1/12
  double C_S = 1.0;         // Sobolev constant, config scalar

  double cap() const {
    return variant == Variant::Nonlinear ? std::log(std::log(L)) : L;
  }
};

// first grid time at which any observable reaches its threshold, else cap
double hitting_time(const std::vector<double>& tgrid,
                    const std::vector<std::vector<double>>& observables,
                    const std::vector<double>& thresholds, double cap);

// additive rule: observables ||z(t)||_{H^{1-delta}} and running ||z||_{C^{1/2-2d}_t L^2}
double stopping_time_additive(const std::vector<double>& tgrid,
                              const std::vector<field3::SpectralField>& z,
                              const StoppingRule& rule);

// multiplicative rule on a scalar path: |B(t)| and running Hoelder seminorm
double stopping_time_multiplicative(const SampledPath& B, const StoppingRule& rule);

// nonlinear rule: Hoelder norm of B, the second-level seminorm, and ||z0(t)||_{L^2}
double stopping_time_nonlinear(const std::vector<double>& tgrid,
                               const std::vector<double>& holderB,
                               const std::vector<double>& bb_seminorm,
                               const std::vector<double>& z0_l2, const StoppingRule& rule);

// running Hoelder seminorm of a scalar series: out[i] = seminorm on [0, t_i]
std::vector<double> running_holder(const std::vector<double>& t, const std::vector<double>& x,
                                   double alpha);

struct ThetaPath {
  std::vector<double> t;
  std::vector<double> theta;      // e^{B_t}
  std::vector<double> theta_ell;  // causal mollification
  std::vector<double> dtheta_ell; // exact derivative of the mollified path
};

ThetaPath theta_path(const SampledPath& B, double ell);

// pathwise bound max(|theta|, |theta^{-1}|, Hoelder) on [0, t_stop] vs m_L^2
double theta_bound_check(const ThetaPath& th, double t_stop, double L, double delta);

}  // namespace wildns::stochastic
