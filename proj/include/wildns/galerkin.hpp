#pragma once

#include "wildns/noise.hpp"

namespace wildns::stochastic {

struct GalerkinConfig {
  int n_modes = 10;        // spectral cutoff |k|_inf
  int grid_n = 32;         // working grid (>= 3*n_modes for exact cubic quadrature)
  double dt = 1e-2;
  double T = 1.0;
  int replicas = 8;
  std::uint64_t seed = 1;
  double energy_neutral_tol = 1e-10;  // per-step <div(u x u), u> check
};

struct EnergyStats {
  std::vector<double> t;
  std::vector<std::vector<double>> energy;  // [replica][time]
  std::vector<double> mean, ci_lo, ci_hi;   // 95% CI of the mean
  std::vector<double> bound;                // theory envelope
  bool bound_satisfied = true;
  double trace_gg = 0;
  double max_nonlinear_leak = 0;  // worst |<div(u x u), u>| / scale seen
};

// semi-implicit Galerkin reference: exact heat factor per mode, explicit
// truncated nonlinearity, exact noise increments
EnergyStats galerkin_reference(const NoiseSpec& spec, const field3::SpectralField& u0,
                               const GalerkinConfig& cfg);

}  // namespace wildns::stochastic
