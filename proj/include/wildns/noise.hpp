#pragma once

#include <cstdint>

#include "wildns/field.hpp"
#include "wildns/rng.hpp"

namespace wildns::stochastic {

// Q-Wiener specification: diagonal in Fourier, g_k = sigma |k|^{-kexp} on
// divergence-free modes with |k|_inf <= kmax.
struct NoiseSpec {
  enum class Kind { Additive, Multiplicative, Nonlinear };
  Kind kind = Kind::Additive;
  double sigma = 1.0;
  double kexp = 3.5;
  int kmax = 4;
  int bm_dim = 1;  // multiplicative: scalar; nonlinear: m-dimensional
  std::uint64_t seed = 1;
  double dt = 1e-2;
  double T = 1.0;

  int nsteps() const { return int(std::llround(T / dt)); }
};

struct Mode {
  int kx, ky, kz;
  double g;
  double k2() const { return double(kx * kx + ky * ky + kz * kz); }
};

// scalar or R^m Brownian path on a uniform grid
struct SampledPath {
  std::vector<double> t;
  std::vector<std::vector<double>> B;  // [dim][i]
  int dim() const { return int(B.size()); }
};

SampledPath sample_wiener_scalar(std::uint64_t seed, int dim, double dt, int nsteps);

// unit Gaussian innovations for the field-valued noise: xi[step][mode*6 + c*2 + (re|im)]
struct FieldNoiseTape {
  std::vector<Mode> modes;  // half-lattice representatives, k != 0
  std::vector<double> t;
  std::vector<std::vector<double>> xi;
  double trace_gg = 0;  // sum over the full lattice of per-mode noise intensity

  // perturb all innovations at steps strictly greater than `after_step`
  void perturb_after(int after_step, std::uint64_t salt);
};

FieldNoiseTape sample_wiener_field(const NoiseSpec& spec, const field3::Grid3& grid);

// B(t_i) as a spectral field (sums of increments with variance dt g_k^2)
field3::SpectralField wiener_value(const FieldNoiseTape& tape, const field3::Grid3& grid, int step);

// exact Ornstein-Uhlenbeck update of the stochastic convolution
// z(0) = 0, per mode z <- e^{-|k|^2 h} z + g sqrt((1-e^{-2|k|^2 h})/(2|k|^2)) xi
std::vector<field3::SpectralField> stochastic_convolution(const FieldNoiseTape& tape,
                                                          const field3::Grid3& grid);

}  // namespace wildns::stochastic
