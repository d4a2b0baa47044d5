#pragma once

#include <functional>

#include "wildns/noise.hpp"
#include "wildns/norms.hpp"
#include "wildns/ops.hpp"

namespace wildns::roughpath {

// Brownian path with its Ito second level. The second level is stored as
// prefix sums of per-step left-point increments, so Chen's relation holds
// algebraically for every grid pair.
struct RoughDriver {
  std::vector<double> t;
  int dim = 0;
  std::vector<std::vector<double>> B;       // [d][i]
  std::vector<std::vector<double>> prefix;  // [j*dim+l][i]
  double alpha = 0.4;

  int steps() const { return int(t.size()) - 1; }
  double inc(int d, int i, int j) const { return B[d][j] - B[d][i]; }
  // BB^{jl}_{i1,i2} = int_s^t (B^j_r - B^j_s) dB^l_r, left-point sum on the grid
  double bb(int j, int l, int i1, int i2) const {
    return prefix[j * dim + l][i2] - prefix[j * dim + l][i1] -
           B[j][i1] * (B[l][i2] - B[l][i1]);
  }
  double rho_alpha() const;
  // running sup over [0, i] of |BB_{s,t}| / |t-s|^expnt
  std::vector<double> bb_seminorm_running(double expnt) const;
};

RoughDriver ito_lift(const stochastic::SampledPath& path, double alpha);
double chen_residual_exhaustive(const RoughDriver& d);

// aggregate a fine path onto a coarser grid (every `factor` samples)
stochastic::SampledPath coarsen(const stochastic::SampledPath& p, int factor);

// ---- controlled paths ---------------------------------------------------------

struct ScalarControlled {
  std::vector<double> y;
  std::vector<std::vector<double>> yp;  // [d][i]
};

double controlled_norm_scalar(const ScalarControlled& cp, const RoughDriver& d);

// field-valued controlled path for an m-dimensional driver:
// y[i][j] is the j-th noise column at time i, yp[i][j*m+l] the Gubinelli block
struct FieldControlled {
  std::vector<std::vector<field3::SpectralField>> y;
  std::vector<std::vector<field3::SpectralField>> yp;
};

// norm in the chosen scale (L2 or sup) over the sampled grid
double controlled_norm_field(const FieldControlled& cp, const RoughDriver& d, bool sup_scale);

// ---- sewing -------------------------------------------------------------------

// compensated left-point sum over dyadic partitions of [i_from, i_to];
// the returned value is the finest (grid) level; level_diffs, when provided,
// receives |I_k - I_{k+1}| for the dyadic hierarchy
double sewing_integral_scalar(const ScalarControlled& cp, const RoughDriver& d, int i_from,
                              int i_to, std::vector<double>* level_diffs = nullptr);

field3::SpectralField sewing_integral_field(const FieldControlled& cp, const RoughDriver& d,
                                            int i_from, int i_to,
                                            std::vector<double>* level_diffs = nullptr);

// ---- cylindrical nonlinearity ------------------------------------------------

struct CylFun {
  std::function<double(double)> h, h1, h2, h3;
};

struct GTerm {
  field3::RealField S;        // divergence-free spatial profile
  field3::RealField pairing;  // test field in the L^2 pairing
  CylFun f;
};

struct GSpec {
  std::vector<GTerm> terms;
  int m() const { return int(terms.size()); }
  bool empty() const { return terms.empty(); }
};

double l2_pairing(const field3::RealField& u, const field3::RealField& phi);

// (G(v+z), DG(v+z) G(v+z)) as a controlled path over the z (and optional v) family
FieldControlled compose_nonlinearity(const std::vector<field3::RealField>* v,
                                     const std::vector<field3::RealField>& z, const GSpec& G,
                                     const RoughDriver& d);

// ---- RPDE ---------------------------------------------------------------------

struct RpdeConfig {
  double picard_C = 1.0;
  double sigma = 0.0;
  int max_halvings = 16;
  int max_sweeps = 64;
  double tol = 1e-12;
};

// mild solution of dz = Lap z dt + G(v+z) dB via windowed Picard iteration
std::vector<field3::SpectralField> solve_rpde(const std::vector<field3::RealField>* v,
                                              const GSpec& G, const RoughDriver& d,
                                              const field3::SpectralField& z0,
                                              const field3::Grid3& grid,
                                              const RpdeConfig& cfg = {});

// mild Euler-Maruyama reference for the same equation
std::vector<field3::SpectralField> euler_maruyama(const std::vector<field3::RealField>* v,
                                                  const GSpec& G,
                                                  const stochastic::SampledPath& path,
                                                  const field3::SpectralField& z0,
                                                  const field3::Grid3& grid);

struct ConsistencyReport {
  std::vector<double> h;
  std::vector<double> median_gap;  // median over paths of sup_t L2 gap vs EM reference
  bool monotone = true;
};

ConsistencyReport ito_consistency_check(const GSpec& G, const field3::Grid3& grid,
                                        std::uint64_t seed, int paths, double T, double h0,
                                        int levels);

}  // namespace wildns::roughpath
