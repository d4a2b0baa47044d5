#pragma once

#include <optional>

#include "wildns/directions.hpp"
#include "wildns/field.hpp"
#include "wildns/profiles.hpp"

namespace wildns::jets {

struct JetParams {
  double lambda = 0;   // spatial frequency; lambda * r_perp must be a natural number
  double r_perp = 0;   // concentration scale across the jet
  double r_par = 0;    // concentration scale along the jet
  double mu = 0;       // temporal oscillation speed

  void validate() const;
  double lam_rp() const { return lambda * r_perp; }
};

// per-direction engine bundle at one time, sampled on a grid
struct JetSlice {
  field3::RealField W;             // vector: xi psi phi
  field3::RealField Wc;            // vector: corrector
  field3::RealField V;             // vector: vector potential
  field3::RealField curlV;         // vector
  field3::RealField dtV;           // vector: time derivative of V
  field3::RealField psi2phi2;      // scalar: psi^2 phi^2
  field3::RealField dt_psi2phi2;   // scalar: d/dt (psi^2 phi^2)
};

class JetFamily {
 public:
  JetFamily(const DirectionSet& dirs, const Profiles& prof, const JetParams& params,
            const field3::Grid3& grid);

  const JetParams& params() const { return params_; }
  const DirectionSet& directions() const { return *dirs_; }
  Vec3 shift(int j) const { return alpha_[j]; }

  JetSlice slice(int j, double t) const;
  field3::RealField psi_field(int j, double t) const;
  field3::RealField phi_field(int j) const;
  field3::RealField big_phi_field(int j) const;

  // identity diagnostics (relative residuals)
  double check_divergence_free(double t) const;  // div(W + Wc), analytic routes
  double check_curlcurl(double t) const;         // W + Wc vs curl curl V
  double check_disjoint_on_grid() const;         // sup over pairs of |Phi_j Phi_j'|
  double check_mean_zero() const;                // quadrature bound on |avg W|
  double mean_ww_error(int quad_intervals = 50001) const;  // |avg(psi^2 phi^2) - 1|

 private:
  struct PointEval;
  PointEval eval_point(int j, double t, double x0, double x1, double x2) const;
  void choose_shifts();
  bool shifts_disjoint(const std::array<Vec3, 6>& alpha, double inflate) const;

  const DirectionSet* dirs_;
  const Profiles* prof_;
  JetParams params_;
  field3::Grid3 grid_;
  std::array<Vec3, 6> alpha_;
};

// measured-vs-theory constants for the scaling menu
struct BoundsRow {
  std::string quantity;
  double lambda = 0, r_perp = 0, r_par = 0, mu = 0;
  double measured = 0, theory = 0, ratio = 0;
};

std::vector<BoundsRow> verify_jet_bounds(const Profiles& prof, const DirectionSet& dirs,
                                         const JetParams& params);

// log-log slope of ratio vs lambda for one quantity across a sweep
double ratio_slope(const std::vector<BoundsRow>& rows, const std::string& quantity);

// desk-scale parameter rule: r_perp from the regime exponent with
// lambda * r_perp rounded to a natural number
JetParams desk_params(double lambda, double rp_exponent, double rpar_exponent);

}  // namespace wildns::jets
