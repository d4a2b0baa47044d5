#pragma once

#include <array>

#include "wildns/common.hpp"

namespace wildns::jets {

// value and derivatives of a 1D profile at a point
struct Bundle1 {
  double v = 0, d1 = 0, d2 = 0, d3 = 0;
};

// value and derivatives of a radial 2D profile at a point
struct Bundle2 {
  double v = 0, d1 = 0, d2 = 0;        // gradient components
  double d11 = 0, d12 = 0, d22 = 0;    // Hessian
};

// The cut-off family behind the jets: a radial C^infty bump
// chi(u) = c * exp(-1/(1-|u|^2)) on the unit disk, with
//   Phi = -Lap chi   and   phi = Lap^2 chi,
// all sharing one scale c fixed so that (1/4pi^2) int phi^2 = 1.
// psi is the derivative of the 1D bump, rescaled so (1/2pi) int psi^2 = 1.
class Profiles {
 public:
  Profiles();

  // unit-argument evaluation; zero bundles outside the support
  Bundle1 psi(double x) const;
  Bundle2 phi(double u1, double u2) const;
  Bundle2 big_phi(double u1, double u2) const;

  double chi_scale() const { return c_chi_; }
  double psi_scale() const { return c_psi_; }

  // L^p(R) / L^p(R^2) norms of unit-profile derivatives (p may be infinity)
  double psi_norm(int deriv, double p) const;
  double phi_norm(double p) const;        // |phi|
  double grad_phi_norm(double p) const;   // |grad phi|

  // radial Fourier transform of phi on R^2 and |psi-hat| on R
  double phi_hat(double kappa) const;
  double psi_hat_abs(double kappa) const;

  // independent re-quadrature of the normalization integrals (oracle hook)
  double phi_l2sq_quadrature(int intervals) const;
  double psi_l2sq_quadrature(int intervals) const;

 private:
  double c_chi_ = 1.0;
  double c_psi_ = 1.0;
};

// bump derivative machinery: d^n/ds^n exp(-1/(1-s)) = P_n(w) exp(-1/(1-s)),
// w = 1/(1-s); exposed for tests
double bump_g_deriv(int order, double s);

}  // namespace wildns::jets
