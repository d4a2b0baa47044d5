#pragma once

#include <array>

#include "wildns/common.hpp"
#include "wildns/rational.hpp"

namespace wildns::jets {

// Six rational unit directions on S^2 with orthonormal rational frames, chosen so
// that symmetric matrices near the identity decompose as positive combinations
// of xi (x) xi. n_star * frame vectors are integer for torus periodicity.
class DirectionSet {
 public:
  static constexpr int count = 6;

  DirectionSet();

  Vec3 xi(int j) const { return xi_[j]; }
  Vec3 a_frame(int j) const { return a_[j]; }       // A_xi
  Vec3 b_frame(int j) const { return b_[j]; }       // xi x A_xi
  std::array<Rat, 3> xi_exact(int j) const { return xi_q_[j]; }
  int n_star() const { return 5; }

  // solve sum_j c_j xi_j (x) xi_j = R; returns the six c_j (may be negative)
  std::array<double, 6> solve_coefficients(const Sym3& R) const;
  // same in exact rational arithmetic
  std::array<Rat, 6> solve_coefficients_exact(const std::array<Rat, 6>& Rvec) const;

  // gamma_xi(R) = sqrt(c_xi(R)); domain error when any c_xi <= 0 or |R-Id|_F > 1/2
  std::array<double, 6> gamma(const Sym3& R) const;
  // directional derivative of gamma^2 (the solve is linear in R)
  std::array<double, 6> gamma2_tangent(const Sym3& Rdot) const;

  Sym3 reconstruct(const std::array<double, 6>& coeff) const;

  // determinant of the 6x6 decomposition matrix (double path)
  double decomposition_det() const { return det_; }

 private:
  std::array<Vec3, 6> xi_, a_, b_;
  std::array<std::array<Rat, 3>, 6> xi_q_;
  std::array<std::array<double, 36>, 1> lu_;  // LU factors of the 6x6 system
  std::array<int, 6> piv_;
  double det_ = 0;
};

}  // namespace wildns::jets
