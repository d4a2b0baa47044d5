#include "wildns/directions.hpp"

#include <cmath>

namespace wildns::jets {

namespace {

// sym-vec ordering xx, yy, zz, xy, xz, yz; off-diagonals enter the matrix once
// (the coefficient equation is per entry of the symmetric matrix)
std::array<double, 6> sym_vec(const Sym3& s) {
  return {s.v[0], s.v[1], s.v[2], s.v[3], s.v[4], s.v[5]};
}

}  // namespace

DirectionSet::DirectionSet() {
  const int raw[6][3] = {{3, 4, 0}, {3, -4, 0}, {0, 3, 4}, {0, 3, -4}, {4, 0, 3}, {-4, 0, 3}};
  const int rawa[6][3] = {{-4, 3, 0}, {4, 3, 0}, {0, -4, 3}, {0, 4, 3}, {-3, 0, 4}, {3, 0, 4}};
  for (int j = 0; j < 6; ++j) {
    for (int d = 0; d < 3; ++d) xi_q_[j][d] = Rat(raw[j][d], 5);
    xi_[j] = Vec3{raw[j][0] / 5.0, raw[j][1] / 5.0, raw[j][2] / 5.0};
    a_[j] = Vec3{rawa[j][0] / 5.0, rawa[j][1] / 5.0, rawa[j][2] / 5.0};
    b_[j] = cross(xi_[j], a_[j]);
    // exact frame sanity in rationals
    std::array<Rat, 3> aq = {Rat(rawa[j][0], 5), Rat(rawa[j][1], 5), Rat(rawa[j][2], 5)};
    Rat n2 = xi_q_[j][0] * xi_q_[j][0] + xi_q_[j][1] * xi_q_[j][1] + xi_q_[j][2] * xi_q_[j][2];
    Rat an2 = aq[0] * aq[0] + aq[1] * aq[1] + aq[2] * aq[2];
    Rat dp = xi_q_[j][0] * aq[0] + xi_q_[j][1] * aq[1] + xi_q_[j][2] * aq[2];
    if (n2 != Rat(1) || an2 != Rat(1) || dp != Rat(0))
      throw WildError("direction set: frame is not exactly orthonormal");
  }

  // assemble and factor the 6x6 system: column j = sym_vec(xi_j (x) xi_j)
  double M[36];
  for (int j = 0; j < 6; ++j) {
    auto col = sym_vec(outer_sym(xi_[j]));
    for (int r = 0; r < 6; ++r) M[r * 6 + j] = col[r];
  }
  // LU with partial pivoting
  for (int i = 0; i < 6; ++i) piv_[i] = i;
  det_ = 1.0;
  for (int c = 0; c < 6; ++c) {
    int p = c;
    for (int r = c + 1; r < 6; ++r)
      if (std::abs(M[r * 6 + c]) > std::abs(M[p * 6 + c])) p = r;
    if (p != c) {
      for (int k = 0; k < 6; ++k) std::swap(M[p * 6 + k], M[c * 6 + k]);
      std::swap(piv_[p], piv_[c]);
      det_ = -det_;
    }
    double d = M[c * 6 + c];
    det_ *= d;
    if (std::abs(d) < 1e-6) throw WildError("direction set: decomposition matrix is degenerate");
    for (int r = c + 1; r < 6; ++r) {
      double f = M[r * 6 + c] / d;
      M[r * 6 + c] = f;
      for (int k = c + 1; k < 6; ++k) M[r * 6 + k] -= f * M[c * 6 + k];
    }
  }
  for (int i = 0; i < 36; ++i) lu_[0][i] = M[i];
}

std::array<double, 6> DirectionSet::solve_coefficients(const Sym3& R) const {
  auto rhs = sym_vec(R);
  // piv_ maps factored row -> original row
  std::array<double, 6> bp;
  for (int i = 0; i < 6; ++i) bp[i] = rhs[piv_[i]];
  const double* M = lu_[0].data();
  for (int r = 1; r < 6; ++r)
    for (int c = 0; c < r; ++c) bp[r] -= M[r * 6 + c] * bp[c];
  for (int r = 5; r >= 0; --r) {
    for (int c = r + 1; c < 6; ++c) bp[r] -= M[r * 6 + c] * bp[c];
    bp[r] /= M[r * 6 + r];
  }
  return bp;
}

std::array<Rat, 6> DirectionSet::solve_coefficients_exact(const std::array<Rat, 6>& Rvec) const {
  // exact Gaussian elimination on the rational system
  Rat M[6][7];
  for (int j = 0; j < 6; ++j) {
    std::array<Rat, 3> x = xi_q_[j];
    Rat col[6] = {x[0] * x[0], x[1] * x[1], x[2] * x[2], x[0] * x[1], x[0] * x[2], x[1] * x[2]};
    for (int r = 0; r < 6; ++r) M[r][j] = col[r];
  }
  for (int r = 0; r < 6; ++r) M[r][6] = Rvec[r];
  for (int c = 0; c < 6; ++c) {
    int p = -1;
    for (int r = c; r < 6; ++r)
      if (M[r][c].num != 0) {
        p = r;
        break;
      }
    if (p < 0) throw WildError("direction set: exact system singular");
    if (p != c)
      for (int k = 0; k <= 6; ++k) std::swap(M[p][k], M[c][k]);
    for (int r = 0; r < 6; ++r) {
      if (r == c || M[r][c].num == 0) continue;
      Rat f = M[r][c] / M[c][c];
      for (int k = c; k <= 6; ++k) M[r][k] = M[r][k] - f * M[c][k];
    }
  }
  std::array<Rat, 6> out;
  for (int r = 0; r < 6; ++r) out[r] = M[r][6] / M[r][r];
  return out;
}

std::array<double, 6> DirectionSet::gamma(const Sym3& R) const {
  Sym3 dev = R - sym_identity();
  if (dev.frobenius() > 0.5 + 1e-12)
    throw WildError("gamma: matrix outside the 1/2-ball around the identity");
  auto c = solve_coefficients(R);
  std::array<double, 6> g;
  for (int j = 0; j < 6; ++j) {
    if (c[j] <= 0) throw WildError("gamma: nonpositive coefficient, input outside usable domain");
    g[j] = std::sqrt(c[j]);
  }
  return g;
}

std::array<double, 6> DirectionSet::gamma2_tangent(const Sym3& Rdot) const {
  return solve_coefficients(Rdot);
}

Sym3 DirectionSet::reconstruct(const std::array<double, 6>& coeff) const {
  Sym3 s;
  for (int j = 0; j < 6; ++j) s = s + coeff[j] * outer_sym(xi_[j]);
  return s;
}

}  // namespace wildns::jets
