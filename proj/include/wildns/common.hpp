#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wildns {

using cplx = std::complex<double>;

inline constexpr double TWO_PI = 6.28318530717958647692;
// (2*pi)^{3/2}, the volume factor of the unitary Fourier convention on T^3
inline const double VOL_SQRT = std::pow(TWO_PI, 1.5);
inline const double VOL = TWO_PI * TWO_PI * TWO_PI;

struct Vec3 {
  double x = 0, y = 0, z = 0;
  double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

// symmetric 3x3, component order xx, yy, zz, xy, xz, yz
struct Sym3 {
  std::array<double, 6> v{};
  static int idx(int i, int j) {
    if (i == j) return i;
    int a = std::min(i, j), b = std::max(i, j);
    if (a == 0 && b == 1) return 3;
    if (a == 0 && b == 2) return 4;
    return 5;
  }
  double operator()(int i, int j) const { return v[idx(i, j)]; }
  double& at(int i, int j) { return v[idx(i, j)]; }
  double trace() const { return v[0] + v[1] + v[2]; }
  double frobenius() const {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] +
                     2 * (v[3] * v[3] + v[4] * v[4] + v[5] * v[5]));
  }
};

inline Sym3 operator+(Sym3 a, Sym3 b) {
  Sym3 r;
  for (int i = 0; i < 6; ++i) r.v[i] = a.v[i] + b.v[i];
  return r;
}
inline Sym3 operator-(Sym3 a, Sym3 b) {
  Sym3 r;
  for (int i = 0; i < 6; ++i) r.v[i] = a.v[i] - b.v[i];
  return r;
}
inline Sym3 operator*(double s, Sym3 a) {
  Sym3 r;
  for (int i = 0; i < 6; ++i) r.v[i] = s * a.v[i];
  return r;
}
inline Sym3 sym_identity() {
  Sym3 r;
  r.v[0] = r.v[1] = r.v[2] = 1.0;
  return r;
}
inline Sym3 outer_sym(Vec3 a) {
  Sym3 r;
  r.v[0] = a.x * a.x;
  r.v[1] = a.y * a.y;
  r.v[2] = a.z * a.z;
  r.v[3] = a.x * a.y;
  r.v[4] = a.x * a.z;
  r.v[5] = a.y * a.z;
  return r;
}

struct WildError : std::runtime_error {
  explicit WildError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wildns
