#pragma once

#include <cstddef>
#include <functional>

#include "wildns/common.hpp"

namespace wildns::field3 {

enum class Rank { Scalar = 1, Vector = 3, SymTensor = 6 };

inline int ncomp(Rank r) { return int(r); }

// Uniform periodic grid on [0,2pi)^3, n points per axis.
struct Grid3 {
  int n = 0;

  Grid3() = default;
  explicit Grid3(int n_) : n(n_) {
    if (n < 8 || (n & (n - 1)) != 0) throw WildError("Grid3: n must be a power of two >= 8");
  }

  std::size_t npoints() const { return std::size_t(n) * n * n; }
  // r2c half-spectrum size
  std::size_t ncoeff() const { return std::size_t(n) * n * (n / 2 + 1); }
  int nzc() const { return n / 2 + 1; }
  double h() const { return TWO_PI / n; }
  double x(int i) const { return TWO_PI * i / n; }

  // logical wavenumber of storage index along a full axis
  int wavenumber(int idx) const { return idx <= n / 2 ? idx : idx - n; }

  bool operator==(const Grid3& o) const { return n == o.n; }
};

// Field sampled at grid points; component-major storage, row-major (x slow, z fast).
struct RealField {
  Grid3 grid;
  Rank rank = Rank::Scalar;
  std::vector<std::vector<double>> c;  // [comp][point]

  RealField() = default;
  RealField(Grid3 g, Rank r) : grid(g), rank(r), c(ncomp(r), std::vector<double>(g.npoints(), 0.0)) {}

  std::size_t index(int ix, int iy, int iz) const {
    return (std::size_t(ix) * grid.n + iy) * grid.n + iz;
  }
  double& at(int comp, int ix, int iy, int iz) { return c[comp][index(ix, iy, iz)]; }
  double at(int comp, int ix, int iy, int iz) const { return c[comp][index(ix, iy, iz)]; }
};

// Fourier coefficients in the unitary convention: f(x) = (2pi)^{-3/2} sum_k fhat(k) e^{ikx},
// so that ||f||_{L^2}^2 = sum_k |fhat(k)|^2. Real fields, Hermitian half-spectrum storage
// (kz in [0, n/2]).
struct SpectralField {
  Grid3 grid;
  Rank rank = Rank::Scalar;
  std::vector<std::vector<cplx>> c;  // [comp][halfspec index]

  SpectralField() = default;
  SpectralField(Grid3 g, Rank r) : grid(g), rank(r), c(ncomp(r), std::vector<cplx>(g.ncoeff())) {}

  std::size_t index(int ix, int iy, int iz) const {
    return (std::size_t(ix) * grid.n + iy) * grid.nzc() + iz;
  }
  cplx& at(int comp, int ix, int iy, int iz) { return c[comp][index(ix, iy, iz)]; }
  cplx at(int comp, int ix, int iy, int iz) const { return c[comp][index(ix, iy, iz)]; }

  // coefficient at logical wavenumber (kx,ky,kz) with kz >= 0
  cplx coeff(int comp, int kx, int ky, int kz) const {
    int ix = kx >= 0 ? kx : kx + grid.n;
    int iy = ky >= 0 ? ky : ky + grid.n;
    return at(comp, ix, iy, kz);
  }
};

// Parseval weight for a half-spectrum entry (conjugate plane counted implicitly).
inline double hermitian_weight(const Grid3& g, int iz) {
  return (iz == 0 || iz == g.n / 2) ? 1.0 : 2.0;
}

// forward/backward transforms (exact round trip up to rounding)
SpectralField transform(const RealField& f);
RealField inverse_transform(const SpectralField& f);

// iterate half-spectrum indices with logical wavenumbers
template <typename F>
void for_each_mode(const Grid3& g, F&& fn) {
  for (int ix = 0; ix < g.n; ++ix) {
    int kx = g.wavenumber(ix);
    for (int iy = 0; iy < g.n; ++iy) {
      int ky = g.wavenumber(iy);
      std::size_t base = (std::size_t(ix) * g.n + iy) * g.nzc();
      for (int iz = 0; iz < g.nzc(); ++iz) fn(base + iz, kx, ky, iz);
    }
  }
}

}  // namespace wildns::field3
