#include "wildns/galerkin.hpp"

#include "wildns/norms.hpp"
#include "wildns/ops.hpp"

namespace wildns::stochastic {

using field3::Grid3;
using field3::Rank;
using field3::RealField;
using field3::SpectralField;

namespace {

SpectralField truncate_cube(const SpectralField& f, int N) {
  SpectralField out(f.grid, f.rank);
  field3::for_each_mode(f.grid, [&](std::size_t i, int kx, int ky, int kz) {
    if (std::abs(kx) > N || std::abs(ky) > N || kz > N) return;
    for (int c = 0; c < ncomp(f.rank); ++c) out.c[c][i] = f.c[c][i];
  });
  return out;
}

double l2_of(const SpectralField& f) { return field3::sobolev_norm(f, 0.0); }

// inner product sum_k wgt <f, g>
double inner(const SpectralField& a, const SpectralField& b) {
  double acc = 0;
  field3::for_each_mode(a.grid, [&](std::size_t i, int, int, int kz) {
    double w = field3::hermitian_weight(a.grid, kz);
    for (int c = 0; c < ncomp(a.rank); ++c)
      acc += w * (a.c[c][i].real() * b.c[c][i].real() + a.c[c][i].imag() * b.c[c][i].imag());
  });
  return acc;
}

}  // namespace

EnergyStats galerkin_reference(const NoiseSpec& spec, const SpectralField& u0,
                               const GalerkinConfig& cfg) {
  Grid3 grid(cfg.grid_n);
  if (cfg.grid_n < 3 * cfg.n_modes + 1)
    throw WildError("galerkin: grid too small for exact truncated products");
  int nsteps = int(std::llround(cfg.T / cfg.dt));
  double h = cfg.dt;

  EnergyStats stats;
  stats.t.resize(nsteps + 1);
  for (int i = 0; i <= nsteps; ++i) stats.t[i] = i * h;
  stats.energy.assign(cfg.replicas, std::vector<double>(nsteps + 1, 0.0));

  for (int rep = 0; rep < cfg.replicas; ++rep) {
    NoiseSpec rspec = spec;
    rspec.seed = Rng::mix(spec.seed) ^ Rng::mix(0xabcd1234 + rep);
    rspec.dt = h;
    rspec.T = cfg.T;
    FieldNoiseTape tape;
    if (spec.kind == NoiseSpec::Kind::Additive) {
      tape = sample_wiener_field(rspec, grid);
      stats.trace_gg = tape.trace_gg;
    }
    Rng scalar_rng(rspec.seed, 0x9d);

    SpectralField u = truncate_cube(field3::leray_project(u0), cfg.n_modes);
    stats.energy[rep][0] = l2_of(u) * l2_of(u);

    for (int i = 1; i <= nsteps; ++i) {
      RealField up = inverse_transform(u);
      double umax = field3::pointwise_sup(up);
      if (h * umax * cfg.n_modes > 1.0)
        throw WildError("galerkin: CFL cap violated, reduce dt");

      SpectralField T = transform(field3::outer_product_sym(up, up));
      SpectralField divT = field3::divergence_tensor(T);
      SpectralField N = truncate_cube(field3::leray_project(divT), cfg.n_modes);

      // nonlinear term is energy-neutral on the truncated system
      double leak = std::abs(inner(N, u));
      double scale = l2_of(N) * l2_of(u);
      if (scale > 0) {
        stats.max_nonlinear_leak = std::max(stats.max_nonlinear_leak, leak / scale);
        if (leak / scale > cfg.energy_neutral_tol)
          throw WildError("galerkin: nonlinear energy leak above tolerance");
      }

      // integrating factor step: exact heat on (u - h*N), then exact noise
      field3::for_each_mode(grid, [&](std::size_t idx, int kx, int ky, int kz) {
        double decay = std::exp(-double(kx * kx + ky * ky + kz * kz) * h);
        for (int c = 0; c < 3; ++c) u.c[c][idx] = decay * (u.c[c][idx] - h * N.c[c][idx]);
      });

      if (spec.kind == NoiseSpec::Kind::Additive) {
        for (std::size_t m = 0; m < tape.modes.size(); ++m) {
          const Mode& md = tape.modes[m];
          if (std::abs(md.kx) > cfg.n_modes || std::abs(md.ky) > cfg.n_modes ||
              std::abs(md.kz) > cfg.n_modes)
            continue;
          double k2 = md.k2();
          double amp = md.g * std::sqrt((1.0 - std::exp(-2.0 * k2 * h)) / (2.0 * k2));
          cplx v[3];
          for (int c = 0; c < 3; ++c)
            v[c] = amp *
                   cplx(tape.xi[i][m * 6 + 2 * c], tape.xi[i][m * 6 + 2 * c + 1]) /
                   std::sqrt(2.0);
          // divergence-free injection onto the +-k pair
          double kk[3] = {double(md.kx), double(md.ky), double(md.kz)};
          cplx kv = (kk[0] * v[0] + kk[1] * v[1] + kk[2] * v[2]) / k2;
          for (int c = 0; c < 3; ++c) v[c] -= kk[c] * kv;
          int ix = md.kx >= 0 ? md.kx : md.kx + grid.n;
          int iy = md.ky >= 0 ? md.ky : md.ky + grid.n;
          if (md.kz >= 0) {
            std::size_t idx = u.index(ix, iy, md.kz);
            for (int c = 0; c < 3; ++c) u.c[c][idx] += v[c];
          }
          int jx = md.kx <= 0 ? -md.kx : grid.n - md.kx;
          int jy = md.ky <= 0 ? -md.ky : grid.n - md.ky;
          if (-md.kz >= 0) {
            std::size_t idx = u.index(jx, jy, -md.kz);
            for (int c = 0; c < 3; ++c) u.c[c][idx] += std::conj(v[c]);
          }
        }
      } else if (spec.kind == NoiseSpec::Kind::Multiplicative) {
        double dB = std::sqrt(h) * scalar_rng.next_normal();
        double factor = std::exp(dB - 0.5 * h);
        for (int c = 0; c < 3; ++c)
          for (auto& z : u.c[c]) z *= factor;
      }

      double e = l2_of(u);
      stats.energy[rep][i] = e * e;
    }
  }

  // summary with 95% CI of the mean
  int R = cfg.replicas;
  stats.mean.resize(nsteps + 1);
  stats.ci_lo.resize(nsteps + 1);
  stats.ci_hi.resize(nsteps + 1);
  stats.bound.resize(nsteps + 1);
  double e0 = stats.energy[0][0];
  for (int i = 0; i <= nsteps; ++i) {
    // pairwise summation for order-independent reduction
    std::vector<double> vals(R);
    for (int r = 0; r < R; ++r) vals[r] = stats.energy[r][i];
    std::function<double(int, int)> psum = [&](int lo, int hi) -> double {
      if (hi - lo == 1) return vals[lo];
      int mid = (lo + hi) / 2;
      return psum(lo, mid) + psum(mid, hi);
    };
    double mean = psum(0, R) / R;
    double var = 0;
    for (int r = 0; r < R; ++r) var += (vals[r] - mean) * (vals[r] - mean);
    var = R > 1 ? var / (R - 1) : 0.0;
    double half = 1.96 * std::sqrt(var / R);
    stats.mean[i] = mean;
    stats.ci_lo[i] = mean - half;
    stats.ci_hi[i] = mean + half;
    stats.bound[i] = spec.kind == NoiseSpec::Kind::Multiplicative
                         ? std::exp(stats.t[i]) * e0
                         : e0 + stats.t[i] * stats.trace_gg;
    if (stats.ci_lo[i] > stats.bound[i]) stats.bound_satisfied = false;
  }
  return stats;
}

}  // namespace wildns::stochastic
