#include "wildns/noise.hpp"

namespace wildns::stochastic {

using field3::Grid3;
using field3::Rank;
using field3::SpectralField;

SampledPath sample_wiener_scalar(std::uint64_t seed, int dim, double dt, int nsteps) {
  if (dt <= 0) throw WildError("sample_wiener_scalar: dt must be positive");
  SampledPath p;
  p.t.resize(nsteps + 1);
  p.B.assign(dim, std::vector<double>(nsteps + 1, 0.0));
  for (int i = 0; i <= nsteps; ++i) p.t[i] = i * dt;
  double sq = std::sqrt(dt);
  for (int d = 0; d < dim; ++d)
    for (int i = 1; i <= nsteps; ++i) {
      Rng r(seed, Rng::mix(0x5a17 + d) ^ Rng::mix(i));
      p.B[d][i] = p.B[d][i - 1] + sq * r.next_normal();
    }
  return p;
}

namespace {

// half-lattice representative: keep one of {k, -k}
bool is_representative(int kx, int ky, int kz) {
  if (kz != 0) return kz > 0;
  if (ky != 0) return ky > 0;
  return kx > 0;
}

}  // namespace

FieldNoiseTape sample_wiener_field(const NoiseSpec& spec, const Grid3& grid) {
  FieldNoiseTape tape;
  int K = spec.kmax;
  if (K >= grid.n / 2) throw WildError("noise: kmax does not fit the grid");
  double sum_g2_full = 0;
  for (int kx = -K; kx <= K; ++kx)
    for (int ky = -K; ky <= K; ++ky)
      for (int kz = -K; kz <= K; ++kz) {
        if (kx == 0 && ky == 0 && kz == 0) continue;
        double k2 = double(kx * kx + ky * ky + kz * kz);
        double g = spec.sigma * std::pow(k2, -0.5 * spec.kexp);
        sum_g2_full += 2.0 * g * g;  // two divergence-free polarizations
        if (is_representative(kx, ky, kz)) tape.modes.push_back({kx, ky, kz, g});
      }
  if (tape.modes.empty() && spec.sigma != 0.0) throw WildError("noise: empty mode set");
  // nonsummable-weight guard for the configured exponent
  if (spec.kexp < 1.6) throw WildError("noise: weights are not summable enough, raise kexp");
  tape.trace_gg = sum_g2_full;

  int nsteps = spec.nsteps();
  tape.t.resize(nsteps + 1);
  for (int i = 0; i <= nsteps; ++i) tape.t[i] = i * spec.dt;
  tape.xi.assign(nsteps + 1, std::vector<double>(tape.modes.size() * 6, 0.0));
  for (int i = 1; i <= nsteps; ++i)
    for (std::size_t m = 0; m < tape.modes.size(); ++m) {
      const Mode& md = tape.modes[m];
      Rng r(spec.seed, Rng::mix(std::uint64_t(md.kx + 512) |
                                (std::uint64_t(md.ky + 512) << 20) |
                                (std::uint64_t(md.kz + 512) << 40)) ^
                           Rng::mix(0x77c0ffee + std::uint64_t(i)));
      for (int c = 0; c < 6; ++c) tape.xi[i][m * 6 + c] = r.next_normal();
    }
  return tape;
}

void FieldNoiseTape::perturb_after(int after_step, std::uint64_t salt) {
  for (std::size_t i = after_step + 1; i < xi.size(); ++i) {
    Rng r(salt, Rng::mix(i));
    for (auto& v : xi[i]) v += 0.5 * r.next_normal();
  }
}

namespace {

// set coefficient of mode k (and its conjugate) from a complex 3-vector,
// projected onto the divergence-free subspace
void add_mode(SpectralField& f, const Mode& md, const cplx* vec, bool project) {
  const Grid3& g = f.grid;
  cplx v[3] = {vec[0], vec[1], vec[2]};
  if (project) {
    double k[3] = {double(md.kx), double(md.ky), double(md.kz)};
    cplx kv = (k[0] * v[0] + k[1] * v[1] + k[2] * v[2]) / md.k2();
    for (int c = 0; c < 3; ++c) v[c] -= k[c] * kv;
  }
  auto put = [&](int kx, int ky, int kz, const cplx* val) {
    if (kz < 0) return;  // conjugate half stored implicitly
    int ix = kx >= 0 ? kx : kx + g.n;
    int iy = ky >= 0 ? ky : ky + g.n;
    for (int c = 0; c < 3; ++c) f.c[c][f.index(ix, iy, kz)] += val[c];
  };
  put(md.kx, md.ky, md.kz, v);
  cplx vc[3] = {std::conj(v[0]), std::conj(v[1]), std::conj(v[2])};
  put(-md.kx, -md.ky, -md.kz, vc);
}

}  // namespace

SpectralField wiener_value(const FieldNoiseTape& tape, const Grid3& grid, int step) {
  SpectralField B(grid, Rank::Vector);
  if (tape.t.size() < 2) return B;
  double sq = std::sqrt(tape.t[1] - tape.t[0]);
  std::vector<cplx> acc(tape.modes.size() * 3, cplx(0, 0));
  for (int i = 1; i <= step; ++i)
    for (std::size_t m = 0; m < tape.modes.size(); ++m)
      for (int c = 0; c < 3; ++c)
        acc[m * 3 + c] += sq * cplx(tape.xi[i][m * 6 + 2 * c], tape.xi[i][m * 6 + 2 * c + 1]) /
                          std::sqrt(2.0);
  for (std::size_t m = 0; m < tape.modes.size(); ++m) {
    cplx v[3];
    for (int c = 0; c < 3; ++c) v[c] = tape.modes[m].g * acc[m * 3 + c];
    add_mode(B, tape.modes[m], v, true);
  }
  return B;
}

std::vector<SpectralField> stochastic_convolution(const FieldNoiseTape& tape, const Grid3& grid) {
  std::vector<SpectralField> z;
  int nsteps = int(tape.t.size()) - 1;
  double h = nsteps >= 1 ? tape.t[1] - tape.t[0] : 0.0;
  std::vector<cplx> state(tape.modes.size() * 3, cplx(0, 0));
  z.emplace_back(grid, Rank::Vector);  // z(0) = 0
  for (int i = 1; i <= nsteps; ++i) {
    for (std::size_t m = 0; m < tape.modes.size(); ++m) {
      const Mode& md = tape.modes[m];
      double k2 = md.k2();
      double decay = std::exp(-k2 * h);
      double amp = md.g * std::sqrt((1.0 - std::exp(-2.0 * k2 * h)) / (2.0 * k2));
      for (int c = 0; c < 3; ++c) {
        cplx xi(tape.xi[i][m * 6 + 2 * c], tape.xi[i][m * 6 + 2 * c + 1]);
        state[m * 3 + c] = decay * state[m * 3 + c] + amp * xi / std::sqrt(2.0);
      }
    }
    SpectralField zi(grid, Rank::Vector);
    for (std::size_t m = 0; m < tape.modes.size(); ++m) {
      cplx v[3] = {state[m * 3], state[m * 3 + 1], state[m * 3 + 2]};
      add_mode(zi, tape.modes[m], v, true);
    }
    z.push_back(std::move(zi));
  }
  return z;
}

}  // namespace wildns::stochastic
