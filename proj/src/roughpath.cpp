#include "wildns/roughpath.hpp"

#include <algorithm>

namespace wildns::roughpath {

using field3::Grid3;
using field3::Rank;
using field3::RealField;
using field3::SpectralField;

double RoughDriver::rho_alpha() const {
  int n = int(t.size());
  double s1 = 0, s2 = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double dt = t[j] - t[i];
      double b2 = 0;
      for (int d = 0; d < dim; ++d) b2 += inc(d, i, j) * inc(d, i, j);
      s1 = std::max(s1, std::sqrt(b2) / std::pow(dt, alpha));
      double f2 = 0;
      for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) f2 += bb(a, b, i, j) * bb(a, b, i, j);
      s2 = std::max(s2, std::sqrt(f2) / std::pow(dt, 2 * alpha));
    }
  return s1 + s2;
}

std::vector<double> RoughDriver::bb_seminorm_running(double expnt) const {
  int n = int(t.size());
  std::vector<double> out(n, 0.0);
  double best = 0;
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      double f2 = 0;
      for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) f2 += bb(a, b, j, i) * bb(a, b, j, i);
      best = std::max(best, std::sqrt(f2) / std::pow(t[i] - t[j], expnt));
    }
    out[i] = best;
  }
  return out;
}

RoughDriver ito_lift(const stochastic::SampledPath& path, double alpha) {
  if (path.t.size() < 2) throw WildError("ito_lift: need at least 2 samples");
  RoughDriver d;
  d.t = path.t;
  d.B = path.B;
  d.dim = path.dim();
  d.alpha = alpha;
  int n = int(path.t.size());
  d.prefix.assign(d.dim * d.dim, std::vector<double>(n, 0.0));
  for (int j = 0; j < d.dim; ++j)
    for (int l = 0; l < d.dim; ++l) {
      auto& p = d.prefix[j * d.dim + l];
      for (int i = 1; i < n; ++i)
        p[i] = p[i - 1] + d.B[j][i - 1] * (d.B[l][i] - d.B[l][i - 1]);
    }
  return d;
}

double chen_residual_exhaustive(const RoughDriver& d) {
  int n = int(d.t.size());
  double worst = 0;
  for (int i = 0; i < n; ++i)
    for (int u = i + 1; u < n; ++u)
      for (int j = u + 1; j < n; ++j)
        for (int a = 0; a < d.dim; ++a)
          for (int b = 0; b < d.dim; ++b) {
            double r = d.bb(a, b, i, j) - d.bb(a, b, i, u) - d.bb(a, b, u, j) -
                       d.inc(a, i, u) * d.inc(b, u, j);
            worst = std::max(worst, std::abs(r));
          }
  return worst;
}

stochastic::SampledPath coarsen(const stochastic::SampledPath& p, int factor) {
  stochastic::SampledPath out;
  int n = (int(p.t.size()) - 1) / factor;
  out.t.resize(n + 1);
  out.B.assign(p.dim(), std::vector<double>(n + 1));
  for (int i = 0; i <= n; ++i) {
    out.t[i] = p.t[i * factor];
    for (int d = 0; d < p.dim(); ++d) out.B[d][i] = p.B[d][i * factor];
  }
  return out;
}

double controlled_norm_scalar(const ScalarControlled& cp, const RoughDriver& d) {
  int n = int(d.t.size());
  double ny = 0, nyp = 0, nyph = 0, nr = 0;
  for (int i = 0; i < n; ++i) {
    ny = std::max(ny, std::abs(cp.y[i]));
    for (int a = 0; a < d.dim; ++a) nyp = std::max(nyp, std::abs(cp.yp[a][i]));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double dt = std::pow(d.t[j] - d.t[i], d.alpha);
      for (int a = 0; a < d.dim; ++a)
        nyph = std::max(nyph, std::abs(cp.yp[a][j] - cp.yp[a][i]) / dt);
      double rem = cp.y[j] - cp.y[i];
      for (int a = 0; a < d.dim; ++a) rem -= cp.yp[a][i] * d.inc(a, i, j);
      nr = std::max(nr, std::abs(rem) / std::pow(d.t[j] - d.t[i], 2 * d.alpha));
    }
  return ny + nyp + nyph + nr;
}

namespace {

double field_norm(const SpectralField& f, bool sup_scale) {
  if (!sup_scale) return field3::sobolev_norm(f, 0.0);
  return field3::pointwise_sup(inverse_transform(f));
}

}  // namespace

double controlled_norm_field(const FieldControlled& cp, const RoughDriver& d, bool sup_scale) {
  int n = int(cp.y.size());
  int m = d.dim;
  double ny = 0, nyp = 0, nyph = 0, nr = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) ny = std::max(ny, field_norm(cp.y[i][j], sup_scale));
    for (auto& f : cp.yp[i]) nyp = std::max(nyp, field_norm(f, sup_scale));
  }
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k) {
      double da = std::pow(d.t[k] - d.t[i], d.alpha);
      double d2a = std::pow(d.t[k] - d.t[i], 2 * d.alpha);
      for (int jl = 0; jl < m * m; ++jl) {
        SpectralField diff = cp.yp[k][jl];
        for (int c = 0; c < ncomp(diff.rank); ++c)
          for (std::size_t q = 0; q < diff.c[c].size(); ++q)
            diff.c[c][q] -= cp.yp[i][jl].c[c][q];
        nyph = std::max(nyph, field_norm(diff, sup_scale) / da);
      }
      for (int j = 0; j < m; ++j) {
        SpectralField rem = cp.y[k][j];
        for (int c = 0; c < ncomp(rem.rank); ++c)
          for (std::size_t q = 0; q < rem.c[c].size(); ++q) {
            cplx r = rem.c[c][q] - cp.y[i][j].c[c][q];
            for (int l = 0; l < m; ++l)
              r -= cp.yp[i][j * m + l].c[c][q] * d.inc(l, i, k);
            rem.c[c][q] = r;
          }
        nr = std::max(nr, field_norm(rem, sup_scale) / d2a);
      }
    }
  return ny + nyp + nyph + nr;
}

double sewing_integral_scalar(const ScalarControlled& cp, const RoughDriver& d, int i_from,
                              int i_to, std::vector<double>* level_diffs) {
  int len = i_to - i_from;
  if (len <= 0) return 0.0;
  int K = 0;
  while ((1 << K) < len) ++K;
  if ((1 << K) != len) throw WildError("sewing: non-dyadic grid segment");

  auto level_sum = [&](int k) {
    int step = len >> k;
    double acc = 0;
    for (int u = i_from; u < i_to; u += step) {
      int v = u + step;
      for (int a = 0; a < d.dim; ++a) {
        acc += cp.y[u] * d.inc(a, u, v);
        for (int b = 0; b < d.dim; ++b) acc += cp.yp[b][u] * d.bb(b, a, u, v);
      }
    }
    return acc;
  };

  double prev = level_sum(0), fin = prev;
  if (level_diffs) level_diffs->clear();
  for (int k = 1; k <= K; ++k) {
    double cur = level_sum(k);
    if (level_diffs) level_diffs->push_back(std::abs(cur - prev));
    prev = cur;
    fin = cur;
  }
  return fin;
}

SpectralField sewing_integral_field(const FieldControlled& cp, const RoughDriver& d, int i_from,
                                    int i_to, std::vector<double>* level_diffs) {
  const Grid3& grid = cp.y[0][0].grid;
  int m = d.dim;
  int len = i_to - i_from;
  SpectralField zero(grid, cp.y[0][0].rank);
  if (len <= 0) return zero;
  int K = 0;
  while ((1 << K) < len) ++K;
  if ((1 << K) != len) throw WildError("sewing: non-dyadic grid segment");

  auto level_sum = [&](int k) {
    int step = len >> k;
    SpectralField acc(grid, cp.y[0][0].rank);
    SpectralField combo(grid, cp.y[0][0].rank);
    for (int u = i_from; u < i_to; u += step) {
      int v = u + step;
      for (int c = 0; c < ncomp(combo.rank); ++c)
        std::fill(combo.c[c].begin(), combo.c[c].end(), cplx(0, 0));
      for (int a = 0; a < m; ++a) {
        double ba = d.inc(a, u, v);
        for (int c = 0; c < ncomp(combo.rank); ++c)
          for (std::size_t q = 0; q < combo.c[c].size(); ++q)
            combo.c[c][q] += cp.y[u][a].c[c][q] * ba;
        for (int b = 0; b < m; ++b) {
          double bbv = d.bb(b, a, u, v);
          if (bbv == 0.0) continue;
          for (int c = 0; c < ncomp(combo.rank); ++c)
            for (std::size_t q = 0; q < combo.c[c].size(); ++q)
              combo.c[c][q] += cp.yp[u][b * m + a].c[c][q] * bbv;
        }
      }
      SpectralField heated = field3::heat_apply(combo, d.t[i_to] - d.t[u]);
      for (int c = 0; c < ncomp(acc.rank); ++c)
        for (std::size_t q = 0; q < acc.c[c].size(); ++q) acc.c[c][q] += heated.c[c][q];
    }
    return acc;
  };

  SpectralField prev = level_sum(0), fin = prev;
  if (level_diffs) level_diffs->clear();
  for (int k = 1; k <= K; ++k) {
    SpectralField cur = level_sum(k);
    if (level_diffs) {
      SpectralField diff = cur;
      for (int c = 0; c < ncomp(diff.rank); ++c)
        for (std::size_t q = 0; q < diff.c[c].size(); ++q) diff.c[c][q] -= prev.c[c][q];
      level_diffs->push_back(field3::sobolev_norm(diff, 0.0));
    }
    prev = cur;
    fin = cur;
  }
  return fin;
}

double l2_pairing(const RealField& u, const RealField& phi) {
  if (!(u.grid == phi.grid)) throw WildError("l2_pairing: grid mismatch");
  double acc = 0;
  for (int c = 0; c < ncomp(u.rank); ++c)
    for (std::size_t i = 0; i < u.c[c].size(); ++i) acc += u.c[c][i] * phi.c[c][i];
  return acc * VOL / double(u.grid.npoints());
}

FieldControlled compose_nonlinearity(const std::vector<RealField>* v,
                                     const std::vector<RealField>& z, const GSpec& G,
                                     const RoughDriver& d) {
  if (G.empty()) throw WildError("compose_nonlinearity: empty G-spec");
  for (const auto& term : G.terms)
    if (!term.f.h || !term.f.h1 || !term.f.h2 || !term.f.h3)
      throw WildError("compose_nonlinearity: G-spec missing derivative data");
  int m = G.m();
  int n = int(z.size());
  const Grid3& grid = z[0].grid;

  // pairing matrix <S_l, phi_j>
  std::vector<double> smat(m * m);
  for (int j = 0; j < m; ++j)
    for (int l = 0; l < m; ++l) smat[j * m + l] = l2_pairing(G.terms[l].S, G.terms[j].pairing);

  FieldControlled cp;
  cp.y.resize(n);
  cp.yp.resize(n);
  for (int i = 0; i < n; ++i) {
    RealField u = z[i];
    if (v) {
      const RealField& vi = (*v)[std::min<std::size_t>(i, v->size() - 1)];
      field3::axpy(u, vi, 1.0);
    }
    std::vector<double> a(m), hval(m), h1val(m);
    for (int j = 0; j < m; ++j) {
      a[j] = l2_pairing(u, G.terms[j].pairing);
      hval[j] = G.terms[j].f.h(a[j]);
      h1val[j] = G.terms[j].f.h1(a[j]);
    }
    cp.y[i].reserve(m);
    for (int j = 0; j < m; ++j) {
      RealField gj = G.terms[j].S;
      for (int c = 0; c < 3; ++c)
        for (auto& x : gj.c[c]) x *= hval[j];
      cp.y[i].push_back(transform(gj));
    }
    cp.yp[i].reserve(m * m);
    for (int j = 0; j < m; ++j)
      for (int l = 0; l < m; ++l) {
        RealField gjl = G.terms[j].S;
        double factor = h1val[j] * hval[l] * smat[j * m + l];
        for (int c = 0; c < 3; ++c)
          for (auto& x : gjl.c[c]) x *= factor;
        cp.yp[i].push_back(transform(gjl));
      }
  }
  return cp;
}

namespace {

SpectralField mild_from(const SpectralField& za, double dt_heat) {
  return field3::heat_apply(za, dt_heat);
}

}  // namespace

std::vector<SpectralField> solve_rpde(const std::vector<RealField>* v, const GSpec& G,
                                      const RoughDriver& d, const SpectralField& z0,
                                      const Grid3& grid, const RpdeConfig& cfg) {
  auto dmean = field3::component_means(field3::divergence(z0));
  if (std::abs(dmean[0]) > 1e-9) throw WildError("solve_rpde: z0 must be divergence-free");
  // z0 divergence must vanish spectrally, not just in mean
  {
    SpectralField dz = field3::divergence(z0);
    double nn = field3::sobolev_norm(dz, 0.0);
    double sc = field3::sobolev_norm(z0, 0.0);
    if (sc > 0 && nn > 1e-9 * sc) throw WildError("solve_rpde: z0 must be divergence-free");
  }

  int nsteps = d.steps();
  std::vector<SpectralField> z(nsteps + 1, SpectralField(grid, Rank::Vector));
  z[0] = z0;
  if (G.empty()) {
    for (int i = 1; i <= nsteps; ++i) z[i] = field3::heat_apply(z0, d.t[i]);
    return z;
  }

  double dt = d.t[1] - d.t[0];
  // window length from the fixed-point rule, then empirical contraction fallback
  double theta = d.alpha * (d.alpha - cfg.sigma) / (2 * d.alpha - cfg.sigma);
  double rho = d.rho_alpha();
  double Tbar = std::pow(1.0 / (2.0 * cfg.picard_C * std::pow(1.0 + rho, 3.0)), 1.0 / theta);
  int win = 1;
  while (2 * win <= nsteps && 2 * win * dt <= std::max(Tbar, 4 * dt)) win *= 2;

  int halvings = 0;
  int start = 0;
  while (start < nsteps) {
    int len = std::min(win, nsteps - start);
    // shrink to a power of two
    while ((len & (len - 1)) != 0) len -= (len & -len);
    int stop = start + len;

    // Picard iteration on [start, stop]
    std::vector<RealField> zwin(len + 1, RealField(grid, Rank::Vector));
    for (int i = 0; i <= len; ++i)
      zwin[i] = inverse_transform(mild_from(z[start], d.t[start + i] - d.t[start]));
    std::vector<RealField>* vwin = nullptr;
    std::vector<RealField> vslice;
    if (v) {
      for (int i = 0; i <= len; ++i)
        vslice.push_back((*v)[std::min<std::size_t>(start + i, v->size() - 1)]);
      vwin = &vslice;
    }

    bool converged = false;
    double prev_delta = -1;
    std::vector<SpectralField> zs(len + 1, SpectralField(grid, Rank::Vector));
    for (int sweep = 0; sweep < cfg.max_sweeps; ++sweep) {
      FieldControlled cp = compose_nonlinearity(vwin, zwin, G, d);
      // shift the controlled path to the window indexing used by the driver
      double delta = 0, scale = 0;
      std::vector<RealField> znew(len + 1, RealField(grid, Rank::Vector));
      znew[0] = zwin[0];
      zs[0] = z[start];
      for (int i = 1; i <= len; ++i) {
        // left-point mild sum; the per-step second level vanishes on the grid
        SpectralField acc(grid, Rank::Vector);
        for (int l = 0; l < i; ++l) {
          SpectralField combo(grid, Rank::Vector);
          for (int a = 0; a < d.dim; ++a) {
            double ba = d.inc(a, start + l, start + l + 1);
            for (int c = 0; c < 3; ++c)
              for (std::size_t q = 0; q < combo.c[c].size(); ++q)
                combo.c[c][q] += cp.y[l][a].c[c][q] * ba;
          }
          SpectralField heated = field3::heat_apply(combo, d.t[start + i] - d.t[start + l]);
          for (int c = 0; c < 3; ++c)
            for (std::size_t q = 0; q < acc.c[c].size(); ++q) acc.c[c][q] += heated.c[c][q];
        }
        SpectralField zi = mild_from(z[start], d.t[start + i] - d.t[start]);
        for (int c = 0; c < 3; ++c)
          for (std::size_t q = 0; q < zi.c[c].size(); ++q) zi.c[c][q] += acc.c[c][q];
        zs[i] = zi;
        znew[i] = inverse_transform(zi);
        RealField dd = field3::add(znew[i], zwin[i], 1.0, -1.0);
        delta = std::max(delta, field3::lp_norm(dd, 2.0));
        scale = std::max(scale, field3::lp_norm(znew[i], 2.0));
      }
      zwin = std::move(znew);
      if (delta <= cfg.tol * std::max(scale, 1.0)) {
        converged = true;
        break;
      }
      if (prev_delta > 0 && delta > 0.5 * prev_delta && sweep >= 2) break;  // stalled
      prev_delta = delta;
    }
    if (!converged) {
      if (len > 1) {
        if (++halvings > cfg.max_halvings)
          throw WildError("solve_rpde: contraction failure after max halvings");
        win = std::max(1, len / 2);
        continue;  // retry the same window, shorter
      }
      // len == 1: the mild recursion is explicit, a single sweep is exact
    }
    for (int i = 1; i <= len; ++i) z[start + i] = zs[i];
    start = stop;
  }
  return z;
}

std::vector<SpectralField> euler_maruyama(const std::vector<RealField>* v, const GSpec& G,
                                          const stochastic::SampledPath& path,
                                          const SpectralField& z0, const Grid3& grid) {
  int nsteps = int(path.t.size()) - 1;
  int m = G.m();
  std::vector<SpectralField> z;
  z.reserve(nsteps + 1);
  z.push_back(z0);
  SpectralField cur = z0;
  for (int i = 0; i < nsteps; ++i) {
    double h = path.t[i + 1] - path.t[i];
    RealField u = inverse_transform(cur);
    if (v) field3::axpy(u, (*v)[std::min<std::size_t>(i, v->size() - 1)], 1.0);
    RealField drive(grid, Rank::Vector);
    for (int j = 0; j < m; ++j) {
      double a = l2_pairing(u, G.terms[j].pairing);
      double val = G.terms[j].f.h(a);
      double dB = path.B[j][i + 1] - path.B[j][i];
      field3::axpy(drive, G.terms[j].S, val * dB);
    }
    SpectralField incr = transform(drive);
    for (int c = 0; c < 3; ++c)
      for (std::size_t q = 0; q < cur.c[c].size(); ++q) cur.c[c][q] += incr.c[c][q];
    cur = field3::heat_apply(cur, h);
    z.push_back(cur);
  }
  return z;
}

ConsistencyReport ito_consistency_check(const GSpec& G, const Grid3& grid, std::uint64_t seed,
                                        int paths, double T, double h0, int levels) {
  ConsistencyReport rep;
  const int n0 = int(std::llround(T / h0));
  const int n_fine = n0 << (levels + 1);  // reference runs 2x finer than the finest level
  const double h_fine = T / n_fine;
  SpectralField z0(grid, Rank::Vector);

  std::vector<std::vector<double>> gaps(levels);
  for (int p = 0; p < paths; ++p) {
    auto fine = stochastic::sample_wiener_scalar(Rng::mix(seed) + p, std::max(1, G.m()),
                                                 h_fine, n_fine);
    auto zref = euler_maruyama(nullptr, G, fine, z0, grid);
    for (int lev = 0; lev < levels; ++lev) {
      int factor = 1 << (levels + 1 - lev);  // level grid: n0 * 2^lev steps
      auto coarse = coarsen(fine, factor);
      RoughDriver d = ito_lift(coarse, 0.4);
      auto z = solve_rpde(nullptr, G, d, z0, grid);
      double gap = 0;
      for (std::size_t i = 0; i < z.size(); ++i) {
        SpectralField diff = z[i];
        const SpectralField& ref = zref[i * factor];
        for (int c = 0; c < 3; ++c)
          for (std::size_t q = 0; q < diff.c[c].size(); ++q) diff.c[c][q] -= ref.c[c][q];
        gap = std::max(gap, field3::sobolev_norm(diff, 0.0));
      }
      gaps[lev].push_back(gap);
    }
  }
  for (int lev = 0; lev < levels; ++lev) {
    auto& g = gaps[lev];
    std::nth_element(g.begin(), g.begin() + g.size() / 2, g.end());
    rep.h.push_back(h0 / double(1 << lev));
    rep.median_gap.push_back(g[g.size() / 2]);
  }
  // gaps are listed from coarse to fine; they should decrease along the list
  for (std::size_t i = 1; i < rep.median_gap.size(); ++i)
    if (rep.median_gap[i] > rep.median_gap[i - 1]) rep.monotone = false;
  return rep;
}

}  // namespace wildns::roughpath
