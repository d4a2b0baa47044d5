#include "wildns/field.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace wildns::field3 {

namespace {

struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

std::mutex g_plan_mutex;
std::map<int, PlanPair>& plan_cache() {
  static std::map<int, PlanPair> cache;
  return cache;
}

PlanPair& plans_for(int n) {
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  auto& cache = plan_cache();
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::size_t np = std::size_t(n) * n * n;
  std::size_t nc = std::size_t(n) * n * (n / 2 + 1);
  double* rbuf = fftw_alloc_real(np);
  fftw_complex* cbuf = fftw_alloc_complex(nc);
  PlanPair p;
  p.fwd = fftw_plan_dft_r2c_3d(n, n, n, rbuf, cbuf, FFTW_ESTIMATE | FFTW_UNALIGNED);
  p.bwd = fftw_plan_dft_c2r_3d(n, n, n, cbuf, rbuf, FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(rbuf);
  fftw_free(cbuf);
  if (!p.fwd || !p.bwd) throw WildError("fftw plan creation failed");
  return cache.emplace(n, p).first->second;
}

}  // namespace

SpectralField transform(const RealField& f) {
  const Grid3& g = f.grid;
  SpectralField out(g, f.rank);
  PlanPair& p = plans_for(g.n);
  std::vector<double> scratch;
  const double scale = VOL_SQRT / double(g.npoints());
  for (int comp = 0; comp < ncomp(f.rank); ++comp) {
    scratch = f.c[comp];  // r2c may not preserve input in all fftw builds
    fftw_execute_dft_r2c(p.fwd, scratch.data(),
                         reinterpret_cast<fftw_complex*>(out.c[comp].data()));
    for (auto& z : out.c[comp]) z *= scale;
  }
  return out;
}

RealField inverse_transform(const SpectralField& f) {
  const Grid3& g = f.grid;
  RealField out(g, f.rank);
  PlanPair& p = plans_for(g.n);
  const double scale = 1.0 / VOL_SQRT;
  std::vector<cplx> scratch(g.ncoeff());
  for (int comp = 0; comp < ncomp(f.rank); ++comp) {
    for (std::size_t i = 0; i < scratch.size(); ++i) scratch[i] = f.c[comp][i] * scale;
    // c2r destroys its input, hence the scratch copy
    fftw_execute_dft_c2r(p.bwd, reinterpret_cast<fftw_complex*>(scratch.data()),
                         out.c[comp].data());
  }
  return out;
}

}  // namespace wildns::field3
