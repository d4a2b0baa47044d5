#pragma once

#include <cmath>
#include <cstdint>

namespace wildns {

// Counter-based generator: every draw is a pure function of (seed, stream, counter),
// so replica- and mode-parallel sampling stays bit-reproducible regardless of
// evaluation order.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}
  Rng(std::uint64_t seed, std::uint64_t stream) : state(mix(seed ^ mix(stream))) {}

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next_u64() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in (0,1); never returns 0 so log() below is safe
  double next_uniform() {
    return (double(next_u64() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
  }

  // standard normal via Box-Muller
  double next_normal() {
    double u1 = next_uniform();
    double u2 = next_uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.28318530717958647692 * u2);
  }
};

}  // namespace wildns
