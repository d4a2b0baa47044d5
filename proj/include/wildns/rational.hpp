#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace wildns {

// Exact fraction on int64. Enough range for the direction-set algebra,
// which only involves small denominators.
struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rat() = default;
  Rat(std::int64_t n) : num(n), den(1) {}
  Rat(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  double to_double() const { return double(num) / double(den); }
  bool is_integer() const { return den == 1; }
};

inline Rat operator+(Rat a, Rat b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
inline Rat operator-(Rat a, Rat b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
inline Rat operator*(Rat a, Rat b) { return Rat(a.num * b.num, a.den * b.den); }
inline Rat operator/(Rat a, Rat b) {
  if (b.num == 0) throw std::domain_error("Rat: division by zero");
  return Rat(a.num * b.den, a.den * b.num);
}
inline Rat operator-(Rat a) { return Rat(-a.num, a.den); }
inline bool operator==(Rat a, Rat b) { return a.num == b.num && a.den == b.den; }
inline bool operator!=(Rat a, Rat b) { return !(a == b); }

}  // namespace wildns
