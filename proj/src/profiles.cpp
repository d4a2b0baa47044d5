#include "wildns/profiles.hpp"

#include <cmath>
#include <functional>
#include <vector>

namespace wildns::jets {

namespace {

// P_{n+1}(w) = w^2 (P_n'(w) - P_n(w)), P_0 = 1
const std::vector<std::vector<double>>& bump_polys() {
  static const std::vector<std::vector<double>> polys = [] {
    std::vector<std::vector<double>> p;
    p.push_back({1.0});  // P_0
    for (int n = 0; n < 8; ++n) {
      const auto& cur = p.back();
      std::vector<double> dcur(cur.size() > 1 ? cur.size() - 1 : 1, 0.0);
      for (std::size_t j = 1; j < cur.size(); ++j) dcur[j - 1] = double(j) * cur[j];
      std::vector<double> nxt(cur.size() + 2, 0.0);
      for (std::size_t j = 0; j + 1 < cur.size(); ++j) nxt[j + 2] += dcur[j];
      for (std::size_t j = 0; j < cur.size(); ++j) nxt[j + 2] -= cur[j];
      p.push_back(std::move(nxt));
    }
    return p;
  }();
  return polys;
}

double poly_eval(const std::vector<double>& c, double w) {
  double r = 0;
  for (std::size_t j = c.size(); j-- > 0;) r = r * w + c[j];
  return r;
}

double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  if (n % 2) ++n;
  double h = (b - a) / n;
  double acc = f(a) + f(b);
  for (int i = 1; i < n; ++i) acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

// phi = Lap^2 chi as a radial function of s = r^2:
//   F(s)  = 32 g'' + 64 s g''' + 16 s^2 g''''
//   F'(s) = 96 g''' + 96 s g'''' + 16 s^2 g^(5)
//   F''(s)= 192 g'''' + 128 s g^(5) + 16 s^2 g^(6)
double F_phi(int order, double s) {
  double g2 = bump_g_deriv(2, s), g3 = bump_g_deriv(3, s), g4 = bump_g_deriv(4, s);
  if (order == 0) return 32 * g2 + 64 * s * g3 + 16 * s * s * g4;
  double g5 = bump_g_deriv(5, s);
  if (order == 1) return 96 * g3 + 96 * s * g4 + 16 * s * s * g5;
  double g6 = bump_g_deriv(6, s);
  return 192 * g4 + 128 * s * g5 + 16 * s * s * g6;
}

// Phi = -Lap chi:  G(s) = -4(g' + s g''), G' = -4(2g'' + s g'''), G'' = -4(3g''' + s g'''')
double F_bigphi(int order, double s) {
  if (order == 0) return -4 * (bump_g_deriv(1, s) + s * bump_g_deriv(2, s));
  if (order == 1) return -4 * (2 * bump_g_deriv(2, s) + s * bump_g_deriv(3, s));
  return -4 * (3 * bump_g_deriv(3, s) + s * bump_g_deriv(4, s));
}

Bundle2 radial_bundle(int which, double scale, double u1, double u2) {
  double s = u1 * u1 + u2 * u2;
  Bundle2 b;
  if (s >= 1.0) return b;
  double F0 = scale * (which == 0 ? F_phi(0, s) : F_bigphi(0, s));
  double F1 = scale * (which == 0 ? F_phi(1, s) : F_bigphi(1, s));
  double F2 = scale * (which == 0 ? F_phi(2, s) : F_bigphi(2, s));
  b.v = F0;
  b.d1 = 2 * u1 * F1;
  b.d2 = 2 * u2 * F1;
  b.d11 = 2 * F1 + 4 * u1 * u1 * F2;
  b.d22 = 2 * F1 + 4 * u2 * u2 * F2;
  b.d12 = 4 * u1 * u2 * F2;
  return b;
}

}  // namespace

double bump_g_deriv(int order, double s) {
  if (s >= 1.0) return 0.0;
  double w = 1.0 / (1.0 - s);
  return poly_eval(bump_polys()[order], w) * std::exp(-w);
}

Profiles::Profiles() {
  // normalize (1/4pi^2) int_{R^2} phi^2 = 1 and (1/2pi) int_R psi^2 = 1
  auto phi2 = [](double r) {
    double v = F_phi(0, r * r);
    return v * v * r;
  };
  double iphi = TWO_PI * simpson(phi2, 0.0, 1.0, 4000);
  c_chi_ = 2.0 * M_PI / std::sqrt(iphi);

  auto psi2 = [](double x) {
    double v = 2 * x * bump_g_deriv(1, x * x);
    return v * v;
  };
  double ipsi = simpson(psi2, -1.0, 1.0, 4000);
  c_psi_ = std::sqrt(TWO_PI / ipsi);
}

Bundle1 Profiles::psi(double x) const {
  Bundle1 b;
  double s = x * x;
  if (s >= 1.0) return b;
  double g1 = bump_g_deriv(1, s), g2 = bump_g_deriv(2, s), g3 = bump_g_deriv(3, s),
         g4 = bump_g_deriv(4, s);
  b.v = c_psi_ * 2 * x * g1;
  b.d1 = c_psi_ * (2 * g1 + 4 * x * x * g2);
  b.d2 = c_psi_ * (12 * x * g2 + 8 * x * x * x * g3);
  b.d3 = c_psi_ * (12 * g2 + 48 * x * x * g3 + 16 * x * x * x * x * g4);
  return b;
}

Bundle2 Profiles::phi(double u1, double u2) const { return radial_bundle(0, c_chi_, u1, u2); }
Bundle2 Profiles::big_phi(double u1, double u2) const { return radial_bundle(1, c_chi_, u1, u2); }

double Profiles::psi_norm(int deriv, double p) const {
  auto eval = [&](double x) {
    Bundle1 b = psi(x);
    return deriv == 0 ? b.v : (deriv == 1 ? b.d1 : b.d2);
  };
  if (std::isinf(p)) {
    double m = 0;
    for (int i = 0; i <= 20000; ++i) m = std::max(m, std::abs(eval(-1.0 + 2.0 * i / 20000)));
    return m;
  }
  auto f = [&](double x) { return std::pow(std::abs(eval(x)), p); };
  return std::pow(simpson(f, -1.0, 1.0, 20000), 1.0 / p);
}

double Profiles::phi_norm(double p) const {
  if (std::isinf(p)) {
    double m = 0;
    for (int i = 0; i <= 20000; ++i)
      m = std::max(m, std::abs(c_chi_ * F_phi(0, double(i) / 20000)));
    return m;
  }
  auto f = [&](double r) { return std::pow(std::abs(c_chi_ * F_phi(0, r * r)), p) * r; };
  return std::pow(TWO_PI * simpson(f, 0.0, 1.0, 20000), 1.0 / p);
}

double Profiles::grad_phi_norm(double p) const {
  auto mag = [&](double r) { return std::abs(2 * r * c_chi_ * F_phi(1, r * r)); };
  if (std::isinf(p)) {
    double m = 0;
    for (int i = 0; i <= 20000; ++i) m = std::max(m, mag(double(i) / 20000));
    return m;
  }
  auto f = [&](double r) { return std::pow(mag(r), p) * r; };
  return std::pow(TWO_PI * simpson(f, 0.0, 1.0, 20000), 1.0 / p);
}

double Profiles::phi_hat(double kappa) const {
  auto f = [&](double r) { return c_chi_ * F_phi(0, r * r) * std::cyl_bessel_j(0.0, kappa * r) * r; };
  return TWO_PI * simpson(f, 0.0, 1.0, 4000);
}

double Profiles::psi_hat_abs(double kappa) const {
  auto f = [&](double x) {
    Bundle1 b = psi(x);
    return b.v * std::sin(kappa * x);
  };
  return 2.0 * std::abs(simpson(f, 0.0, 1.0, 4000));
}

double Profiles::phi_l2sq_quadrature(int intervals) const {
  auto f = [&](double r) {
    double v = c_chi_ * F_phi(0, r * r);
    return v * v * r;
  };
  return TWO_PI * simpson(f, 0.0, 1.0, intervals);
}

double Profiles::psi_l2sq_quadrature(int intervals) const {
  auto f = [&](double x) {
    Bundle1 b = psi(x);
    return b.v * b.v;
  };
  return simpson(f, -1.0, 1.0, intervals);
}

}  // namespace wildns::jets
