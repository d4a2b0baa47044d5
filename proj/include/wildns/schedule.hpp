#pragma once

#include <string>
#include <vector>

#include "wildns/common.hpp"

namespace wildns::engine {

enum class Regime { Additive, Multiplicative, Nonlinear };

// Frequency/amplitude schedule of the iteration. Paper mode keeps the
// double-exponential lambda_q = a^(b^q) purely in log space for the symbolic
// admissibility checks; toy mode uses a geometric ladder that a grid can hold.
struct Schedule {
  enum class Mode { Paper, Toy };
  Mode mode = Mode::Toy;
  Regime regime = Regime::Additive;

  double a = 2.0;   // toy: lambda_q = a * b^q
  double b = 2.0;
  double ln_a = 0;  // paper mode: lambda_q = a^(b^q), a given through ln a
  double beta = 0.2;
  double alpha = 1.0 / 196.0;
  double L = 2.0;
  double c_R = 1e-2;

  double lambda(int q) const;     // toy only
  double ln_lambda(int q) const;  // both modes (long-double internally)
  double delta(int q) const;      // toy only
  double ln_delta(int q) const;
  double ell(int q) const;        // toy mollification scale
  double M0(double t) const;      // envelope; regime-dependent
  double dM0(double t) const;
  double m_L() const;             // multiplicative amplitude sqrt(3 L^{1/2} e^{L^{1/4}})

  // f(q) = lambda_{q+1}^{alpha/8}, rounded to an integer in toy mode
  int f_cut(int q, std::vector<std::string>* log = nullptr) const;
};

struct AdmissibilityRow {
  std::string name;
  bool pass = false;
  bool symbolic_only = false;  // evaluated as an exponent comparison, not a number
  double margin = 0;           // log-domain slack (RHS - LHS)
};

// evaluates the parameter compatibility chain of the construction for q in [0, qmax]
std::vector<AdmissibilityRow> check_admissibility(const Schedule& s, int qmax = 2);

// shipped paper-mode presets satisfying the full chain
Schedule paper_preset_additive();
Schedule paper_preset_multiplicative();
Schedule paper_preset_nonlinear();

}  // namespace wildns::engine
