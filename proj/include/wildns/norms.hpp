#pragma once

#include "wildns/field.hpp"

namespace wildns::field3 {

struct NormKind {
  enum class Kind { Lp, Sobolev, Besov11, CNtx, HolderTime };
  Kind kind = Kind::Lp;
  double p = 2.0;        // Lp exponent; use inf_p() for L^infty
  double s = 0.0;        // Sobolev index
  double beta = 0.0;     // Besov index (p = q = 1)
  int N = 0;             // CNtx order
  double alpha = 0.0;    // time-Hoelder exponent
  // spatial norm used inside HolderTime: Lp(p), Sobolev(s) or Besov11(beta)
  Kind value_kind = Kind::Lp;

  static double inf_p() { return std::numeric_limits<double>::infinity(); }
  static NormKind lp(double p) { return {Kind::Lp, p}; }
  static NormKind linf() { return lp(inf_p()); }
  static NormKind sobolev(double s) {
    NormKind k;
    k.kind = Kind::Sobolev;
    k.s = s;
    return k;
  }
  static NormKind besov11(double beta) {
    NormKind k;
    k.kind = Kind::Besov11;
    k.beta = beta;
    return k;
  }
  static NormKind cntx(int N) {
    NormKind k;
    k.kind = Kind::CNtx;
    k.N = N;
    return k;
  }
  static NormKind holder_time(double alpha, const NormKind& value) {
    NormKind k;
    k.kind = Kind::HolderTime;
    k.alpha = alpha;
    k.value_kind = value.kind;
    k.p = value.p;
    k.s = value.s;
    k.beta = value.beta;
    return k;
  }
  std::string name() const;
};

// pointwise magnitude by rank: |f|, Euclidean, Frobenius
double pointwise_sup(const RealField& f);
double lp_norm(const RealField& f, double p);

double sobolev_norm(const SpectralField& f, double s);
double besov11_norm(const SpectralField& f, double beta);

// smooth dyadic Littlewood-Paley cutoff: 1 for r<=1, 0 for r>=2
double lp_cutoff(double r);
// block multiplier value phi_j(|k|), j >= -1
double lp_block(int j, double absk);

double spatial_norm(const RealField& f, const NormKind& kind);

struct TimeFamily {
  std::vector<double> t;
  std::vector<RealField> f;
  std::size_t size() const { return t.size(); }
};

// max over 0 <= m+|a| <= N of sup |d_t^m D^a f|; time derivatives by finite
// differences on the sampled family, spatial derivatives spectral.
double cntx_norm(const TimeFamily& fam, int N);

// discrete time-Hoelder seminorm: max over grid pairs with |t-s| >= hmin
double holder_time_norm(const TimeFamily& fam, double alpha, const NormKind& value_kind,
                        double hmin);
double holder_time_norm_scalar(const std::vector<double>& t, const std::vector<double>& x,
                               double alpha, double hmin);

double compute_norm(const TimeFamily& fam, const NormKind& kind, double hmin = 0.0);

}  // namespace wildns::field3
