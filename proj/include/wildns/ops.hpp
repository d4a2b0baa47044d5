#pragma once

#include "wildns/field.hpp"

namespace wildns::field3 {

// Spectral derivative along one axis, applied componentwise. Nyquist planes are
// zeroed (odd multipliers have no real-field representative there).
SpectralField derivative(const SpectralField& f, int axis);
SpectralField laplacian(const SpectralField& f);

SpectralField gradient(const SpectralField& scalar);              // scalar -> vector
SpectralField divergence(const SpectralField& v);                 // vector -> scalar
SpectralField divergence_tensor(const SpectralField& t);          // symtensor -> vector
SpectralField curl(const SpectralField& v);                       // vector -> vector

// Helmholtz projection onto divergence-free fields; keeps the k=0 part.
SpectralField leray_project(const SpectralField& v);

// Right inverse of div producing symmetric trace-free tensors; input must be
// componentwise mean-zero.
SpectralField inverse_divergence(const SpectralField& v);

// P_{<=fmax}: keep |k| <= fmax (Euclidean). P_{!=0}: zero the k=0 coefficient.
SpectralField filter_leq(const SpectralField& f, double fmax);
SpectralField filter_neq0(const SpectralField& f);

SpectralField heat_apply(const SpectralField& f, double t);

// Delta^{-1} on mean-zero fields (coefficient division by -|k|^2).
SpectralField inverse_laplacian(const SpectralField& f);

// Spatial mollification as a Fourier multiplier exp(-|k|^2 ell^2 / 2); mass one.
SpectralField mollify_space(const SpectralField& f, double ell);

// physical-space mean of each component
std::vector<double> component_means(const SpectralField& f);

// ---- pointwise algebra on sampled fields ------------------------------------

RealField add(const RealField& a, const RealField& b, double sa = 1.0, double sb = 1.0);
void axpy(RealField& y, const RealField& x, double a);  // y += a*x

// v (x) w as a full tensor split into symmetric storage: sym part of  v_i w_j + w_i v_j / ...
// outer_product returns the symmetric tensor with entries (v_i w_j + v_j w_i)/2.
RealField outer_product_sym(const RealField& v, const RealField& w);
RealField scalar_multiply(const RealField& s, const RealField& f);  // s scalar, f any rank
RealField traceless_part(const RealField& t);                       // symtensor
RealField multiply(const RealField& a, const RealField& b);         // both scalar

// Optional 2/3-rule dealiasing mask (off by default throughout).
SpectralField dealias_two_thirds(const SpectralField& f);

}  // namespace wildns::field3
