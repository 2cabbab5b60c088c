#pragma once

// exp, log and real powers of n-complex numbers, plus the exponential and
// trigonometric presentation forms.
//
// exp/log/pow act spectrally (exp scales v+, v-, rotates each pair); the
// angle-based forms are a separate presentation layer, so numbers whose
// angles degenerate can still be exponentiated.

#include <vector>

#include "ncx/algebra.hpp"
#include "ncx/spectral.hpp"

namespace ncx {

// Spectral exponential; equals the power-series limit.  Throws Overflow when
// a spectral coordinate exceeds the exp() guard.
NComplex exp(const NComplex& u);

// Principal logarithm with azimuthal angles in [0, 2*pi).  Domain: v+ > 0
// (polar), v- > 0 (polar even), and every rho_k above the nodal threshold.
// Throws DomainError naming the violated conditions.
NComplex log(const NComplex& u, const Tolerances& tol = {});

// u^m.  Integer m is evaluated spectrally for arbitrary u (repeated
// multiplication semantics, including nodal points); negative integer m
// routes through inverse and may throw NonInvertible.  Non-integer m uses
// the principal branch and requires the log domain.
NComplex pow(const NComplex& u, double m, const Tolerances& tol = {});

// u = rho * exp(sum_p h_p * h_coefficients[p] + sum_k etilde_k * phi[k-1]).
// h_coefficients[0] is always zero.
struct ExponentialForm {
  Variant variant;
  int n;
  double rho;
  std::vector<double> h_coefficients;
  std::vector<double> phi;
};

// Throws DomainError outside the log domain and DegenerateAngle when a
// log-tangent term sits on a singularity (e.g. polar n = 2, which has no
// oscillatory pair).
ExponentialForm exponential_form(const NComplex& u, const Tolerances& tol = {});

NComplex reassemble(const ExponentialForm& form);

// u = scalar * direction * exp(phase); scalar is d times the inverse-tangent
// normalization, direction combines the idempotent axes, phase is
// sum etilde_k * phi_k.
struct TrigonometricForm {
  double scalar;
  NComplex direction;
  NComplex phase;
};

TrigonometricForm trigonometric_form(const NComplex& u,
                                     const Tolerances& tol = {});

namespace detail {

// Coefficients of h_p (p >= 1) in the exponent of the exponential form:
// log-ratios of the polar angles against rho_1 and the planar-angle cosine
// sums.  log_vp_ratio = ln(v+/rho_1), log_psi[k-2] = ln(rho_1/rho_k).
// Shared with the contour module's differential decomposition.
std::vector<double> exponent_bracket(Variant variant, int n,
                                     std::optional<double> log_vp_ratio,
                                     std::optional<double> log_vm_ratio,
                                     const std::vector<double>& log_psi);

}  // namespace detail

}  // namespace ncx
