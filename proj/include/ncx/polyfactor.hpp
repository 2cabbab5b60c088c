#pragma once

// Factorization of monic n-complex polynomials.
//
// A polynomial splits into one scalar polynomial per spectral slot: a real
// polynomial on the v+ (and v-) axis, a complex polynomial per pair plane.
// Each slot is rooted independently, and a factorization of the whole
// polynomial picks one root per slot per factor position.  Orderings within
// each slot are arbitrary, so a polynomial generally has many distinct
// factorizations.  Planar polynomials always split into linear factors; a
// polar v+/v- slot with complex roots forces those conjugate pairs to fuse
// into real quadratic factors.

#include <complex>
#include <vector>

#include "ncx/algebra.hpp"

namespace ncx {

// u^m + a_1 u^(m-1) + ... + a_m with the monic leading term implicit.
struct NPolynomial {
  Variant variant;
  int n;
  std::vector<NComplex> coefficients;  // a_1 .. a_m

  int degree() const noexcept { return static_cast<int>(coefficients.size()); }
};

enum class SlotKind { plus, minus, pair_plane };

// Scalar polynomial in one spectral slot, coefficients a_1..a_m (imaginary
// parts are zero for the plus/minus slots).
struct SlotPolynomial {
  SlotKind kind;
  int pair_index;  // 1-based for pair slots, 0 otherwise
  std::vector<std::complex<double>> coefficients;
};

std::vector<SlotPolynomial> component_polynomials(const NPolynomial& poly);

struct SlotRoots {
  SlotKind kind;
  int pair_index;
  std::vector<std::complex<double>> roots;  // exactly m, with multiplicity
};

struct ComponentRoots {
  std::vector<SlotRoots> slots;
};

// Simultaneous-iteration root refinement per slot, polished until the
// per-root residual clears factor_tol at the coefficient scale.  Roots
// within 1e-6 relative distance are clustered; plus/minus-slot roots are
// snapped to the real axis or to exact conjugate pairs.  Throws NotConverged
// after the iteration cap and restarts are exhausted.
ComponentRoots roots(const NPolynomial& poly, const Tolerances& tol = {});

// u^2 + b*u + c
struct QuadraticFactor {
  NComplex b;
  NComplex c;
};

struct Factorization {
  std::vector<NComplex> linear_roots;          // factors (u - root)
  std::vector<QuadraticFactor> quadratic_factors;
  bool mixed = false;  // true when conjugate fusion produced quadratics
  long ordering_id = 0;
};

// Enumerates distinct factorizations (as factor multisets), canonical
// assignment first, stopping at `limit`.
std::vector<Factorization> factorizations(const NPolynomial& poly,
                                          long limit = 10000,
                                          const Tolerances& tol = {});

long count_factorizations(const NPolynomial& poly, long limit = 10000,
                          const Tolerances& tol = {});

// Multiplies the factors back out.
NPolynomial expand(const Factorization& f, Variant variant, int n);

}  // namespace ncx
