#pragma once

// Cosexponential functions: the n components of exp(h_1 * y).
//
// The polar family g_nk generalizes cosh/sinh (g_20 = cosh, g_21 = sinh);
// the planar family f_nk generalizes cos/sin.  Two evaluation paths exist:
// a finite trigonometric-exponential sum (the production path, O(n) per
// call) and the defining power series (the oracle path).

#include "ncx/algebra.hpp"

namespace ncx {

// Selects the family: polar -> g_nk, planar -> f_nk.  Unlike NComplex, any
// n >= 1 is allowed here (both families are defined for all n; the planar
// closed form is not restricted to even n).
struct CosexpFamily {
  Variant variant;
  int n;
};

// Truncated defining series sum_p y^(k+pn)/(k+pn)! (polar) or the same with
// alternating signs (planar).  Terms are added until
// |term| < series_eps * max(1, |partial sum|); accumulation runs in extended
// precision so the oracle survives the cancellation of alternating series.
// Requires 0 <= k < n and |y| <= 700; throws NotConverged past 10^6 terms.
double eval_series(const CosexpFamily& fam, int k, double y,
                   const Tolerances& tol = {});

// Closed-form finite sum over the unit-circle (polar) or half-shifted
// (planar) frequency grid.  Same |y| <= 700 guard.
double eval_closed(const CosexpFamily& fam, int k, double y);

// exp(h_k * y) as an n-complex number: component (k*p mod n) accumulates the
// p-th cosexponential value, with the variant's basis sign.  For planar
// numbers, even k draws from the polar family and odd k from the planar
// family.  Requires 1 <= k <= n-1.
NComplex exp_basis(Variant variant, int n, int k, double y);

}  // namespace ncx
