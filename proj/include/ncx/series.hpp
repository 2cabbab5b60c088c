#pragma once

// Power series of an n-complex variable: spectral evaluation, convergence
// cylinder estimation, and finite-difference verification of the
// Riemann-analog relations between the component partial derivatives.

#include <functional>
#include <optional>
#include <vector>

#include "ncx/algebra.hpp"

namespace ncx {

struct NPowerSeries {
  Variant variant;
  int n;
  std::vector<NComplex> coefficients;  // a_0, a_1, ...
};

// Partial sum of sum_l a_l u^l through `terms` terms (capped at the stored
// coefficient count), evaluated slot-by-slot in spectral coordinates.
NComplex evaluate(const NPowerSeries& series, const NComplex& u, int terms);

// Per-slot convergence radii.  The region of absolute convergence is the
// cylinder |v+| < c_plus, |v-| < c_minus, rho_k < c[k-1].
struct ConvergenceCylinder {
  std::optional<double> c_plus;   // polar only; may be +infinity
  std::optional<double> c_minus;  // polar even only
  std::vector<double> c;          // per pair
};

// Ratio estimates |A_l| / |A_{l+1}| averaged geometrically over the trailing
// `window` ratios; +infinity when the tail denominators vanish identically.
// Throws InsufficientData with fewer than two coefficients.
ConvergenceCylinder convergence_radii(const NPowerSeries& series,
                                      int window = 8);

// Residual report of the component partial-derivative equality chains of an
// n-complex function, estimated by central differences.  Analytic functions
// give residuals at the differencing-noise level; maps that are not
// n-complex differentiable fail by orders of magnitude.
struct RiemannReport {
  double first_order = 0.0;   // max deviation across the first-order chains
  double second_order = 0.0;  // max deviation across the second-order chains
};

using NFunction = std::function<NComplex(const NComplex&)>;

// h <= 0 selects the default step 1e-4 * max(1, |u0|).
RiemannReport check_riemann_relations(const NFunction& f, const NComplex& u0,
                                      double h = 0.0);

}  // namespace ncx
