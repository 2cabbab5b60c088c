#include "ncx/cosexp.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ncx {

namespace {

constexpr double kArgGuard = 700.0;  // exp() range of binary64
constexpr long kMaxTerms = 1'000'000;

#if defined(__SIZEOF_FLOAT128__)
using Wide = __float128;
#else
using Wide = long double;
#endif

Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

void check_args(const CosexpFamily& fam, int k, double y) {
  if (fam.n < 1) throw DomainError("cosexp: n must be at least 1");
  if (k < 0 || k >= fam.n) {
    throw DomainError("cosexp: index k must satisfy 0 <= k <= n-1");
  }
  if (!(std::abs(y) <= kArgGuard)) {
    throw DomainError("cosexp: |y| exceeds the overflow guard " +
                      std::to_string(kArgGuard));
  }
}

}  // namespace

double eval_series(const CosexpFamily& fam, int k, double y,
                   const Tolerances& tol) {
  check_args(fam, k, y);
  const int n = fam.n;
  const bool alternating = fam.variant == Variant::planar;
  const Wide wy = y;

  Wide term = 1;  // y^k / k!
  for (int j = 1; j <= k; ++j) term *= wy / j;
  Wide sum = 0;
  for (long p = 0; p < kMaxTerms; ++p) {
    sum += term;
    for (int j = 1; j <= n; ++j) term *= wy / (k + p * static_cast<long>(n) + j);
    if (alternating) term = -term;
    const Wide bar = static_cast<Wide>(tol.series_eps) *
                     (wide_abs(sum) > 1 ? wide_abs(sum) : Wide(1));
    if (wide_abs(term) < bar) return static_cast<double>(sum + term);
  }
  throw NotConverged("cosexp series exceeded the term cap");
}

double eval_closed(const CosexpFamily& fam, int k, double y) {
  check_args(fam, k, y);
  const int n = fam.n;
  double sum = 0.0;
  if (fam.variant == Variant::polar) {
    for (int l = 0; l < n; ++l) {
      const double a = 2.0 * std::numbers::pi * l / n;
      sum += std::exp(y * std::cos(a)) *
             std::cos(y * std::sin(a) - 2.0 * std::numbers::pi * k * l / n);
    }
  } else {
    for (int l = 1; l <= n; ++l) {
      const double a = std::numbers::pi * (2 * l - 1) / n;
      sum += std::exp(y * std::cos(a)) *
             std::cos(y * std::sin(a) -
                      std::numbers::pi * (2 * l - 1) * k / n);
    }
  }
  return sum / n;
}

NComplex exp_basis(Variant variant, int n, int k, double y) {
  if (k < 1 || k > n - 1) {
    throw DomainError("exp_basis: basis index k must satisfy 1 <= k <= n-1");
  }
  // The generator h_k walks the basis circle; even planar k closes a polar
  // subcycle (h_k^n = +1) and draws from the g family instead of f.
  const bool planar_f = variant == Variant::planar && k % 2 != 0;
  const CosexpFamily fam{planar_f ? Variant::planar : Variant::polar, n};
  std::vector<double> comp(static_cast<std::size_t>(n), 0.0);
  int sign = 1, idx = 0;  // h_k^0
  for (int p = 0; p < n; ++p) {
    comp[static_cast<std::size_t>(idx)] += sign * eval_closed(fam, p, y);
    const BasisProduct bp = basis_product(variant, n, idx, k);
    idx = bp.index;
    sign *= bp.sign;
  }
  return NComplex(variant, std::move(comp));
}

}  // namespace ncx
