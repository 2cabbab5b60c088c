#include "ncx/algebra.hpp"

#include <cmath>
#include <string>

#include "ncx/spectral.hpp"

namespace ncx {

std::string_view to_string(Variant variant) {
  return variant == Variant::polar ? "polar" : "planar";
}

void Tolerances::validate() const {
  if (!(node_eps > 0) || !(cmp_eps > 0) || !(series_eps > 0) ||
      !(factor_tol > 0)) {
    throw DomainError("tolerances must be strictly positive");
  }
  if (node_eps > 1e-6 || cmp_eps > 1e-6) {
    throw DomainError("node_eps and cmp_eps must be at most 1e-6");
  }
}

BasisProduct basis_product(Variant variant, int n, int j, int k) {
  if (n < 1 || j < 0 || j > n - 1 || k < 0 || k > n - 1) {
    throw DomainError("basis_product: indices must satisfy 0 <= j,k <= n-1");
  }
  const int wraps = (j + k) / n;  // 0 or 1
  const int l = j + k - n * wraps;
  const int sign = (variant == Variant::planar && wraps % 2 != 0) ? -1 : 1;
  return {sign, l};
}

NComplex::NComplex(Variant variant, std::vector<double> components)
    : variant_(variant), x_(std::move(components)) {
  const auto n = x_.size();
  if (n < 2) {
    throw DomainError("NComplex: dimension must be at least 2");
  }
  if (variant_ == Variant::planar && n % 2 != 0) {
    throw DomainError(
        "NComplex: planar variant requires an even dimension (odd planar "
        "rules are handled by odd_planar_as_polar)");
  }
  for (double v : x_) {
    if (!std::isfinite(v)) {
      throw DomainError("NComplex: components must be finite");
    }
  }
}

NComplex NComplex::zero(Variant variant, int n) {
  return NComplex(variant, std::vector<double>(static_cast<std::size_t>(n)));
}

NComplex NComplex::one(Variant variant, int n) { return unit(variant, n, 0); }

NComplex NComplex::unit(Variant variant, int n, int p, double scale) {
  if (p < 0 || p >= n) throw DomainError("NComplex::unit: index out of range");
  std::vector<double> x(static_cast<std::size_t>(n));
  x[static_cast<std::size_t>(p)] = scale;
  return NComplex(variant, std::move(x));
}

namespace {

void require_same_shape(const NComplex& u, const NComplex& v,
                        const char* op) {
  if (!u.same_shape(v)) {
    throw DimensionMismatch(std::string(op) +
                            ": operands must share dimension and variant");
  }
}

}  // namespace

NComplex add(const NComplex& u, const NComplex& v) {
  require_same_shape(u, v, "add");
  std::vector<double> x(u.components());
  for (int p = 0; p < u.dim(); ++p) x[static_cast<std::size_t>(p)] += v[p];
  return NComplex(u.variant(), std::move(x));
}

NComplex sub(const NComplex& u, const NComplex& v) {
  require_same_shape(u, v, "sub");
  std::vector<double> x(u.components());
  for (int p = 0; p < u.dim(); ++p) x[static_cast<std::size_t>(p)] -= v[p];
  return NComplex(u.variant(), std::move(x));
}

NComplex neg(const NComplex& u) { return scale(u, -1.0); }

NComplex scale(const NComplex& u, double c) {
  std::vector<double> x(u.components());
  for (double& v : x) v *= c;
  return NComplex(u.variant(), std::move(x));
}

NComplex mul(const NComplex& u, const NComplex& v) {
  require_same_shape(u, v, "mul");
  const int n = u.dim();
  const bool planar = u.variant() == Variant::planar;
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (int k = 0; k < n; ++k) {
    double acc = 0.0;
    for (int l = 0; l < n; ++l) {
      const int j = k - l + (l > k ? n : 0);
      const double term = u[l] * v[j];
      // planar sign: the basis product h_l h_j wraps exactly when l > k
      acc += (planar && l > k) ? -term : term;
    }
    out[static_cast<std::size_t>(k)] = acc;
  }
  return NComplex(u.variant(), std::move(out));
}

double modulus(const NComplex& u) {
  double s = 0.0;
  for (double v : u.components()) s += v * v;
  return std::sqrt(s);
}

double determinant(const NComplex& u) {
  const Spectrum s = to_spectrum(u);
  double nu = 1.0;
  if (s.v_plus) nu *= *s.v_plus;
  if (s.v_minus) nu *= *s.v_minus;
  for (const auto& z : s.pairs) nu *= std::norm(z);
  return nu;
}

NComplex inverse(const NComplex& u, const Tolerances& tol) {
  Spectrum s = to_spectrum(u);
  const double margin = tol.node_eps * std::max(modulus(u), 1.0);
  std::vector<std::string> vanishing;
  if (s.v_plus && std::abs(*s.v_plus) <= margin) vanishing.push_back("v_plus");
  if (s.v_minus && std::abs(*s.v_minus) <= margin)
    vanishing.push_back("v_minus");
  for (std::size_t i = 0; i < s.pairs.size(); ++i) {
    if (std::abs(s.pairs[i]) <= margin)
      vanishing.push_back("rho_" + std::to_string(i + 1));
  }
  if (!vanishing.empty()) throw NonInvertible(std::move(vanishing));

  if (s.v_plus) s.v_plus = 1.0 / *s.v_plus;
  if (s.v_minus) s.v_minus = 1.0 / *s.v_minus;
  for (auto& z : s.pairs) z = std::conj(z) / std::norm(z);
  return from_spectrum(s);
}

NComplex odd_planar_as_polar(std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  if (n % 2 == 0) {
    throw DomainError("odd_planar_as_polar: dimension must be odd");
  }
  const int half = (n - 1) / 2;
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int l = 0; l <= half; ++l)
    out[static_cast<std::size_t>(l)] = x[static_cast<std::size_t>(2 * l)];
  for (int m = 1; m <= half; ++m)
    out[static_cast<std::size_t>(half + m)] =
        -x[static_cast<std::size_t>(2 * m - 1)];
  return NComplex(Variant::polar, std::move(out));
}

double max_abs_diff(const NComplex& u, const NComplex& v) {
  if (!u.same_shape(v)) {
    throw DimensionMismatch("max_abs_diff: shapes differ");
  }
  double worst = 0.0;
  for (int p = 0; p < u.dim(); ++p)
    worst = std::max(worst, std::abs(u[p] - v[p]));
  return worst;
}

}  // namespace ncx
