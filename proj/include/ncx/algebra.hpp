#pragma once

// Commutative hypercomplex numbers in n dimensions, in two variants.
//
// A polar n-complex number is an element of R[h]/(h^n - 1): the basis rule is
// h_j h_k = h_{(j+k) mod n}.  A planar n-complex number (even n only) is an
// element of R[h]/(h^n + 1): the same index rule with an extra sign
// (-1)^floor((j+k)/n).  At n = 2 the planar variant is the ordinary complex
// plane.  Values are immutable; every operation returns a new value.

#include <span>
#include <string_view>
#include <vector>

#include "ncx/error.hpp"

namespace ncx {

enum class Variant { polar, planar };

std::string_view to_string(Variant variant);

// Numeric thresholds shared across the library.
//   node_eps   — relative threshold for nodal-hypersurface detection
//   cmp_eps    — comparison tolerance used by reassembly-style checks
//   series_eps — term-magnitude cutoff for series evaluation
//   factor_tol — root residual tolerance for polynomial factorization
struct Tolerances {
  double node_eps = 1e-9;
  double cmp_eps = 1e-9;
  double series_eps = 1e-16;
  double factor_tol = 1e-9;

  // Throws DomainError unless all entries are positive and node_eps,
  // cmp_eps are at most 1e-6.
  void validate() const;
};

struct BasisProduct {
  int sign;   // +1 or -1
  int index;  // l = (j + k) mod n
};

// Product h_j * h_k = sign * h_index for the given variant.  The planar sign
// is -1 exactly when j + k >= n.
BasisProduct basis_product(Variant variant, int n, int j, int k);

class NComplex {
 public:
  // Validates: n >= 2, planar n even, every component finite.
  NComplex(Variant variant, std::vector<double> components);

  static NComplex zero(Variant variant, int n);
  static NComplex one(Variant variant, int n);
  // scale * h_p
  static NComplex unit(Variant variant, int n, int p, double scale = 1.0);

  Variant variant() const noexcept { return variant_; }
  int dim() const noexcept { return static_cast<int>(x_.size()); }
  double operator[](int p) const { return x_[static_cast<std::size_t>(p)]; }
  const std::vector<double>& components() const noexcept { return x_; }

  bool same_shape(const NComplex& other) const noexcept {
    return variant_ == other.variant_ && x_.size() == other.x_.size();
  }

 private:
  Variant variant_;
  std::vector<double> x_;
};

NComplex add(const NComplex& u, const NComplex& v);
NComplex sub(const NComplex& u, const NComplex& v);
NComplex neg(const NComplex& u);
NComplex scale(const NComplex& u, double c);

// Convolution product with the variant's basis signs; O(n^2).
NComplex mul(const NComplex& u, const NComplex& v);

// Euclidean norm d = |u| of the component vector.
double modulus(const NComplex& u);

// Determinant nu of the multiplication matrix, computed spectrally:
// v+ * v- * prod rho_k^2 (polar even), v+ * prod rho_k^2 (polar odd),
// prod rho_k^2 (planar, always >= 0).
double determinant(const NComplex& u);

// Spectral reciprocal.  Throws NonInvertible when any spectral coordinate
// has magnitude <= node_eps * max(|u|, 1), naming the vanishing coordinates.
NComplex inverse(const NComplex& u, const Tolerances& tol = {});

// The planar basis rules in an odd dimension n define an algebra isomorphic
// to the polar one.  Maps the component list of an odd-n planar-rule number
// to the polar number it equals under the base relabeling
// x'_l = x_{2l}, x'_{(n-1)/2+m} = -x_{2m-1}; multiplication commutes with
// the map.  Throws DomainError for even n.
NComplex odd_planar_as_polar(std::span<const double> x);

inline NComplex operator+(const NComplex& u, const NComplex& v) {
  return add(u, v);
}
inline NComplex operator-(const NComplex& u, const NComplex& v) {
  return sub(u, v);
}
inline NComplex operator-(const NComplex& u) { return neg(u); }
inline NComplex operator*(const NComplex& u, const NComplex& v) {
  return mul(u, v);
}
inline NComplex operator*(double c, const NComplex& u) { return scale(u, c); }
inline NComplex operator*(const NComplex& u, double c) { return scale(u, c); }

// max_p |u_p - v_p|; shapes must match.
double max_abs_diff(const NComplex& u, const NComplex& v);

}  // namespace ncx
