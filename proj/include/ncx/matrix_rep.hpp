#pragma once

// Matrix representation of n-complex numbers and its irreducible block form.
//
// Polar numbers map to circulant matrices, planar numbers to circulants with
// the below-diagonal entries negated; mul corresponds to matrix
// multiplication.  This module is the independent oracle for arithmetic,
// determinants and the exponential, so it stays self-contained: a small
// dense matrix type, partial-pivot LU, scaling-and-squaring exponential.

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "ncx/algebra.hpp"

namespace ncx {

class Mat {
 public:
  explicit Mat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

  static Mat identity(int n);

  int size() const noexcept { return n_; }
  double& operator()(int i, int j) {
    return a_[static_cast<std::size_t>(i) * n_ + j];
  }
  double operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * n_ + j];
  }

  Mat& operator+=(const Mat& other);
  Mat& operator*=(double c);
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }

  double max_abs() const;
  double one_norm() const;  // max column sum

 private:
  int n_;
  std::vector<double> a_;
};

double max_abs_diff(const Mat& a, const Mat& b);

// entry(i,j) = x_{(j-i) mod n}, negated for planar when j < i.
Mat represent(const NComplex& u);

struct BlockForm {
  std::optional<double> v_plus;
  std::optional<double> v_minus;
  // [[v_k, vt_k], [-vt_k, v_k]] stored row-major.
  std::vector<std::array<double, 4>> blocks;
};

BlockForm block_form(const NComplex& u);

// det(block_form) = v+ * v- * prod(v_k^2 + vt_k^2); agrees with the LU
// determinant of represent(u).
double block_determinant(const BlockForm& b);

// Scaling-and-squaring with a truncated Taylor kernel; relative accuracy
// around 1e-13 for one_norm(M) <= 50.  Throws Overflow when entries leave
// the finite range.
Mat matrix_exp(const Mat& m, double term_tol = 1e-18);

// Partial-pivot LU determinant.
double lu_determinant(Mat m);

// det(M - lambda*I) via complex LU; used to check the spectrum of a
// representation matrix against the claimed eigenvalues.
std::complex<double> char_poly_at(const Mat& m, std::complex<double> lambda);

}  // namespace ncx
