#include "ncx/matrix_rep.hpp"

#include <cmath>
#include <utility>

#include "ncx/spectral.hpp"

namespace ncx {

Mat Mat::identity(int n) {
  Mat m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat& Mat::operator+=(const Mat& other) {
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += other.a_[i];
  return *this;
}

Mat& Mat::operator*=(double c) {
  for (double& v : a_) v *= c;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  const int n = a.n_;
  Mat out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

double Mat::max_abs() const {
  double worst = 0.0;
  for (double v : a_) worst = std::max(worst, std::abs(v));
  return worst;
}

double Mat::one_norm() const {
  double worst = 0.0;
  for (int j = 0; j < n_; ++j) {
    double col = 0.0;
    for (int i = 0; i < n_; ++i) col += std::abs((*this)(i, j));
    worst = std::max(worst, col);
  }
  return worst;
}

double max_abs_diff(const Mat& a, const Mat& b) {
  double worst = 0.0;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  return worst;
}

Mat represent(const NComplex& u) {
  const int n = u.dim();
  const bool planar = u.variant() == Variant::planar;
  Mat m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int p = (j - i + n) % n;
      m(i, j) = (planar && j < i) ? -u[p] : u[p];
    }
  }
  return m;
}

BlockForm block_form(const NComplex& u) {
  const Spectrum s = to_spectrum(u);
  BlockForm b;
  b.v_plus = s.v_plus;
  b.v_minus = s.v_minus;
  for (const auto& z : s.pairs) {
    b.blocks.push_back({z.real(), z.imag(), -z.imag(), z.real()});
  }
  return b;
}

double block_determinant(const BlockForm& b) {
  double det = 1.0;
  if (b.v_plus) det *= *b.v_plus;
  if (b.v_minus) det *= *b.v_minus;
  for (const auto& blk : b.blocks) det *= blk[0] * blk[0] + blk[1] * blk[1];
  return det;
}

Mat matrix_exp(const Mat& m, double term_tol) {
  const int n = m.size();
  if (!std::isfinite(m.max_abs())) {
    throw Overflow("matrix_exp: input has non-finite entries");
  }
  // Scale until the norm is at most 1/2, run the Taylor series, square back.
  int squarings = 0;
  double norm = m.one_norm();
  while (norm > 0.5 && squarings < 64) {
    norm *= 0.5;
    ++squarings;
  }
  Mat t = m;
  t *= std::ldexp(1.0, -squarings);

  Mat sum = Mat::identity(n);
  Mat term = Mat::identity(n);
  for (int k = 1; k <= 64; ++k) {
    term = term * t;
    term *= 1.0 / k;
    sum += term;
    if (term.max_abs() <= term_tol * std::max(1.0, sum.max_abs())) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  if (!std::isfinite(sum.max_abs())) {
    throw Overflow("matrix_exp: result overflowed");
  }
  return sum;
}

double lu_determinant(Mat m) {
  const int n = m.size();
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int i = col + 1; i < n; ++i)
      if (std::abs(m(i, col)) > std::abs(m(pivot, col))) pivot = i;
    if (m(pivot, col) == 0.0) return 0.0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (int i = col + 1; i < n; ++i) {
      const double f = m(i, col) / m(col, col);
      for (int j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

std::complex<double> char_poly_at(const Mat& m, std::complex<double> lambda) {
  using C = std::complex<double>;
  const int n = m.size();
  std::vector<C> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[static_cast<std::size_t>(i) * n + j] =
          C(m(i, j)) - (i == j ? lambda : C(0));
  auto at = [&](int i, int j) -> C& {
    return a[static_cast<std::size_t>(i) * n + j];
  };
  C det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int i = col + 1; i < n; ++i)
      if (std::abs(at(i, col)) > std::abs(at(pivot, col))) pivot = i;
    if (at(pivot, col) == C(0)) return C(0);
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(at(pivot, j), at(col, j));
      det = -det;
    }
    det *= at(col, col);
    for (int i = col + 1; i < n; ++i) {
      const C f = at(i, col) / at(col, col);
      for (int j = col; j < n; ++j) at(i, j) -= f * at(col, j);
    }
  }
  return det;
}

}  // namespace ncx
