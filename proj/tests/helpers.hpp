#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "ncx/algebra.hpp"
#include "ncx/spectral.hpp"

namespace ncx::test {

// Deterministic stream independent of the standard library's distribution
// implementations.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double range(double lo, double hi) { return lo + (hi - lo) * unit(); }
  int index(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

inline NComplex random_ncx(Rng& rng, Variant variant, int n, double lo = -2.0,
                           double hi = 2.0) {
  std::vector<double> x(static_cast<std::size_t>(n));
  for (double& v : x) v = rng.range(lo, hi);
  return NComplex(variant, std::move(x));
}

// All spectral coordinate magnitudes in [mag_lo, mag_hi]; axes positive when
// requested (the log domain).
inline NComplex random_off_nodal(Rng& rng, Variant variant, int n,
                                 double mag_lo, double mag_hi,
                                 bool positive_axes) {
  Spectrum s;
  s.variant = variant;
  s.n = n;
  auto axis = [&]() {
    const double mag = rng.range(mag_lo, mag_hi);
    return positive_axes || rng.unit() < 0.5 ? mag : -mag;
  };
  if (variant == Variant::polar) {
    s.v_plus = axis();
    if (n % 2 == 0) s.v_minus = axis();
  }
  for (int k = 0; k < num_pairs(variant, n); ++k) {
    const double rho = rng.range(mag_lo, mag_hi);
    const double phi = rng.range(0.0, 6.283185307179586);
    s.pairs.emplace_back(rho * std::cos(phi), rho * std::sin(phi));
  }
  return from_spectrum(s);
}

inline double max_abs(const NComplex& u) {
  double worst = 0.0;
  for (int p = 0; p < u.dim(); ++p) worst = std::max(worst, std::abs(u[p]));
  return worst;
}

// |u - v|_inf relative to max(1, |u|_inf, |v|_inf)
inline double rel_diff(const NComplex& u, const NComplex& v) {
  return max_abs_diff(u, v) / std::max({1.0, max_abs(u), max_abs(v)});
}

inline const std::vector<int>& polar_dims() {
  static const std::vector<int> dims{2, 3, 4, 5, 6, 8};
  return dims;
}

inline const std::vector<int>& planar_dims() {
  static const std::vector<int> dims{2, 4, 6, 8};
  return dims;
}

}  // namespace ncx::test
