#pragma once

// Spectral decomposition of n-complex numbers.
//
// Multiplication diagonalizes in the coordinates (v+, v-, {v_k, vtilde_k}):
// v+ and v- multiply as reals, each pair multiplies as a complex number.
// The polar variant exposes v+ = sum x_p, v- = sum (-1)^p x_p (even n), and
// pairs at circle frequencies 2*pi*k/n, k = 1..floor((n-1)/2).  The planar
// variant has pairs only, at frequencies pi*(2k-1)/n, k = 1..n/2.

#include <complex>
#include <optional>
#include <vector>

#include "ncx/algebra.hpp"

namespace ncx {

// Number of oscillatory (v_k, vtilde_k) pairs.
int num_pairs(Variant variant, int n);

// The polar variant has a v- coordinate exactly in even dimensions.
bool has_v_minus(Variant variant, int n);

struct Spectrum {
  Variant variant;
  int n;
  std::optional<double> v_plus;   // polar only
  std::optional<double> v_minus;  // polar, even n only
  std::vector<std::complex<double>> pairs;  // (v_k, vtilde_k), k = 1..K

  int num_pairs() const noexcept { return static_cast<int>(pairs.size()); }

  // rho_k = |(v_k, vtilde_k)|, 1-based k.
  double rho(int k) const { return std::abs(pairs[static_cast<std::size_t>(k - 1)]); }

  // Coordinates in the unitarily rescaled axes: (xi_k, eta_k) =
  // sqrt(2/n) * (v_k, vtilde_k), 1-based k.  Loop projections for winding
  // numbers live in these planes.
  std::complex<double> xi_eta(int k) const {
    return std::sqrt(2.0 / n) * pairs[static_cast<std::size_t>(k - 1)];
  }
};

Spectrum to_spectrum(const NComplex& u);
NComplex from_spectrum(const Spectrum& s);

// Idempotent basis: e_k^2 = e_k, etilde_k^2 = -e_k, e_k etilde_k = etilde_k,
// cross products vanish, and e+ + e- + sum e_k = 1 (polar even; analogous
// otherwise).
struct CanonicalBasis {
  std::optional<NComplex> e_plus;   // polar only
  std::optional<NComplex> e_minus;  // polar, even n only
  std::vector<NComplex> e;          // e_k, k = 1..K at index k-1
  std::vector<NComplex> e_tilde;    // etilde_k
};

CanonicalBasis canonical_basis(Variant variant, int n);

// Modulus, amplitude and the angular variables of a number.
//   d           — Euclidean modulus
//   rho         — amplitude nu^(1/n); absent for polar when nu <= 0
//   phi[k-1]    — azimuthal angle of pair k, in [0, 2*pi)
//   psi[k-2]    — planar angle, tan psi_{k-1} = rho_1/rho_k, k = 2..K
//   theta_plus  — polar angle, tan theta_+ = sqrt(2) rho_1 / v+  (polar)
//   theta_minus — same against v-  (polar, even n)
//   F_n         — 1 for polar even n, 0 otherwise
struct GeometricForm {
  double d = 0.0;
  std::optional<double> rho;
  std::vector<double> phi;
  std::vector<double> psi;
  std::optional<double> theta_plus;
  std::optional<double> theta_minus;
  int F_n = 0;

  // Throws AmplitudeUndefined when rho is absent.
  double amplitude() const;
};

// Throws DegenerateAngle(k) when rho_k <= node_eps * max(d, 1) for some pair
// (the azimuthal angle is undefined there).
GeometricForm geometric_form(const NComplex& u, const Tolerances& tol = {});

}  // namespace ncx
