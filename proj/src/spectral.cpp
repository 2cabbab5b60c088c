#include "ncx/spectral.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ncx {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Unit-circle samples at the variant's frequency grid.  Polar pairs live at
// angles 2*pi*k*p/n, planar pairs at pi*(2k-1)*p/n; both reduce exactly to a
// table of size n (polar) or 2n (planar).
struct TrigTable {
  int modulus;
  std::vector<double> c, s;

  static TrigTable make(Variant variant, int n) {
    const int m = variant == Variant::polar ? n : 2 * n;
    TrigTable t;
    t.modulus = m;
    t.c.resize(static_cast<std::size_t>(m));
    t.s.resize(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
      const double a = kTwoPi * j / (variant == Variant::polar ? n : 2 * n);
      t.c[static_cast<std::size_t>(j)] = std::cos(a);
      t.s[static_cast<std::size_t>(j)] = std::sin(a);
    }
    return t;
  }

  int index(Variant variant, int k, int p) const {
    const int f = variant == Variant::polar ? k : 2 * k - 1;
    return (f * p) % modulus;
  }
};

}  // namespace

int num_pairs(Variant variant, int n) {
  return variant == Variant::polar ? (n - 1) / 2 : n / 2;
}

bool has_v_minus(Variant variant, int n) {
  return variant == Variant::polar && n % 2 == 0;
}

Spectrum to_spectrum(const NComplex& u) {
  const int n = u.dim();
  const Variant variant = u.variant();
  Spectrum s;
  s.variant = variant;
  s.n = n;
  if (variant == Variant::polar) {
    double vp = 0.0, vm = 0.0;
    for (int p = 0; p < n; ++p) {
      vp += u[p];
      vm += (p % 2 != 0) ? -u[p] : u[p];
    }
    s.v_plus = vp;
    if (n % 2 == 0) s.v_minus = vm;
  }
  const TrigTable t = TrigTable::make(variant, n);
  const int K = num_pairs(variant, n);
  s.pairs.reserve(static_cast<std::size_t>(K));
  for (int k = 1; k <= K; ++k) {
    double re = 0.0, im = 0.0;
    for (int p = 0; p < n; ++p) {
      const int j = t.index(variant, k, p);
      re += u[p] * t.c[static_cast<std::size_t>(j)];
      im += u[p] * t.s[static_cast<std::size_t>(j)];
    }
    s.pairs.emplace_back(re, im);
  }
  return s;
}

NComplex from_spectrum(const Spectrum& s) {
  const int n = s.n;
  const Variant variant = s.variant;
  const TrigTable t = TrigTable::make(variant, n);
  const int K = s.num_pairs();
  std::vector<double> x(static_cast<std::size_t>(n), 0.0);
  for (int p = 0; p < n; ++p) {
    double acc = 0.0;
    if (s.v_plus) acc += *s.v_plus / n;
    if (s.v_minus) acc += ((p % 2 != 0) ? -*s.v_minus : *s.v_minus) / n;
    for (int k = 1; k <= K; ++k) {
      const int j = t.index(variant, k, p);
      const auto& z = s.pairs[static_cast<std::size_t>(k - 1)];
      acc += (2.0 / n) * (z.real() * t.c[static_cast<std::size_t>(j)] +
                          z.imag() * t.s[static_cast<std::size_t>(j)]);
    }
    x[static_cast<std::size_t>(p)] = acc;
  }
  return NComplex(variant, std::move(x));
}

CanonicalBasis canonical_basis(Variant variant, int n) {
  if (variant == Variant::planar && n % 2 != 0) {
    throw DomainError("canonical_basis: planar variant requires even n");
  }
  if (n < 2) throw DomainError("canonical_basis: n must be at least 2");
  CanonicalBasis b;
  const TrigTable t = TrigTable::make(variant, n);
  if (variant == Variant::polar) {
    std::vector<double> plus(static_cast<std::size_t>(n), 1.0 / n);
    b.e_plus = NComplex(variant, std::move(plus));
    if (n % 2 == 0) {
      std::vector<double> minus(static_cast<std::size_t>(n));
      for (int p = 0; p < n; ++p)
        minus[static_cast<std::size_t>(p)] = (p % 2 != 0 ? -1.0 : 1.0) / n;
      b.e_minus = NComplex(variant, std::move(minus));
    }
  }
  const int K = num_pairs(variant, n);
  for (int k = 1; k <= K; ++k) {
    std::vector<double> e(static_cast<std::size_t>(n));
    std::vector<double> et(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
      const int j = t.index(variant, k, p);
      e[static_cast<std::size_t>(p)] =
          (2.0 / n) * t.c[static_cast<std::size_t>(j)];
      et[static_cast<std::size_t>(p)] =
          (2.0 / n) * t.s[static_cast<std::size_t>(j)];
    }
    b.e.emplace_back(variant, std::move(e));
    b.e_tilde.emplace_back(variant, std::move(et));
  }
  return b;
}

double GeometricForm::amplitude() const {
  if (!rho) {
    throw AmplitudeUndefined(
        "amplitude rho = nu^(1/n) is defined only for positive determinant");
  }
  return *rho;
}

GeometricForm geometric_form(const NComplex& u, const Tolerances& tol) {
  const Spectrum s = to_spectrum(u);
  GeometricForm g;
  g.d = modulus(u);
  g.F_n = has_v_minus(u.variant(), u.dim()) ? 1 : 0;

  const double margin = tol.node_eps * std::max(g.d, 1.0);
  const int K = s.num_pairs();
  for (int k = 1; k <= K; ++k) {
    if (s.rho(k) <= margin) {
      throw DegenerateAngle(
          k, "rho_" + std::to_string(k) +
                 " vanishes; azimuthal angle phi_" + std::to_string(k) +
                 " is undefined");
    }
  }

  double nu = 1.0;
  if (s.v_plus) nu *= *s.v_plus;
  if (s.v_minus) nu *= *s.v_minus;
  for (const auto& z : s.pairs) nu *= std::norm(z);
  if (u.variant() == Variant::planar || nu > 0.0) {
    g.rho = std::pow(nu, 1.0 / u.dim());
  }

  g.phi.reserve(static_cast<std::size_t>(K));
  for (int k = 1; k <= K; ++k) {
    const auto& z = s.pairs[static_cast<std::size_t>(k - 1)];
    double a = std::atan2(z.imag(), z.real());
    if (a < 0.0) a += kTwoPi;
    g.phi.push_back(a);
  }
  const double rho1 = K >= 1 ? s.rho(1) : 0.0;
  for (int k = 2; k <= K; ++k) g.psi.push_back(std::atan2(rho1, s.rho(k)));
  if (s.v_plus)
    g.theta_plus = std::atan2(std::numbers::sqrt2 * rho1, *s.v_plus);
  if (s.v_minus)
    g.theta_minus = std::atan2(std::numbers::sqrt2 * rho1, *s.v_minus);
  return g;
}

}  // namespace ncx
