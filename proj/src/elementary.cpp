#include "ncx/elementary.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ncx {

namespace {

constexpr double kExpGuard = 700.0;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double principal_angle(const std::complex<double>& z) {
  double a = std::atan2(z.imag(), z.real());
  if (a < 0.0) a += kTwoPi;
  return a;
}

// Names every violated log-domain condition; empty result means u is in the
// domain.
std::vector<std::string> log_domain_violations(const Spectrum& s,
                                               double margin) {
  std::vector<std::string> bad;
  if (s.v_plus && !(*s.v_plus > margin)) bad.push_back("v_plus must be positive");
  if (s.v_minus && !(*s.v_minus > margin))
    bad.push_back("v_minus must be positive");
  for (int k = 1; k <= s.num_pairs(); ++k) {
    if (!(s.rho(k) > margin))
      bad.push_back("rho_" + std::to_string(k) + " must be nonzero");
  }
  return bad;
}

std::complex<double> complex_powi(std::complex<double> z, long long m) {
  std::complex<double> acc(1.0, 0.0);
  for (long long e = m; e > 0; e >>= 1) {
    if (e & 1) acc *= z;
    z *= z;
  }
  return acc;
}

}  // namespace

NComplex exp(const NComplex& u) {
  Spectrum s = to_spectrum(u);
  auto guard = [](double v) {
    if (v > kExpGuard) {
      throw Overflow("exp: spectral coordinate exceeds the exp guard");
    }
  };
  if (s.v_plus) {
    guard(*s.v_plus);
    s.v_plus = std::exp(*s.v_plus);
  }
  if (s.v_minus) {
    guard(*s.v_minus);
    s.v_minus = std::exp(*s.v_minus);
  }
  for (auto& z : s.pairs) {
    guard(z.real());
    const double r = std::exp(z.real());
    z = {r * std::cos(z.imag()), r * std::sin(z.imag())};
  }
  return from_spectrum(s);
}

NComplex log(const NComplex& u, const Tolerances& tol) {
  Spectrum s = to_spectrum(u);
  const double margin = tol.node_eps * std::max(modulus(u), 1.0);
  auto bad = log_domain_violations(s, margin);
  if (!bad.empty()) {
    std::string msg = "log domain:";
    for (const auto& b : bad) msg += " " + b + ";";
    throw DomainError(msg);
  }
  if (s.v_plus) s.v_plus = std::log(*s.v_plus);
  if (s.v_minus) s.v_minus = std::log(*s.v_minus);
  for (auto& z : s.pairs) z = {std::log(std::abs(z)), principal_angle(z)};
  return from_spectrum(s);
}

NComplex pow(const NComplex& u, double m, const Tolerances& tol) {
  const bool integral = std::rint(m) == m && std::abs(m) < 1e18;
  if (integral) {
    const long long mi = static_cast<long long>(m);
    if (mi < 0) {
      // may throw NonInvertible on nodal u
      return pow(inverse(u, tol), static_cast<double>(-mi), tol);
    }
    Spectrum s = to_spectrum(u);
    if (s.v_plus) s.v_plus = std::pow(*s.v_plus, m);
    if (s.v_minus) s.v_minus = std::pow(*s.v_minus, m);
    for (auto& z : s.pairs) z = complex_powi(z, mi);
    return from_spectrum(s);
  }

  Spectrum s = to_spectrum(u);
  const double margin = tol.node_eps * std::max(modulus(u), 1.0);
  auto bad = log_domain_violations(s, margin);
  if (!bad.empty()) {
    std::string msg = "pow with non-integer exponent:";
    for (const auto& b : bad) msg += " " + b + ";";
    throw DomainError(msg);
  }
  if (s.v_plus) s.v_plus = std::pow(*s.v_plus, m);
  if (s.v_minus) s.v_minus = std::pow(*s.v_minus, m);
  for (auto& z : s.pairs) {
    const double r = std::pow(std::abs(z), m);
    const double a = m * principal_angle(z);
    z = {r * std::cos(a), r * std::sin(a)};
  }
  return from_spectrum(s);
}

namespace detail {

std::vector<double> exponent_bracket(Variant variant, int n,
                                     std::optional<double> log_vp_ratio,
                                     std::optional<double> log_vm_ratio,
                                     const std::vector<double>& log_psi) {
  std::vector<double> c(static_cast<std::size_t>(n), 0.0);
  for (int p = 1; p < n; ++p) {
    double acc = 0.0;
    if (log_vp_ratio) acc += *log_vp_ratio / n;
    if (log_vm_ratio) acc += (p % 2 != 0 ? -1.0 : 1.0) * *log_vm_ratio / n;
    for (std::size_t i = 0; i < log_psi.size(); ++i) {
      const int k = static_cast<int>(i) + 2;
      const double freq = variant == Variant::polar
                              ? kTwoPi * k * p / n
                              : std::numbers::pi * (2 * k - 1) * p / n;
      // log_psi stores ln(rho_1/rho_k) = ln tan(psi_{k-1})
      acc -= (2.0 / n) * std::cos(freq) * log_psi[i];
    }
    c[static_cast<std::size_t>(p)] = acc;
  }
  return c;
}

}  // namespace detail

ExponentialForm exponential_form(const NComplex& u, const Tolerances& tol) {
  const GeometricForm g = geometric_form(u, tol);  // rejects rho_k ~ 0
  const Spectrum s = to_spectrum(u);
  const double margin = tol.node_eps * std::max(g.d, 1.0);

  auto bad = log_domain_violations(s, margin);
  if (!bad.empty()) {
    std::string msg = "exponential form domain:";
    for (const auto& b : bad) msg += " " + b + ";";
    throw DomainError(msg);
  }
  const int K = s.num_pairs();
  if (K == 0) {
    // polar n = 2: theta_+ and theta_- sit at 0 or pi exactly
    throw DegenerateAngle(0,
                          "no oscillatory pair; the polar angles are "
                          "log-tangent singular");
  }

  const double rho1 = s.rho(1);
  std::optional<double> lp, lm;
  if (s.v_plus) lp = std::log(*s.v_plus / rho1);
  if (s.v_minus) lm = std::log(*s.v_minus / rho1);
  std::vector<double> lpsi;
  for (int k = 2; k <= K; ++k) lpsi.push_back(std::log(rho1 / s.rho(k)));

  ExponentialForm form;
  form.variant = u.variant();
  form.n = u.dim();
  form.rho = g.amplitude();
  form.h_coefficients =
      detail::exponent_bracket(u.variant(), u.dim(), lp, lm, lpsi);
  form.phi = g.phi;
  for (double c : form.h_coefficients) {
    if (!std::isfinite(c)) {
      throw DegenerateAngle(0, "log-tangent term is not finite");
    }
  }
  return form;
}

NComplex reassemble(const ExponentialForm& form) {
  std::vector<double> w = form.h_coefficients;
  const CanonicalBasis basis = canonical_basis(form.variant, form.n);
  NComplex exponent(form.variant, std::move(w));
  for (std::size_t i = 0; i < form.phi.size(); ++i) {
    exponent = exponent + form.phi[i] * basis.e_tilde[i];
  }
  return form.rho * exp(exponent);
}

TrigonometricForm trigonometric_form(const NComplex& u,
                                     const Tolerances& tol) {
  const GeometricForm g = geometric_form(u, tol);  // rejects rho_k ~ 0
  const Spectrum s = to_spectrum(u);
  const int K = s.num_pairs();
  if (K == 0) {
    throw DegenerateAngle(0, "no oscillatory pair; direction axis e_1 absent");
  }
  if (!(g.d > 0.0)) throw DegenerateAngle(0, "zero modulus");

  const double rho1 = s.rho(1);
  const CanonicalBasis basis = canonical_basis(u.variant(), u.dim());

  // normalization sum: 1/tan^2(theta_+) + F(n)/tan^2(theta_-) + 1 +
  // sum_k 1/tan^2(psi_{k-1})
  double norm_sum = 1.0;
  NComplex direction = basis.e[0];
  if (s.v_plus) {
    const double inv_tan = *s.v_plus / (std::numbers::sqrt2 * rho1);
    norm_sum += inv_tan * inv_tan;
    direction = direction + (std::numbers::sqrt2 * inv_tan) * *basis.e_plus;
  }
  if (s.v_minus) {
    const double inv_tan = *s.v_minus / (std::numbers::sqrt2 * rho1);
    norm_sum += inv_tan * inv_tan;
    direction = direction + (std::numbers::sqrt2 * inv_tan) * *basis.e_minus;
  }
  for (int k = 2; k <= K; ++k) {
    const double inv_tan = s.rho(k) / rho1;
    norm_sum += inv_tan * inv_tan;
    direction =
        direction + inv_tan * basis.e[static_cast<std::size_t>(k - 1)];
  }

  TrigonometricForm form{g.d * std::sqrt(u.dim() / 2.0) / std::sqrt(norm_sum),
                         std::move(direction),
                         NComplex::zero(u.variant(), u.dim())};
  for (int k = 1; k <= K; ++k) {
    form.phase = form.phase + g.phi[static_cast<std::size_t>(k - 1)] *
                                  basis.e_tilde[static_cast<std::size_t>(k - 1)];
  }
  return form;
}

}  // namespace ncx
