#include "ncx/series.hpp"

#include <cmath>
#include <complex>
#include <limits>

#include "ncx/spectral.hpp"

namespace ncx {

namespace {

void require_series_shape(const NPowerSeries& series) {
  for (const auto& a : series.coefficients) {
    if (a.variant() != series.variant || a.dim() != series.n) {
      throw DimensionMismatch(
          "power series coefficients must share the series dimension and "
          "variant");
    }
  }
}

}  // namespace

NComplex evaluate(const NPowerSeries& series, const NComplex& u, int terms) {
  require_series_shape(series);
  if (u.variant() != series.variant || u.dim() != series.n) {
    throw DimensionMismatch("evaluate: argument does not match the series");
  }
  const long count =
      std::min<long>(terms, static_cast<long>(series.coefficients.size()));
  Spectrum acc = to_spectrum(NComplex::zero(series.variant, series.n));
  if (count <= 0) return from_spectrum(acc);

  const Spectrum su = to_spectrum(u);
  // Horner per spectral slot: the pair slots run in complex arithmetic.
  for (long l = count - 1; l >= 0; --l) {
    const Spectrum sa =
        to_spectrum(series.coefficients[static_cast<std::size_t>(l)]);
    if (acc.v_plus) acc.v_plus = *acc.v_plus * *su.v_plus + *sa.v_plus;
    if (acc.v_minus) acc.v_minus = *acc.v_minus * *su.v_minus + *sa.v_minus;
    for (std::size_t k = 0; k < acc.pairs.size(); ++k) {
      acc.pairs[k] = acc.pairs[k] * su.pairs[k] + sa.pairs[k];
    }
  }
  return from_spectrum(acc);
}

namespace {

// Windowed geometric-mean ratio estimate over one slot's coefficient
// magnitudes.
double slot_radius(const std::vector<double>& mags, int window) {
  const long last = static_cast<long>(mags.size()) - 1;
  const long first = std::max<long>(0, last - window);
  constexpr double kVanish = 1e-300;
  double log_sum = 0.0;
  int used = 0;
  for (long l = first; l < last; ++l) {
    const double num = mags[static_cast<std::size_t>(l)];
    const double den = mags[static_cast<std::size_t>(l + 1)];
    if (den < kVanish) {
      if (num < kVanish) continue;  // 0/0: no information
      return std::numeric_limits<double>::infinity();
    }
    if (num < kVanish) return 0.0;
    log_sum += std::log(num / den);
    ++used;
  }
  if (used == 0) return std::numeric_limits<double>::infinity();
  return std::exp(log_sum / used);
}

}  // namespace

ConvergenceCylinder convergence_radii(const NPowerSeries& series, int window) {
  require_series_shape(series);
  if (series.coefficients.size() < 2) {
    throw InsufficientData(
        "convergence_radii needs at least two coefficients");
  }
  if (window < 1) throw DomainError("convergence_radii: window must be >= 1");

  const std::size_t count = series.coefficients.size();
  std::vector<Spectrum> spectra;
  spectra.reserve(count);
  for (const auto& a : series.coefficients) spectra.push_back(to_spectrum(a));

  // A slot magnitude far below the dominant slot at the same order is
  // transform leakage, not data; zero it so an unused slot reads as
  // identically vanishing.
  std::vector<double> floor_at(count, 0.0);
  for (std::size_t l = 0; l < count; ++l) {
    double big = 0.0;
    if (spectra[l].v_plus) big = std::max(big, std::abs(*spectra[l].v_plus));
    if (spectra[l].v_minus) big = std::max(big, std::abs(*spectra[l].v_minus));
    for (int k = 1; k <= spectra[l].num_pairs(); ++k)
      big = std::max(big, spectra[l].rho(k));
    floor_at[l] = 1e-13 * big;
  }
  auto clipped = [&](std::size_t l, double mag) {
    return mag <= floor_at[l] ? 0.0 : mag;
  };

  ConvergenceCylinder cyl;
  const int K = num_pairs(series.variant, series.n);
  std::vector<double> mags(count);
  if (spectra.front().v_plus) {
    for (std::size_t l = 0; l < count; ++l)
      mags[l] = clipped(l, std::abs(*spectra[l].v_plus));
    cyl.c_plus = slot_radius(mags, window);
  }
  if (spectra.front().v_minus) {
    for (std::size_t l = 0; l < count; ++l)
      mags[l] = clipped(l, std::abs(*spectra[l].v_minus));
    cyl.c_minus = slot_radius(mags, window);
  }
  for (int k = 1; k <= K; ++k) {
    for (std::size_t l = 0; l < count; ++l)
      mags[l] = clipped(l, spectra[l].rho(k));
    cyl.c.push_back(slot_radius(mags, window));
  }
  return cyl;
}

RiemannReport check_riemann_relations(const NFunction& f, const NComplex& u0,
                                      double h) {
  const int n = u0.dim();
  const Variant variant = u0.variant();
  const bool planar = variant == Variant::planar;
  if (h <= 0.0) h = 1e-4 * std::max(1.0, modulus(u0));

  auto shifted = [&](int a, double ha, int b, double hb) {
    std::vector<double> x = u0.components();
    x[static_cast<std::size_t>(a)] += ha;
    x[static_cast<std::size_t>(b)] += hb;
    return f(NComplex(variant, std::move(x)));
  };

  // First derivatives: D[l][j] ~ dP_j/dx_l.
  std::vector<NComplex> D;
  D.reserve(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) {
    D.push_back((1.0 / (2.0 * h)) *
                (shifted(l, h, l, 0.0) - shifted(l, -h, l, 0.0)));
  }

  RiemannReport report;
  for (int k = 0; k < n; ++k) {
    // chain: s_l * dP_{(k+l) mod n}/dx_l constant in l, with the planar sign
    // flip once the component index wraps
    double base = 0.0;
    for (int l = 0; l < n; ++l) {
      const int j = (k + l) % n;
      const double sign = (planar && k + l >= n) ? -1.0 : 1.0;
      const double v = sign * D[static_cast<std::size_t>(l)][j];
      if (l == 0) {
        base = v;
      } else {
        report.first_order = std::max(report.first_order, std::abs(v - base));
      }
    }
  }

  // Second derivatives S[a][b] ~ d2 f / dx_a dx_b for a <= b.
  const NComplex f0 = f(u0);
  std::vector<std::vector<NComplex>> S(
      static_cast<std::size_t>(n),
      std::vector<NComplex>(static_cast<std::size_t>(n),
                            NComplex::zero(variant, n)));
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      NComplex value =
          a == b
              ? (1.0 / (h * h)) *
                    (shifted(a, h, a, 0.0) - 2.0 * f0 + shifted(a, -h, a, 0.0))
              : (1.0 / (4.0 * h * h)) *
                    (shifted(a, h, b, h) - shifted(a, h, b, -h) -
                     shifted(a, -h, b, h) + shifted(a, -h, b, -h));
      S[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = value;
      S[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] =
          std::move(value);
    }
  }

  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      bool have_base = false;
      double base = 0.0;
      auto visit = [&](int a, int b, double sign) {
        const double v =
            sign * S[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][k];
        if (!have_base) {
          base = v;
          have_base = true;
        } else {
          report.second_order =
              std::max(report.second_order, std::abs(v - base));
        }
      };
      for (int a = 0; a <= l / 2; ++a) visit(a, l - a, 1.0);
      for (int a = l + 1; a <= l + 1 + (n - l - 2) / 2 && n - l - 2 >= 0; ++a)
        visit(a, l + n - a, planar ? -1.0 : 1.0);
    }
  }
  return report;
}

}  // namespace ncx
