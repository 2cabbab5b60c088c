#include "ncx/verify.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>

#include "ncx/contour.hpp"
#include "ncx/cosexp.hpp"
#include "ncx/elementary.hpp"
#include "ncx/io.hpp"
#include "ncx/matrix_rep.hpp"
#include "ncx/polyfactor.hpp"
#include "ncx/series.hpp"
#include "ncx/spectral.hpp"

namespace ncx {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// splitmix64: portable, deterministic across platforms.
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

std::uint64_t mix(std::uint64_t seed, std::uint64_t tag) {
  Rng r(seed ^ (tag * 0xd1342543de82ef95ULL));
  return r.next();
}

std::vector<int> dims_for(Variant variant, int n_max) {
  std::vector<int> out;
  for (int n : {2, 3, 4, 5, 6, 8}) {
    if (n > n_max) continue;
    if (variant == Variant::planar && n % 2 != 0) continue;
    out.push_back(n);
  }
  return out;
}

NComplex random_ncx(Rng& rng, Variant variant, int n, double lo, double hi) {
  std::vector<double> x(static_cast<std::size_t>(n));
  for (double& v : x) v = rng.range(lo, hi);
  return NComplex(variant, std::move(x));
}

// Random point with every spectral coordinate in the annulus
// [mag_lo, mag_hi] (v+/v- sign chosen by `signed_axes`); keeps samples off
// all nodal hypersurfaces.
NComplex random_spectral(Rng& rng, Variant variant, int n, double mag_lo,
                         double mag_hi, bool positive_axes) {
  Spectrum s;
  s.variant = variant;
  s.n = n;
  auto axis = [&]() {
    const double mag = rng.range(mag_lo, mag_hi);
    return positive_axes ? mag : (rng.unit() < 0.5 ? -mag : mag);
  };
  if (variant == Variant::polar) {
    s.v_plus = axis();
    if (n % 2 == 0) s.v_minus = axis();
  }
  for (int k = 0; k < num_pairs(variant, n); ++k) {
    const double rho = rng.range(mag_lo, mag_hi);
    const double phi = rng.range(0.0, kTwoPi);
    s.pairs.emplace_back(rho * std::cos(phi), rho * std::sin(phi));
  }
  return from_spectrum(s);
}

std::string describe(Variant variant, int n, const std::string& what) {
  return what + " (" + std::string(to_string(variant)) + " n=" +
         std::to_string(n) + ")";
}

// Tracks the sub-check closest to (or past) its tolerance.
struct Agg {
  double ratio = 0.0;
  double worst = 0.0;
  double tol = 1.0;
  std::string detail = "all sub-checks at rounding level";

  void update(double residual, double tolerance, const std::string& what) {
    const double r = residual / tolerance;
    if (r > ratio || !std::isfinite(residual)) {
      ratio = std::isfinite(residual) ? r
                                      : std::numeric_limits<double>::infinity();
      worst = residual;
      tol = tolerance;
      detail = what;
    }
  }

  // For sign tests: the deliberately broken input must exceed `floor`.
  void require_at_least(double value, double floor, const std::string& what) {
    if (!(value >= floor)) update(1.0, 0.5, what + " (sign test failed)");
  }

  CheckResult result(const std::string& name) const {
    return {name, ratio <= 1.0, worst, tol, detail};
  }
};

double rel(double diff, double scale) { return diff / std::max(1.0, scale); }

double max_abs(const NComplex& u) {
  double worst = 0.0;
  for (int p = 0; p < u.dim(); ++p) worst = std::max(worst, std::abs(u[p]));
  return worst;
}

// ── 1. arithmetic oracle ────────────────────────────────────────────────

CheckResult check_arithmetic_oracle(const VerifyOptions& o) {
  Agg agg;
  for (Variant variant : {Variant::polar, Variant::planar}) {
    for (int n : dims_for(variant, o.n_max)) {
      Rng rng(mix(o.seed, 100 + n * 2 + (variant == Variant::planar)));
      for (int s = 0; s < o.samples; ++s) {
        const NComplex u = random_ncx(rng, variant, n, -2.0, 2.0);
        const NComplex v = random_ncx(rng, variant, n, -2.0, 2.0);
        const Mat lhs = represent(mul(u, v));
        const Mat rhs = represent(u) * represent(v);
        agg.update(rel(max_abs_diff(lhs, rhs), rhs.max_abs()), 1e-12,
                   describe(variant, n, "rep(u*v) vs rep(u)*rep(v)"));
      }
    }
  }
  return agg.result("1 arithmetic-oracle");
}

// ── 2. exponential oracle ───────────────────────────────────────────────

CheckResult check_exponential_oracle(const VerifyOptions& o) {
  Agg agg;
  for (Variant variant : {Variant::polar, Variant::planar}) {
    for (int n : dims_for(variant, o.n_max)) {
      Rng rng(mix(o.seed, 200 + n * 2 + (variant == Variant::planar)));
      for (int s = 0; s < o.samples; ++s) {
        // spectral coordinates up to magnitude 20
        Spectrum sp;
        sp.variant = variant;
        sp.n = n;
        if (variant == Variant::polar) {
          sp.v_plus = rng.range(-20.0, 20.0);
          if (n % 2 == 0) sp.v_minus = rng.range(-20.0, 20.0);
        }
        for (int k = 0; k < num_pairs(variant, n); ++k)
          sp.pairs.emplace_back(rng.range(-20.0, 20.0), rng.range(-20.0, 20.0));
        const NComplex u = from_spectrum(sp);
        const Mat lhs = represent(exp(u));
        const Mat rhs = matrix_exp(represent(u));
        agg.update(max_abs_diff(lhs, rhs) / std::max(rhs.max_abs(), 1e-300),
                   1e-9, describe(variant, n, "rep(exp u) vs expm(rep u)"));
      }
    }
  }
  return agg.result("2 exponential-oracle");
}

// ── 3. cosexponential identities ────────────────────────────────────────

CheckResult check_cosexp_identities(const VerifyOptions& o) {
  Agg agg;
  for (Variant variant : {Variant::polar, Variant::planar}) {
    // both families run on every n: f_nk is defined for odd n as well
    for (int n : dims_for(Variant::polar, o.n_max)) {
      const CosexpFamily fam{variant, n};
      Rng rng(mix(o.seed, 300 + n * 2 + (variant == Variant::planar)));
      const std::string fname = variant == Variant::polar ? "g" : "f";

      // magnitude scale of the defining sums; heavy internal cancellation
      // (planar families at large |y|) is measured against it
      auto term_scale = [&](double y) {
        double t = 0.0;
        for (int l = 0; l < n; ++l) {
          const double a = variant == Variant::polar
                               ? kTwoPi * l / n
                               : std::numbers::pi * (2 * l + 1) / n;
          t += std::exp(y * std::cos(a)) / n;
        }
        return t;
      };

      for (int s = 0; s < o.samples; ++s) {
        const double y = rng.range(-20.0, 20.0);
        const int k = rng.index(n);
        // series oracle vs closed form
        const double series = eval_series(fam, k, y, o.tol);
        const double closed = eval_closed(fam, k, y);
        agg.update(std::abs(series - closed) /
                       std::max({1.0, std::abs(series), std::abs(closed),
                                 term_scale(y)}),
                   1e-12, describe(variant, n, fname + " series vs closed"));
      }

      for (int s = 0; s < o.samples; ++s) {
        const double y = rng.range(-20.0, 20.0);
        std::vector<double> c(static_cast<std::size_t>(n));
        double scale = 0.0;
        for (int k = 0; k < n; ++k) {
          c[static_cast<std::size_t>(k)] = eval_closed(fam, k, y);
          scale = std::max(scale, std::abs(c[static_cast<std::size_t>(k)]));
        }
        if (variant == Variant::polar) {
          // sum and alternating-sum identities
          double sum = 0.0, alt = 0.0;
          for (int k = 0; k < n; ++k) {
            sum += c[static_cast<std::size_t>(k)];
            alt += (k % 2 != 0 ? -1.0 : 1.0) * c[static_cast<std::size_t>(k)];
          }
          agg.update(rel(std::abs(sum - std::exp(y)), scale), 1e-12,
                     describe(variant, n, "sum g = e^y"));
          if (n % 2 == 0) {
            agg.update(rel(std::abs(alt - std::exp(-y)), scale), 1e-12,
                       describe(variant, n, "alternating sum g = e^-y"));
          }
        }
        // square-sum identity: no oscillatory terms on the right
        double squares = 0.0;
        for (int k = 0; k < n; ++k)
          squares += c[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(k)];
        double target = 0.0;
        for (int l = 0; l < n; ++l) {
          const double a = variant == Variant::polar
                               ? kTwoPi * l / n
                               : std::numbers::pi * (2 * l + 1) / n;
          target += std::exp(2.0 * y * std::cos(a)) / n;
        }
        agg.update(rel(std::abs(squares - target), target), 1e-11,
                   describe(variant, n, "square-sum identity"));
      }

      if (n % 4 == 0) {
        // alternating square sum: purely oscillatory right-hand side
        for (int s = 0; s < o.samples; ++s) {
          const double y = rng.range(-6.0, 6.0);
          double alt = 0.0, scale = 0.0;
          for (int k = 0; k < n; ++k) {
            const double v = eval_closed(fam, k, y);
            alt += (k % 2 != 0 ? -1.0 : 1.0) * v * v;
            scale = std::max(scale, v * v);
          }
          double target = 0.0;
          for (int l = 0; l < n; ++l) {
            const double a = variant == Variant::polar
                                 ? kTwoPi * l / n
                                 : std::numbers::pi * (2 * l + 1) / n;
            target += std::cos(2.0 * y * std::cos(a)) / n;
          }
          agg.update(rel(std::abs(alt - target), 1.0), 1e-10,
                     describe(variant, n, "alternating square sum"));
        }
      }

      for (int s = 0; s < o.samples; ++s) {
        // addition theorem via the convolution with wrap signs
        const double y = rng.range(-6.0, 6.0), z = rng.range(-6.0, 6.0);
        const int k = rng.index(n);
        double conv = 0.0, scale = 0.0;
        for (int j = 0; j < n; ++j) {
          const int l = (k - j + n) % n;
          const double term =
              eval_closed(fam, j, y) * eval_closed(fam, l, z);
          const double sign =
              (variant == Variant::planar && j > k) ? -1.0 : 1.0;
          conv += sign * term;
          scale += std::abs(term);
        }
        agg.update(rel(std::abs(conv - eval_closed(fam, k, y + z)), scale),
                   1e-11, describe(variant, n, "addition theorem"));
      }

      for (int s = 0; s < o.samples; ++s) {
        // derivative chain by central differences
        const double y = rng.range(-6.0, 6.0);
        const int k = rng.index(n);
        const double h = 1e-5;
        const double d =
            (eval_closed(fam, k, y + h) - eval_closed(fam, k, y - h)) /
            (2.0 * h);
        double expected = k == 0 ? eval_closed(fam, n - 1, y)
                                 : eval_closed(fam, k - 1, y);
        if (variant == Variant::planar && k == 0) expected = -expected;
        agg.update(rel(std::abs(d - expected), std::abs(expected)), 1e-7,
                   describe(variant, n, "derivative chain"));
      }
    }
  }
  return agg.result("3 cosexponential-identities");
}

// ── 4. n = 2 reductions ─────────────────────────────────────────────────

CheckResult check_n2_reductions(const VerifyOptions& o) {
  Agg agg;
  Rng rng(mix(o.seed, 400));
  const CosexpFamily g2{Variant::polar, 2};
  const CosexpFamily f2{Variant::planar, 2};
  for (int s = 0; s < o.samples; ++s) {
    const double y = rng.range(-10.0, 10.0);
    agg.update(rel(std::abs(eval_closed(g2, 0, y) - std::cosh(y)),
                   std::cosh(y)),
               1e-13, "g_20 = cosh");
    agg.update(rel(std::abs(eval_closed(g2, 1, y) - std::sinh(y)),
                   std::cosh(y)),
               1e-13, "g_21 = sinh");
    agg.update(rel(std::abs(eval_closed(f2, 0, y) - std::cos(y)), 1.0), 1e-13,
               "f_20 = cos");
    agg.update(rel(std::abs(eval_closed(f2, 1, y) - std::sin(y)), 1.0), 1e-13,
               "f_21 = sin");
  }
  using Cx = std::complex<double>;
  for (int s = 0; s < o.samples; ++s) {
    // the planar 2-complex algebra is the ordinary complex plane
    const Cx a(rng.range(-2.0, 2.0), rng.range(-2.0, 2.0));
    const Cx b(rng.range(-2.0, 2.0), rng.range(-2.0, 2.0));
    const NComplex ua(Variant::planar, {a.real(), a.imag()});
    const NComplex ub(Variant::planar, {b.real(), b.imag()});
    const Cx prod = a * b;
    const NComplex nprod = mul(ua, ub);
    agg.update(rel(std::abs(Cx(nprod[0], nprod[1]) - prod), std::abs(prod)),
               1e-13, "planar n=2 product = complex product");
    const Cx ce = std::exp(a);
    const NComplex ne = exp(ua);
    agg.update(rel(std::abs(Cx(ne[0], ne[1]) - ce), std::abs(ce)), 1e-13,
               "planar n=2 exp = complex exp");
    if (std::abs(a) > 0.1) {
      const NComplex nl = log(ua, o.tol);
      Cx cl = std::log(a);
      if (cl.imag() < 0.0) cl += Cx(0.0, kTwoPi);  // match the [0,2pi) branch
      agg.update(rel(std::abs(Cx(nl[0], nl[1]) - cl), std::abs(cl)), 1e-13,
                 "planar n=2 log = complex log");
    }
  }
  return agg.result("4 n2-reductions");
}

// ── 5. elementary round trips ───────────────────────────────────────────

CheckResult check_elementary_round_trips(const VerifyOptions& o) {
  Agg agg;
  for (Variant variant : {Variant::polar, Variant::planar}) {
    for (int n : dims_for(variant, o.n_max)) {
      Rng rng(mix(o.seed, 500 + n * 2 + (variant == Variant::planar)));
      for (int s = 0; s < o.samples; ++s) {
        const NComplex u = random_spectral(rng, variant, n, 0.2, 3.0, true);
        const NComplex back = exp(log(u, o.tol));
        agg.update(rel(max_abs_diff(back, u), max_abs(u)), 1e-10,
                   describe(variant, n, "exp(log u) = u"));
      }
      for (int s = 0; s < o.samples; ++s) {
        // integer powers, including points pushed onto a nodal hypersurface
        NComplex u = random_ncx(rng, variant, n, -1.5, 1.5);
        const bool nodal = s % 3 == 0;
        if (nodal) {
          Spectrum sp = to_spectrum(u);
          const int slots = (sp.v_plus ? 1 : 0) + (sp.v_minus ? 1 : 0) +
                            sp.num_pairs();
          const int kill = rng.index(slots);
          int i = 0;
          if (sp.v_plus && kill == i++) sp.v_plus = 0.0;
          if (sp.v_minus && kill == i++) sp.v_minus = 0.0;
          for (int k = 0; k < sp.num_pairs(); ++k)
            if (kill == i++) sp.pairs[static_cast<std::size_t>(k)] = 0.0;
          u = from_spectrum(sp);
        }
        const int m_lo = nodal ? 0 : -3;
        for (int m = m_lo; m <= 5; ++m) {
          NComplex ref = NComplex::one(variant, n);
          if (m != 0) {
            const NComplex base = m > 0 ? u : inverse(u, o.tol);
            for (int i = 0; i < std::abs(m); ++i) ref = mul(ref, base);
          }
          agg.update(
              rel(max_abs_diff(pow(u, m, o.tol), ref), max_abs(ref)), 1e-12,
              describe(variant, n, "pow vs repeated mul (m=" +
                                       std::to_string(m) + ")"));
        }
      }
      if (num_pairs(variant, n) >= 1) {
        for (int s = 0; s < o.samples; ++s) {
          const NComplex u = random_spectral(rng, variant, n, 0.2, 3.0, true);
          const NComplex re1 = reassemble(exponential_form(u, o.tol));
          agg.update(rel(max_abs_diff(re1, u), max_abs(u)), 1e-10,
                     describe(variant, n, "exponential form reassembly"));
          const NComplex v = random_spectral(rng, variant, n, 0.2, 3.0, false);
          const TrigonometricForm tf = trigonometric_form(v, o.tol);
          const NComplex re2 =
              tf.scalar * mul(tf.direction, exp(tf.phase));
          agg.update(rel(max_abs_diff(re2, v), max_abs(v)), 1e-10,
                     describe(variant, n, "trigonometric form reassembly"));
        }
      }
    }
  }
  return agg.result("5 elementary-round-trips");
}

// ── 6. analyticity ──────────────────────────────────────────────────────

CheckResult check_analyticity(const VerifyOptions& o) {
  Agg agg;
  for (Variant variant : {Variant::polar, Variant::planar}) {
    for (int n : dims_for(variant, o.n_max)) {
      Rng rng(mix(o.seed, 600 + n * 2 + (variant == Variant::planar)));
      const std::vector<std::pair<std::string, NFunction>> funcs = {
          {"u^2", [](const NComplex& u) { return mul(u, u); }},
          {"u^3", [](const NComplex& u) { return mul(mul(u, u), u); }},
          {"exp(u)", [](const NComplex& u) { return exp(u); }},
      };
      const int reps = std::max(1, o.samples / 40);
      for (int s = 0; s < reps; ++s) {
        const NComplex u0 = random_ncx(rng, variant, n, -0.4, 0.4);
        for (const auto& [fname, f] : funcs) {
          const RiemannReport report = check_riemann_relations(f, u0, 1e-4);
          agg.update(report.first_order, 1e-6,
                     describe(variant, n, fname + " first-order relations"));
          agg.update(report.second_order, 1e-6,
                     describe(variant, n, fname + " second-order relations"));
        }
        // the broken map (negated x_1) must fail loudly
        const NFunction broken = [](const NComplex& u) {
          std::vector<double> x = u.components();
          x[1] = -x[1];
          return NComplex(u.variant(), std::move(x));
        };
        const RiemannReport bad = check_riemann_relations(broken, u0, 1e-4);
        agg.require_at_least(bad.first_order, 1e-2,
                             describe(variant, n, "broken map detected"));
      }
    }
  }
  return agg.result("6 analyticity-residuals");
}

// ── 7. residue theorem ──────────────────────────────────────────────────

struct ResidueConfig {
  Variant variant;
  int n;
  int k;
  bool use_exp;
  bool interior;
};

double residue_config_error(const ResidueConfig& cfg, const Tolerances& tol,
                            std::string& what) {
  const Variant variant = cfg.variant;
  const int n = cfg.n;
  Spectrum sc;
  sc.variant = variant;
  sc.n = n;
  if (variant == Variant::polar) {
    sc.v_plus = 1.1;
    if (n % 2 == 0) sc.v_minus = -1.3;
  }
  for (int j = 1; j <= num_pairs(variant, n); ++j)
    sc.pairs.emplace_back(0.9 + 0.1 * j, -0.6);
  const NComplex center = from_spectrum(sc);

  Spectrum s0 = sc;
  if (s0.v_plus) s0.v_plus = *s0.v_plus + 0.55;
  if (s0.v_minus) s0.v_minus = *s0.v_minus - 0.65;
  for (int j = 1; j <= s0.num_pairs(); ++j) {
    auto& z = s0.pairs[static_cast<std::size_t>(j - 1)];
    if (j == cfg.k) {
      z += cfg.interior ? std::complex<double>(0.25, 0.15)
                        : std::complex<double>(1.8 * std::sqrt(n / 2.0), 0.0);
    } else {
      z += std::complex<double>(0.45, -0.35);
    }
  }
  const NComplex u0 = from_spectrum(s0);

  Integrand f;
  f.eval = cfg.use_exp ? NFunction([](const NComplex& u) { return exp(u); })
                       : NFunction([](const NComplex& u) {
                           return NComplex::one(u.variant(), u.dim());
                         });
  const PiecewisePath path = plane_circle(center, cfg.k, 1.0, 1024);
  const ResidueCertificate cert =
      residue_check(f, u0, path, {1e-8, 10}, tol);

  what = describe(variant, n,
                  std::string(cfg.use_exp ? "f=exp" : "f=1") + " plane k=" +
                      std::to_string(cfg.k) +
                      (cfg.interior ? " interior" : " exterior"));
  // the winding pattern itself is part of the contract
  for (int j = 1; j <= static_cast<int>(cert.winding.size()); ++j) {
    const int expected = (cfg.interior && j == cfg.k) ? 1 : 0;
    if (cert.winding[static_cast<std::size_t>(j - 1)] != expected) {
      what += " [wrong winding]";
      return std::numeric_limits<double>::infinity();
    }
  }
  return cert.max_abs_error;
}

CheckResult check_residue_theorem(const VerifyOptions& o) {
  Agg agg;
  std::vector<ResidueConfig> configs;
  for (Variant variant : {Variant::polar, Variant::planar}) {
    for (int n : dims_for(variant, o.n_max)) {
      for (int k = 1; k <= num_pairs(variant, n); ++k) {
        for (bool use_exp : {false, true}) {
          for (bool interior : {true, false}) {
            configs.push_back({variant, n, k, use_exp, interior});
          }
        }
      }
    }
  }
  std::vector<double> errors(configs.size());
  std::vector<std::string> details(configs.size());
#if defined(NCX_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
  for (long i = 0; i < static_cast<long>(configs.size()); ++i) {
    try {
      errors[static_cast<std::size_t>(i)] =
          residue_config_error(configs[static_cast<std::size_t>(i)], o.tol,
                               details[static_cast<std::size_t>(i)]);
    } catch (const Error& e) {
      errors[static_cast<std::size_t>(i)] =
          std::numeric_limits<double>::infinity();
      details[static_cast<std::size_t>(i)] = e.name();
    }
  }
  for (std::size_t i = 0; i < configs.size(); ++i) {
    agg.update(errors[i], 1e-6, details[i]);
  }

  // closed-loop integrals of analytic functions vanish
  for (Variant variant : {Variant::polar, Variant::planar}) {
    for (int n : dims_for(variant, o.n_max)) {
      Rng rng(mix(o.seed, 700 + n * 2 + (variant == Variant::planar)));
      std::vector<NComplex> big, small;
      const NComplex base = random_ncx(rng, variant, n, -0.3, 0.3);
      for (int v = 0; v < 6; ++v) {
        big.push_back(random_ncx(rng, variant, n, -1.0, 1.0));
        small.push_back(base + random_ncx(rng, variant, n, -0.05, 0.05));
      }
      const Integrand ident{
          [](const NComplex& u) { return u; }, {}};
      const NComplex loop_u =
          integrate(ident, make_path(big, true), {1e-12, 14}, o.tol);
      agg.update(modulus(loop_u), 1e-10,
                 describe(variant, n, "closed loop of f(u)=u"));
      const Integrand expf{[](const NComplex& u) { return exp(u); }, {}};
      const NComplex loop_e =
          integrate(expf, make_path(small, true), {5e-12, 16}, o.tol);
      agg.update(modulus(loop_e), 1e-10,
                 describe(variant, n, "closed small loop of exp"));
    }
  }
  return agg.result("7 residue-theorem");
}

// ── 8. factorization ────────────────────────────────────────────────────

CheckResult check_factorization(const VerifyOptions& o) {
  Agg agg;
  auto poly_eval = [](const NPolynomial& p, const NComplex& u) {
    NComplex acc = NComplex::one(p.variant, p.n);
    for (const auto& a : p.coefficients) acc = mul(acc, u) + a;
    return acc;
  };

  for (Variant variant : {Variant::polar, Variant::planar}) {
    for (int n : dims_for(variant, o.n_max)) {
      const NComplex zero = NComplex::zero(variant, n);
      // u^2 - 1 (polar) and u^2 + 1 (planar) root-set counts
      const bool planar = variant == Variant::planar;
      const NPolynomial p2{variant, n,
                           {zero, planar ? NComplex::one(variant, n)
                                         : -NComplex::one(variant, n)}};
      const auto all = factorizations(p2, 100000, o.tol);
      long expected = 0;
      if (planar) {
        expected = 1L << (n / 2 - 1);
      } else {
        expected = n % 2 == 0 ? (1L << (n / 2)) : (1L << ((n - 1) / 2));
      }
      agg.update(std::abs(static_cast<double>(
                     static_cast<long>(all.size()) - expected)),
                 0.5,
                 describe(variant, n,
                          planar ? "count of u^2+1 root sets"
                                 : "count of u^2-1 root sets"));
      for (const auto& f : all) {
        for (const auto& r : f.linear_roots) {
          agg.update(max_abs(poly_eval(p2, r)), 1e-8,
                     describe(variant, n, "|P(u_p)| at enumerated root"));
        }
      }

      // expand-then-factor round trip on separated constructed roots
      Rng rng(mix(o.seed, 800 + n * 2 + (variant == Variant::planar)));
      const int reps = std::max(1, o.samples / 20);
      for (int s = 0; s < reps; ++s) {
        const int m = 2 + rng.index(4);  // degree 2..5
        Factorization built;
        // separated per-slot root values drawn from a jittered lattice
        const int slots = (variant == Variant::polar ? 1 : 0) +
                          (has_v_minus(variant, n) ? 1 : 0) +
                          num_pairs(variant, n);
        std::vector<std::vector<std::complex<double>>> slot_roots(
            static_cast<std::size_t>(slots));
        for (auto& list : slot_roots) {
          std::vector<int> cells{-3, -2, -1, 1, 2, 3};
          for (int i = 5; i > 0; --i) std::swap(cells[static_cast<std::size_t>(i)],
                                                cells[static_cast<std::size_t>(rng.index(i + 1))]);
          for (int p = 0; p < m; ++p) {
            list.emplace_back(0.6 * cells[static_cast<std::size_t>(p)] +
                                  rng.range(-0.15, 0.15),
                              0.0);
          }
        }
        // pair slots may take complex parts
        for (int si = (variant == Variant::polar ? 1 : 0) +
                      (has_v_minus(variant, n) ? 1 : 0);
             si < slots; ++si) {
          for (auto& r : slot_roots[static_cast<std::size_t>(si)])
            r += std::complex<double>(0.0, rng.range(-1.0, 1.0));
        }
        for (int p = 0; p < m; ++p) {
          Spectrum sp;
          sp.variant = variant;
          sp.n = n;
          std::size_t si = 0;
          if (variant == Variant::polar)
            sp.v_plus = slot_roots[si++][static_cast<std::size_t>(p)].real();
          if (has_v_minus(variant, n))
            sp.v_minus = slot_roots[si++][static_cast<std::size_t>(p)].real();
          for (int k = 0; k < num_pairs(variant, n); ++k)
            sp.pairs.push_back(slot_roots[si++][static_cast<std::size_t>(p)]);
          built.linear_roots.push_back(from_spectrum(sp));
        }
        const NPolynomial constructed = expand(built, variant, n);
        const auto recovered = factorizations(constructed, 1, o.tol);
        if (recovered.empty()) {
          agg.update(1.0, 0.5, describe(variant, n, "no factorization found"));
          continue;
        }
        const NPolynomial back = expand(recovered.front(), variant, n);
        double scale = 0.0, diff = 0.0;
        for (int l = 0; l < constructed.degree(); ++l) {
          scale = std::max(scale,
                           max_abs(constructed.coefficients[static_cast<std::size_t>(l)]));
          diff = std::max(
              diff, max_abs_diff(back.coefficients[static_cast<std::size_t>(l)],
                                 constructed.coefficients[static_cast<std::size_t>(l)]));
        }
        agg.update(rel(diff, scale), 1e-8,
                   describe(variant, n, "expand(factor(expand)) round trip"));
      }
    }
  }
  return agg.result("8 polynomial-factorization");
}

// ── 9. power series ─────────────────────────────────────────────────────

CheckResult check_power_series(const VerifyOptions& o) {
  Agg agg;
  for (Variant variant : {Variant::polar, Variant::planar}) {
    for (int n : dims_for(variant, o.n_max)) {
      Rng rng(mix(o.seed, 900 + n * 2 + (variant == Variant::planar)));

      // constructed radii: per-slot geometric decay r_s^-l
      const int slots = (variant == Variant::polar ? 1 : 0) +
                        (has_v_minus(variant, n) ? 1 : 0) +
                        num_pairs(variant, n);
      // spread kept modest: the slots' coefficient magnitudes must all stay
      // resolvable above the cross-slot transform noise over the whole tail
      std::vector<double> radii(static_cast<std::size_t>(slots));
      for (int s = 0; s < slots; ++s)
        radii[static_cast<std::size_t>(s)] = 0.6 + 0.3 * s;
      NPowerSeries series{variant, n, {}};
      for (int l = 0; l < 20; ++l) {
        Spectrum sp;
        sp.variant = variant;
        sp.n = n;
        std::size_t si = 0;
        if (variant == Variant::polar) sp.v_plus = std::pow(radii[si++], -l);
        if (has_v_minus(variant, n)) sp.v_minus = std::pow(radii[si++], -l);
        for (int k = 0; k < num_pairs(variant, n); ++k)
          sp.pairs.emplace_back(std::pow(radii[si++], -l), 0.0);
        series.coefficients.push_back(from_spectrum(sp));
      }
      const ConvergenceCylinder cyl = convergence_radii(series, 8);
      std::vector<double> estimates;
      if (cyl.c_plus) estimates.push_back(*cyl.c_plus);
      if (cyl.c_minus) estimates.push_back(*cyl.c_minus);
      estimates.insert(estimates.end(), cyl.c.begin(), cyl.c.end());
      for (std::size_t si = 0; si < estimates.size(); ++si) {
        agg.update(std::abs(estimates[si] - radii[si]) / radii[si], 0.05,
                   describe(variant, n, "radius of constructed slot " +
                                            std::to_string(si)));
      }

      // spectral evaluation vs direct Horner with mul
      const int reps = std::max(1, o.samples / 10);
      for (int s = 0; s < reps; ++s) {
        NPowerSeries rand_series{variant, n, {}};
        for (int l = 0; l < 8; ++l)
          rand_series.coefficients.push_back(
              random_ncx(rng, variant, n, -1.0, 1.0));
        const NComplex u = random_ncx(rng, variant, n, -0.8, 0.8);
        const NComplex spectral = evaluate(rand_series, u, 8);
        NComplex horner = NComplex::zero(variant, n);
        for (int l = 7; l >= 0; --l)
          horner = mul(horner, u) +
                   rand_series.coefficients[static_cast<std::size_t>(l)];
        agg.update(rel(max_abs_diff(spectral, horner), max_abs(horner)),
                   1e-10, describe(variant, n, "spectral vs Horner"));
      }

      // sub-multiplicative modulus bound
      const double bound = variant == Variant::polar ? std::sqrt(n)
                                                     : std::sqrt(n / 2.0);
      for (int s = 0; s < o.samples; ++s) {
        const NComplex u = random_ncx(rng, variant, n, -3.0, 3.0);
        const NComplex v = random_ncx(rng, variant, n, -3.0, 3.0);
        const double lhs = modulus(mul(u, v));
        const double rhs = bound * modulus(u) * modulus(v);
        agg.update(lhs > rhs * (1.0 + 1e-12) ? (lhs - rhs) / rhs : 0.0, 1e-12,
                   describe(variant, n, "|uv| <= sqrt bound"));
      }
    }
  }
  return agg.result("9 power-series");
}

// ── 10. odd-dimension planar/polar equivalence ──────────────────────────

CheckResult check_odd_planar(const VerifyOptions& o) {
  Agg agg;
  for (int n : {3, 5}) {
    if (n > o.n_max) continue;
    Rng rng(mix(o.seed, 1000 + n));
    for (int s = 0; s < o.samples; ++s) {
      std::vector<double> x(static_cast<std::size_t>(n)),
          y(static_cast<std::size_t>(n));
      for (double& v : x) v = rng.range(-2.0, 2.0);
      for (double& v : y) v = rng.range(-2.0, 2.0);
      // planar-rule product computed from the raw basis signs
      std::vector<double> w(static_cast<std::size_t>(n), 0.0);
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          const BasisProduct bp = basis_product(Variant::planar, n, j, k);
          w[static_cast<std::size_t>(bp.index)] +=
              bp.sign * x[static_cast<std::size_t>(j)] *
              y[static_cast<std::size_t>(k)];
        }
      }
      const NComplex mapped = odd_planar_as_polar(w);
      const NComplex expected =
          mul(odd_planar_as_polar(x), odd_planar_as_polar(y));
      agg.update(rel(max_abs_diff(mapped, expected), max_abs(expected)),
                 1e-12, "map(x*y) = map(x)*map(y) (n=" + std::to_string(n) + ")");
    }
  }
  return agg.result("10 odd-planar-equivalence");
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  options.tol.validate();
  std::vector<CheckResult> results;
  results.push_back(check_arithmetic_oracle(options));
  results.push_back(check_exponential_oracle(options));
  results.push_back(check_cosexp_identities(options));
  results.push_back(check_n2_reductions(options));
  results.push_back(check_elementary_round_trips(options));
  results.push_back(check_analyticity(options));
  results.push_back(check_residue_theorem(options));
  results.push_back(check_factorization(options));
  results.push_back(check_power_series(options));
  results.push_back(check_odd_planar(options));
  return results;
}

void print_results(std::ostream& out, const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    char line[256];
    std::snprintf(line, sizeof line, "[%s] %-28s worst %.3e  tol %.1e  %s",
                  r.passed ? "PASS" : "FAIL", r.name.c_str(), r.worst,
                  r.tolerance, r.detail.c_str());
    out << line << "\n";
  }
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace ncx
