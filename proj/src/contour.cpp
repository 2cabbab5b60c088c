#include "ncx/contour.hpp"

#include <atomic>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "ncx/elementary.hpp"
#include "ncx/spectral.hpp"

namespace ncx {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<std::pair<const NComplex*, const NComplex*>> segments_of(
    const PiecewisePath& path) {
  std::vector<std::pair<const NComplex*, const NComplex*>> segs;
  const std::size_t m = path.vertices.size();
  for (std::size_t i = 0; i + 1 < m; ++i)
    segs.emplace_back(&path.vertices[i], &path.vertices[i + 1]);
  if (path.closed) segs.emplace_back(&path.vertices[m - 1], &path.vertices[0]);
  return segs;
}

// Smallest spectral coordinate magnitude of w, for nodal-margin tests.
double min_spectral_magnitude(const NComplex& w) {
  const Spectrum s = to_spectrum(w);
  double worst = std::numeric_limits<double>::infinity();
  if (s.v_plus) worst = std::min(worst, std::abs(*s.v_plus));
  if (s.v_minus) worst = std::min(worst, std::abs(*s.v_minus));
  for (int k = 1; k <= s.num_pairs(); ++k) worst = std::min(worst, s.rho(k));
  return worst;
}

}  // namespace

PiecewisePath make_path(std::vector<NComplex> vertices, bool closed) {
  if (vertices.size() < 2) {
    throw DomainError("a path needs at least two vertices");
  }
  for (const auto& v : vertices) {
    if (!v.same_shape(vertices.front())) {
      throw DimensionMismatch("path vertices must share dimension and variant");
    }
  }
  PiecewisePath path;
  path.variant = vertices.front().variant();
  path.n = vertices.front().dim();
  path.vertices = std::move(vertices);
  path.closed = closed;
  return path;
}

PiecewisePath plane_circle(const NComplex& center, int k, double radius,
                           int segments) {
  const int n = center.dim();
  if (k < 1 || k > num_pairs(center.variant(), n)) {
    throw DomainError("plane_circle: pair index out of range");
  }
  if (segments < 3) throw DomainError("plane_circle: need >= 3 segments");
  const CanonicalBasis basis = canonical_basis(center.variant(), n);
  // unit vectors along the xi_k / eta_k axes
  const NComplex ex =
      std::sqrt(n / 2.0) * basis.e[static_cast<std::size_t>(k - 1)];
  const NComplex ey =
      std::sqrt(n / 2.0) * basis.e_tilde[static_cast<std::size_t>(k - 1)];
  std::vector<NComplex> vertices;
  vertices.reserve(static_cast<std::size_t>(segments));
  for (int i = 0; i < segments; ++i) {
    const double t = kTwoPi * i / segments;
    vertices.push_back(center + (radius * std::cos(t)) * ex +
                       (radius * std::sin(t)) * ey);
  }
  return make_path(std::move(vertices), true);
}

NComplex integrate_fixed(const Integrand& f, const PiecewisePath& path,
                         int pieces_per_segment, bool parallel,
                         const Tolerances& tol) {
  if (pieces_per_segment < 1) {
    throw DomainError("integrate_fixed: need at least one piece per segment");
  }
  const auto segs = segments_of(path);
  const int n = path.n;
  const long total =
      static_cast<long>(segs.size()) * static_cast<long>(pieces_per_segment);

  // Per-piece contributions are filled independently and reduced serially in
  // index order, so the parallel and serial paths agree bitwise.
  std::vector<double> table(static_cast<std::size_t>(total) * n);
  std::atomic<bool> failed{false};
  std::string failure_name, failure_message;

  auto compute_piece = [&](long idx) {
    const auto& [a, b] = segs[static_cast<std::size_t>(idx / pieces_per_segment)];
    const long piece = idx % pieces_per_segment;
    const NComplex step = (1.0 / pieces_per_segment) * (*b - *a);
    const NComplex mid = *a + (piece + 0.5) * step;
    for (const Pole& pole : f.poles) {
      const NComplex w = mid - pole.center;
      const double margin = tol.node_eps * std::max(modulus(w), 1.0);
      if (min_spectral_magnitude(w) <= margin) {
        throw SingularPath(
            "sample point within the nodal margin of a pole's singular "
            "hypersurfaces");
      }
    }
    const NComplex value = mul(f.eval(mid), step);
    for (int p = 0; p < n; ++p)
      table[static_cast<std::size_t>(idx) * n + p] = value[p];
  };

  auto guarded = [&](long idx) {
    if (failed.load(std::memory_order_relaxed)) return;
    try {
      compute_piece(idx);
    } catch (const Error& e) {
      bool expected = false;
      if (failed.compare_exchange_strong(expected, true)) {
        failure_name = e.name();
        failure_message = e.what();
      }
    }
  };

  if (parallel) {
#if defined(NCX_HAVE_OPENMP)
#pragma omp parallel for schedule(static)
#endif
    for (long idx = 0; idx < total; ++idx) guarded(idx);
  } else {
    for (long idx = 0; idx < total; ++idx) guarded(idx);
  }
  if (failed.load()) {
    if (failure_name == "SingularPath") throw SingularPath(failure_message);
    throw Error(failure_name, failure_message);
  }

  std::vector<double> sum(static_cast<std::size_t>(n), 0.0);
  for (long idx = 0; idx < total; ++idx)
    for (int p = 0; p < n; ++p)
      sum[static_cast<std::size_t>(p)] +=
          table[static_cast<std::size_t>(idx) * n + p];
  return NComplex(path.variant, std::move(sum));
}

NComplex integrate(const Integrand& f, const PiecewisePath& path,
                   const QuadratureSpec& quad, const Tolerances& tol) {
  NComplex previous = integrate_fixed(f, path, 1, true, tol);
  for (int level = 1; level <= quad.max_levels; ++level) {
    NComplex current = integrate_fixed(f, path, 1 << level, true, tol);
    if (modulus(current - previous) < quad.tol) return current;
    previous = std::move(current);
  }
  throw NotConverged("integrate: refinement limit reached before estimates "
                     "agreed to quad.tol");
}

int winding_number(const PiecewisePath& path, const NComplex& center, int k,
                   const Tolerances& tol) {
  if (!path.closed) {
    throw DomainError("winding_number is defined for closed paths");
  }
  if (k < 1 || k > num_pairs(path.variant, path.n)) {
    throw DomainError("winding_number: pair index out of range");
  }
  if (!center.same_shape(path.vertices.front())) {
    throw DimensionMismatch("winding_number: center does not match the path");
  }

  const std::complex<double> m = to_spectrum(center).xi_eta(k);
  std::vector<std::complex<double>> proj;
  proj.reserve(path.vertices.size());
  double scale = std::abs(m);
  for (const auto& v : path.vertices) {
    proj.push_back(to_spectrum(v).xi_eta(k));
    scale = std::max(scale, std::abs(proj.back()));
  }
  const double margin = tol.node_eps * std::max(scale, 1.0);

  double angle = 0.0;
  const std::size_t count = proj.size();
  for (std::size_t i = 0; i < count; ++i) {
    const std::complex<double> p = proj[i] - m;
    const std::complex<double> q = proj[(i + 1) % count] - m;
    // distance from the projected center to segment pq
    const std::complex<double> d = q - p;
    const double len2 = std::norm(d);
    double t = len2 > 0.0 ? -(p.real() * d.real() + p.imag() * d.imag()) / len2
                          : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    if (std::abs(p + t * d) <= margin) {
      throw OnCurve("projected path passes through the projected center");
    }
    angle += std::atan2(p.real() * q.imag() - p.imag() * q.real(),
                        p.real() * q.real() + p.imag() * q.imag());
  }
  return static_cast<int>(std::lround(angle / kTwoPi));
}

ResidueCertificate residue_check(const Integrand& f, const NComplex& u0,
                                 const PiecewisePath& path,
                                 const QuadratureSpec& quad,
                                 const Tolerances& tol) {
  Integrand g;
  g.eval = [&f, &u0, &tol](const NComplex& u) {
    return mul(f.eval(u), inverse(u - u0, tol));
  };
  g.poles = f.poles;
  g.poles.push_back({u0, 1});

  ResidueCertificate cert{integrate(g, path, quad, tol),
                          NComplex::zero(path.variant, path.n),
                          {},
                          0.0,
                          false};

  const CanonicalBasis basis = canonical_basis(path.variant, path.n);
  NComplex cyclic = NComplex::zero(path.variant, path.n);
  const int K = num_pairs(path.variant, path.n);
  for (int k = 1; k <= K; ++k) {
    const int w = winding_number(path, u0, k, tol);
    cert.winding.push_back(w);
    if (w != 0 && w != 1) cert.winding_out_of_domain = true;
    cyclic = cyclic +
             static_cast<double>(w) * basis.e_tilde[static_cast<std::size_t>(k - 1)];
  }
  cert.predicted = kTwoPi * mul(f.eval(u0), cyclic);
  cert.max_abs_error = max_abs_diff(cert.integral, cert.predicted);
  return cert;
}

DlogDecomposition dlog_decomposition(const NComplex& u, const NComplex& u0,
                                     const NComplex& du,
                                     const Tolerances& tol) {
  const NComplex w1 = u - u0;
  const NComplex w2 = w1 + du;
  DlogDecomposition out{mul(du, inverse(w1, tol)),
                        NComplex::zero(u.variant(), u.dim()),
                        NComplex::zero(u.variant(), u.dim()), 0.0};
  (void)inverse(w2, tol);  // both endpoints must sit off the nodal sets

  const Spectrum s1 = to_spectrum(w1);
  const Spectrum s2 = to_spectrum(w2);
  const int n = u.dim();
  const int K = s1.num_pairs();

  // Geometric-form log quantities at both endpoints; the h_p brackets take
  // their finite differences.  Signs of v+/v- cannot flip without crossing a
  // nodal set, so log-moduli are used throughout.
  auto log_quantities = [&](const Spectrum& s) {
    struct Q {
      double log_nu = 0.0;
      std::optional<double> lp, lm;
      std::vector<double> lpsi;
    } q;
    const double rho1 = K >= 1 ? s.rho(1) : 1.0;
    if (s.v_plus) {
      q.log_nu += std::log(std::abs(*s.v_plus));
      q.lp = std::log(std::abs(*s.v_plus) / rho1);
    }
    if (s.v_minus) {
      q.log_nu += std::log(std::abs(*s.v_minus));
      q.lm = std::log(std::abs(*s.v_minus) / rho1);
    }
    for (int k = 1; k <= K; ++k) q.log_nu += 2.0 * std::log(s.rho(k));
    for (int k = 2; k <= K; ++k) q.lpsi.push_back(std::log(rho1 / s.rho(k)));
    return q;
  };

  const auto q1 = log_quantities(s1);
  const auto q2 = log_quantities(s2);
  const auto b1 =
      detail::exponent_bracket(u.variant(), n, q1.lp, q1.lm, q1.lpsi);
  const auto b2 =
      detail::exponent_bracket(u.variant(), n, q2.lp, q2.lm, q2.lpsi);

  std::vector<double> single(static_cast<std::size_t>(n));
  single[0] = (q2.log_nu - q1.log_nu) / n;  // d rho / rho
  for (int p = 1; p < n; ++p)
    single[static_cast<std::size_t>(p)] =
        b2[static_cast<std::size_t>(p)] - b1[static_cast<std::size_t>(p)];
  out.single_valued = NComplex(u.variant(), std::move(single));

  const CanonicalBasis basis = canonical_basis(u.variant(), n);
  for (int k = 1; k <= K; ++k) {
    double dphi = std::arg(s2.pairs[static_cast<std::size_t>(k - 1)] /
                           s1.pairs[static_cast<std::size_t>(k - 1)]);
    out.cyclic =
        out.cyclic + dphi * basis.e_tilde[static_cast<std::size_t>(k - 1)];
  }
  out.residual = max_abs_diff(out.whole, out.single_valued + out.cyclic);
  return out;
}

}  // namespace ncx
