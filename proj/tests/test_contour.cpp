#include <doctest.h>

#include <numbers>

#include "helpers.hpp"
#include "ncx/contour.hpp"
#include "ncx/elementary.hpp"

using namespace ncx;
using test::Rng;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Integrand constant_one() {
  return {[](const NComplex& u) { return NComplex::one(u.variant(), u.dim()); },
          {}};
}

Integrand identity_fn() {
  return {[](const NComplex& u) { return u; }, {}};
}

Integrand exp_fn() {
  return {[](const NComplex& u) { return exp(u); }, {}};
}

}  // namespace

TEST_SUITE_BEGIN("contour");

TEST_CASE("path construction validates") {
  CHECK_THROWS_AS(make_path({NComplex::one(Variant::polar, 4)}, true),
                  DomainError);
  CHECK_THROWS_AS(make_path({NComplex::one(Variant::polar, 4),
                             NComplex::one(Variant::polar, 6)},
                            true),
                  DimensionMismatch);
}

TEST_CASE("closed loops of constants and linear maps vanish") {
  Rng rng(81);
  for (Variant variant : {Variant::polar, Variant::planar}) {
    for (int n : {2, 4, 5, 6}) {
      if (variant == Variant::planar && n % 2 != 0) continue;
      std::vector<NComplex> vertices;
      for (int v = 0; v < 7; ++v)
        vertices.push_back(test::random_ncx(rng, variant, n, -1, 1));
      const PiecewisePath loop = make_path(vertices, true);
      // the midpoint rule telescopes exactly for f = 1 and f = u
      CHECK(modulus(integrate_fixed(constant_one(), loop, 1)) < 1e-13);
      CHECK(modulus(integrate_fixed(identity_fn(), loop, 4)) < 1e-13);
    }
  }
}

TEST_CASE("open path of f=1 telescopes to b-a") {
  Rng rng(82);
  const NComplex a = test::random_ncx(rng, Variant::polar, 4);
  const NComplex b = test::random_ncx(rng, Variant::polar, 4);
  const NComplex via = test::random_ncx(rng, Variant::polar, 4);
  const PiecewisePath path = make_path({a, via, b}, false);
  CHECK(test::rel_diff(integrate(constant_one(), path, {1e-12, 6}), b - a) <
        1e-12);
}

TEST_CASE("integrals are path independent in singularity-free regions") {
  const int n = 4;
  const NComplex a = NComplex(Variant::planar, {0.1, -0.2, 0.05, 0.2});
  const NComplex b = NComplex(Variant::planar, {-0.15, 0.1, 0.3, -0.1});
  const NComplex mid1 = NComplex(Variant::planar, {0.4, 0.3, -0.2, 0.1});
  const NComplex mid2 = NComplex(Variant::planar, {-0.3, -0.25, 0.15, 0.35});
  const QuadratureSpec quad{1e-9, 16};
  const NComplex i1 = integrate(exp_fn(), make_path({a, mid1, b}, false), quad);
  const NComplex i2 = integrate(exp_fn(), make_path({a, mid2, b}, false), quad);
  CHECK(modulus(i1 - i2) < 1e-8);
  (void)n;
}

TEST_CASE("midpoint refinement converges at second order") {
  const NComplex a = NComplex(Variant::polar, {0.0, 0.0, 0.0});
  const NComplex b = NComplex(Variant::polar, {0.9, 0.4, -0.3});
  const PiecewisePath path = make_path({a, b}, false);
  // reference: exp has the exact path-independent antiderivative exp
  const NComplex truth = exp(b) - exp(a);
  double prev_err = 0.0;
  for (int level = 0; level <= 6; ++level) {
    const double err =
        modulus(integrate_fixed(exp_fn(), path, 1 << level) - truth);
    if (level > 1) {
      const double ratio = prev_err / err;
      CHECK(ratio > 3.0);
      CHECK(ratio < 5.0);
    }
    prev_err = err;
  }
}

TEST_CASE("parallel and serial quadrature agree bitwise") {
  Rng rng(83);
  std::vector<NComplex> vertices;
  for (int v = 0; v < 5; ++v)
    vertices.push_back(test::random_ncx(rng, Variant::planar, 6, -1, 1));
  const PiecewisePath loop = make_path(vertices, true);
  const NComplex par = integrate_fixed(exp_fn(), loop, 64, true);
  const NComplex ser = integrate_fixed(exp_fn(), loop, 64, false);
  for (int p = 0; p < par.dim(); ++p) CHECK(par[p] == ser[p]);
}

TEST_CASE("winding numbers of projected loops") {
  const NComplex origin = NComplex::zero(Variant::planar, 4);
  const PiecewisePath circle = plane_circle(origin, 1, 1.0, 64);
  CHECK(winding_number(circle, origin, 1) == 1);

  // center outside: zero
  const CanonicalBasis basis = canonical_basis(Variant::planar, 4);
  const NComplex outside = 3.0 * std::sqrt(2.0) * basis.e[0];
  CHECK(winding_number(circle, outside, 1) == 0);

  // a loop confined to plane 1 projects to a point in plane 2
  const NComplex off = 0.7 * std::sqrt(2.0) * basis.e[1];
  CHECK(winding_number(circle, off, 2) == 0);

  // reversed orientation gives -1
  PiecewisePath reversed = circle;
  std::reverse(reversed.vertices.begin(), reversed.vertices.end());
  CHECK(winding_number(reversed, origin, 1) == -1);

  // doubly wound loop is recorded as 2
  std::vector<NComplex> doubled = circle.vertices;
  doubled.insert(doubled.end(), circle.vertices.begin(),
                 circle.vertices.end());
  CHECK(winding_number(make_path(doubled, true), origin, 1) == 2);

  const NComplex on_curve =
      std::sqrt(2.0) * basis.e[0];  // radius-1 point of the circle
  CHECK_THROWS_AS(winding_number(circle, on_curve, 1), OnCurve);
  CHECK_THROWS_AS(winding_number(circle, origin, 3), DomainError);
  CHECK_THROWS_AS(
      winding_number(make_path({origin, outside}, false), origin, 1),
      DomainError);
}

TEST_CASE("classical residue at planar n=2") {
  // f = 1, unit circle about the pole: the integral is 2 pi etilde_1
  const NComplex u0(Variant::planar, {0.3, -0.2});
  const PiecewisePath circle = plane_circle(u0, 1, 1.0, 512);
  const ResidueCertificate cert =
      residue_check(constant_one(), u0, circle, {1e-8, 10});
  CHECK(cert.winding == std::vector<int>{1});
  CHECK_FALSE(cert.winding_out_of_domain);
  CHECK(cert.predicted[0] == doctest::Approx(0.0));
  CHECK(cert.predicted[1] == doctest::Approx(kTwoPi));
  CHECK(cert.max_abs_error < 1e-6);
}

TEST_CASE("residues in a single projected plane of the polar algebra") {
  Spectrum sc;
  sc.variant = Variant::polar;
  sc.n = 4;
  sc.v_plus = 1.0;
  sc.v_minus = -1.2;
  sc.pairs = {{0.8, 0.1}};
  const NComplex center = from_spectrum(sc);

  Spectrum s0 = sc;
  s0.v_plus = *s0.v_plus + 0.5;
  s0.v_minus = *s0.v_minus - 0.5;
  s0.pairs[0] += std::complex<double>(0.2, 0.1);
  const NComplex u0 = from_spectrum(s0);

  const PiecewisePath circle = plane_circle(center, 1, 1.0, 1024);
  const ResidueCertificate interior =
      residue_check(exp_fn(), u0, circle, {1e-8, 10});
  CHECK(interior.winding == std::vector<int>{1});
  CHECK(interior.max_abs_error < 1e-6);

  // move the pole's projection outside the circle: everything vanishes
  Spectrum sout = s0;
  sout.pairs[0] += std::complex<double>(4.0, 0.0);
  const ResidueCertificate exterior =
      residue_check(exp_fn(), from_spectrum(sout), circle, {1e-8, 10});
  CHECK(exterior.winding == std::vector<int>{0});
  CHECK(test::max_abs(exterior.predicted) == 0.0);
  CHECK(exterior.max_abs_error < 1e-6);
}

TEST_CASE("multiply wound loops are flagged on the certificate") {
  const NComplex u0(Variant::planar, {0.1, -0.2});
  const PiecewisePath once = plane_circle(u0, 1, 1.0, 128);
  std::vector<NComplex> doubled = once.vertices;
  doubled.insert(doubled.end(), once.vertices.begin(), once.vertices.end());
  const ResidueCertificate cert = residue_check(
      constant_one(), u0, make_path(doubled, true), {1e-7, 10});
  CHECK(cert.winding == std::vector<int>{2});
  CHECK(cert.winding_out_of_domain);
}

TEST_CASE("residue certificates survive loop deformation") {
  Rng rng(84);
  // pole offset from the circle's center so the loop stays off the
  // singular hypersurfaces in the other spectral slots
  Spectrum sc;
  sc.variant = Variant::planar;
  sc.n = 4;
  sc.pairs = {{0.8, -0.2}, {0.7, 0.3}};
  const NComplex center = from_spectrum(sc);
  Spectrum s0 = sc;
  s0.pairs[0] += std::complex<double>(0.5, 0.0);
  s0.pairs[1] += std::complex<double>(0.2, -0.1);  // projects inside plane 2
  const NComplex u0 = from_spectrum(s0);

  PiecewisePath circle = plane_circle(center, 2, 1.0, 256);
  const ResidueCertificate before =
      residue_check(constant_one(), u0, circle, {1e-7, 12});
  // radial jitter about the center keeps the pole projection interior
  for (auto& v : circle.vertices)
    v = center + (1.0 + 0.05 * rng.range(-1.0, 1.0)) * (v - center);
  const ResidueCertificate after =
      residue_check(constant_one(), u0, circle, {1e-7, 12});
  CHECK(before.winding == std::vector<int>{0, 1});
  CHECK(after.winding == std::vector<int>{0, 1});
  CHECK(before.max_abs_error < 1e-6);
  CHECK(after.max_abs_error < 1e-6);
  CHECK(test::rel_diff(before.predicted, after.predicted) < 1e-12);
}

TEST_CASE("sampling near a pole raises SingularPath") {
  const NComplex u0 = NComplex::zero(Variant::planar, 2);
  // a segment straight through the pole
  const PiecewisePath through = make_path(
      {NComplex(Variant::planar, {-1, -1}), NComplex(Variant::planar, {1, 1})},
      false);
  Integrand recip{
      [&](const NComplex& u) { return inverse(u - u0); }, {{u0, 1}}};
  CHECK_THROWS_AS(integrate(recip, through, {1e-9, 6}), SingularPath);
}

TEST_CASE("higher-order pole integrals vanish for constant numerators") {
  // 1/(u-u0)^2 around a loop enclosing the projection: no cyclic residue
  const NComplex u0(Variant::planar, {0.2, -0.1});
  const PiecewisePath circle = plane_circle(u0, 1, 1.0, 1024);
  Integrand second_order{[&](const NComplex& u) {
                           const NComplex w = inverse(u - u0);
                           return mul(w, w);
                         },
                         {{u0, 2}}};
  const NComplex loop = integrate(second_order, circle, {1e-8, 10});
  CHECK(modulus(loop) < 1e-7);
}

TEST_CASE("differential of log splits into single-valued and cyclic parts") {
  Rng rng(85);
  for (Variant variant : {Variant::polar, Variant::planar}) {
    for (int n : {2, 4, 5, 6}) {
      if (variant == Variant::planar && n % 2 != 0) continue;
      const NComplex u0 = NComplex::zero(variant, n);
      for (int s = 0; s < 20; ++s) {
        const NComplex u =
            test::random_off_nodal(rng, variant, n, 0.4, 2.0, false);

        // radial step: pure d rho / rho, no cyclic part
        const double c = 1e-5;
        const DlogDecomposition radial = dlog_decomposition(u, u0, c * u);
        CHECK(test::max_abs(radial.cyclic) < 1e-12);
        CHECK(radial.residual < 1e-9);
        CHECK(radial.single_valued[0] ==
              doctest::Approx(std::log1p(c)).epsilon(1e-6));

        // phase step in pair 1: d phi_1 = eps, nothing else
        if (num_pairs(variant, n) >= 1) {
          const CanonicalBasis basis = canonical_basis(variant, n);
          const double eps = 1e-5;
          const DlogDecomposition phase =
              dlog_decomposition(u, u0, eps * mul(basis.e_tilde[0], u - u0));
          CHECK(phase.residual < 1e-9);
          const Spectrum sc = to_spectrum(phase.cyclic);
          CHECK(std::abs(sc.pairs[0].imag() - eps) < 1e-9);
          CHECK(test::max_abs(phase.single_valued) < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("single-valued parts telescope to zero around a loop") {
  const NComplex u0(Variant::polar, {0.05, 0.02, -0.04, 0.01});
  Spectrum sc = to_spectrum(u0);
  sc.v_plus = *sc.v_plus + 1.0;
  sc.v_minus = *sc.v_minus + 0.8;
  sc.pairs[0] += std::complex<double>(0.9, 0.0);
  const NComplex center = from_spectrum(sc);
  // radius sqrt(n/2) = sqrt(2) in the v-plane: encloses the pole projection
  const PiecewisePath circle = plane_circle(center, 1, 1.0, 256);

  NComplex single_sum = NComplex::zero(Variant::polar, 4);
  NComplex cyclic_sum = NComplex::zero(Variant::polar, 4);
  const std::size_t m = circle.vertices.size();
  for (std::size_t i = 0; i < m; ++i) {
    const NComplex& a = circle.vertices[i];
    const NComplex& b = circle.vertices[(i + 1) % m];
    const DlogDecomposition d = dlog_decomposition(a, u0, b - a);
    single_sum = single_sum + d.single_valued;
    cyclic_sum = cyclic_sum + d.cyclic;
  }
  CHECK(test::max_abs(single_sum) < 1e-10);
  // the cyclic parts accumulate the full turn: 2 pi etilde_1
  const Spectrum looped = to_spectrum(cyclic_sum);
  CHECK(looped.pairs[0].imag() == doctest::Approx(kTwoPi).epsilon(1e-10));
}

TEST_CASE("dlog endpoints must stay off the nodal sets") {
  const NComplex u0 = NComplex::zero(Variant::polar, 2);
  const NComplex on_node(Variant::polar, {1, 1});  // v_- = 0
  CHECK_THROWS_AS(
      dlog_decomposition(on_node, u0, NComplex(Variant::polar, {0.01, 0})),
      NonInvertible);
}

TEST_SUITE_END();
