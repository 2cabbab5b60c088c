#include <doctest.h>

#include "helpers.hpp"
#include "ncx/polyfactor.hpp"
#include "ncx/spectral.hpp"

using namespace ncx;
using test::Rng;

namespace {

NComplex poly_eval(const NPolynomial& p, const NComplex& u) {
  NComplex acc = NComplex::one(p.variant, p.n);
  for (const auto& a : p.coefficients) acc = mul(acc, u) + a;
  return acc;
}

NPolynomial u2_minus_1(Variant variant, int n) {
  return {variant, n,
          {NComplex::zero(variant, n), -NComplex::one(variant, n)}};
}

NPolynomial u2_plus_1(Variant variant, int n) {
  return {variant, n, {NComplex::zero(variant, n), NComplex::one(variant, n)}};
}

}  // namespace

TEST_SUITE_BEGIN("polyfactor");

TEST_CASE("component polynomials split the coefficients by slot") {
  // u^2 - 1 projects to t^2 - 1 in every slot
  for (int n : {4, 6}) {
    const auto slots = component_polynomials(u2_minus_1(Variant::polar, n));
    CHECK(slots.size() == static_cast<std::size_t>(2 + num_pairs(Variant::polar, n)));
    for (const auto& slot : slots) {
      REQUIRE(slot.coefficients.size() == 2);
      CHECK(std::abs(slot.coefficients[0]) < 1e-14);
      CHECK(std::abs(slot.coefficients[1] - std::complex<double>(-1, 0)) <
            1e-14);
    }
  }
  for (int n : {2, 4, 8}) {
    const auto slots = component_polynomials(u2_plus_1(Variant::planar, n));
    CHECK(slots.size() == static_cast<std::size_t>(n / 2));
    for (const auto& slot : slots)
      CHECK(std::abs(slot.coefficients[1] - std::complex<double>(1, 0)) <
            1e-14);
  }

  // coefficients are the spectra of the a_l
  Rng rng(91);
  NPolynomial p{Variant::polar, 5, {}};
  for (int l = 0; l < 3; ++l)
    p.coefficients.push_back(test::random_ncx(rng, Variant::polar, 5));
  const auto slots = component_polynomials(p);
  for (int l = 0; l < 3; ++l) {
    const Spectrum s = to_spectrum(p.coefficients[static_cast<std::size_t>(l)]);
    CHECK(slots[0].coefficients[static_cast<std::size_t>(l)].real() ==
          doctest::Approx(*s.v_plus));
    CHECK(std::abs(slots[1].coefficients[static_cast<std::size_t>(l)] -
                   s.pairs[0]) < 1e-14);
  }
}

TEST_CASE("slot roots of the quadratic benchmarks") {
  const ComponentRoots r1 = roots(u2_minus_1(Variant::polar, 4));
  for (const auto& slot : r1.slots) {
    REQUIRE(slot.roots.size() == 2);
    CHECK(std::abs(slot.roots[0] - std::complex<double>(-1, 0)) < 1e-12);
    CHECK(std::abs(slot.roots[1] - std::complex<double>(1, 0)) < 1e-12);
  }
  const ComponentRoots r2 = roots(u2_plus_1(Variant::planar, 6));
  for (const auto& slot : r2.slots) {
    REQUIRE(slot.roots.size() == 2);
    CHECK(std::abs(slot.roots[0] - std::complex<double>(0, -1)) < 1e-12);
    CHECK(std::abs(slot.roots[1] - std::complex<double>(0, 1)) < 1e-12);
  }
}

TEST_CASE("root recovery for constructed products") {
  Rng rng(92);
  for (Variant variant : {Variant::polar, Variant::planar}) {
    const int n = variant == Variant::polar ? 5 : 4;
    for (int s = 0; s < 10; ++s) {
      Factorization built;
      for (int p = 0; p < 3; ++p) {
        built.linear_roots.push_back(
            test::random_off_nodal(rng, variant, n, 0.4, 2.0, false));
      }
      const NPolynomial poly = expand(built, variant, n);
      const ComponentRoots found = roots(poly);
      // every constructed root evaluates to ~0 in every slot polynomial
      for (const auto& r : built.linear_roots) {
        CHECK(test::max_abs(poly_eval(poly, r)) < 1e-8);
      }
      for (const auto& slot : found.slots)
        CHECK(slot.roots.size() == 3);
    }
  }
}

TEST_CASE("root-set counts for u^2 -/+ 1") {
  CHECK(count_factorizations(u2_minus_1(Variant::polar, 4)) == 4);
  CHECK(count_factorizations(u2_minus_1(Variant::polar, 6)) == 8);
  CHECK(count_factorizations(u2_minus_1(Variant::polar, 8)) == 16);
  CHECK(count_factorizations(u2_minus_1(Variant::polar, 3)) == 2);
  CHECK(count_factorizations(u2_minus_1(Variant::polar, 5)) == 4);
  CHECK(count_factorizations(u2_plus_1(Variant::planar, 2)) == 1);
  CHECK(count_factorizations(u2_plus_1(Variant::planar, 4)) == 2);
  CHECK(count_factorizations(u2_plus_1(Variant::planar, 6)) == 4);
  CHECK(count_factorizations(u2_plus_1(Variant::planar, 8)) == 8);
}

TEST_CASE("the enumerated root sets square to one") {
  const auto all = factorizations(u2_minus_1(Variant::polar, 6));
  REQUIRE(all.size() == 8);
  for (const auto& f : all) {
    REQUIRE(f.linear_roots.size() == 2);
    CHECK_FALSE(f.mixed);
    // u_2 = -u_1 and u_1^2 = 1
    CHECK(test::max_abs(f.linear_roots[0] + f.linear_roots[1]) < 1e-10);
    CHECK(test::rel_diff(mul(f.linear_roots[0], f.linear_roots[0]),
                         NComplex::one(Variant::polar, 6)) < 1e-10);
  }

  // the first factorization is the canonical (sorted) assignment
  const auto first = all.front();
  const Spectrum s = to_spectrum(first.linear_roots[0]);
  CHECK(*s.v_plus == doctest::Approx(-1.0));
}

TEST_CASE("sign combinations of the idempotent axes square to one") {
  // (+-e_+ +-e_- +-e_1)^2 = 1 (polar n=4); (+-etilde_1 +-etilde_2)^2 = -1
  const CanonicalBasis b = canonical_basis(Variant::polar, 4);
  for (int mask = 0; mask < 8; ++mask) {
    const NComplex root = ((mask & 1) ? 1.0 : -1.0) * *b.e_plus +
                          ((mask & 2) ? 1.0 : -1.0) * *b.e_minus +
                          ((mask & 4) ? 1.0 : -1.0) * b.e[0];
    CHECK(test::rel_diff(mul(root, root), NComplex::one(Variant::polar, 4)) <
          1e-13);
  }
  const CanonicalBasis bp = canonical_basis(Variant::planar, 4);
  for (int mask = 0; mask < 4; ++mask) {
    const NComplex root = ((mask & 1) ? 1.0 : -1.0) * bp.e_tilde[0] +
                          ((mask & 2) ? 1.0 : -1.0) * bp.e_tilde[1];
    CHECK(test::rel_diff(mul(root, root), -NComplex::one(Variant::planar, 4)) <
          1e-13);
  }
}

TEST_CASE("squarefree count law") {
  // distinct roots in every slot: m!^(slots-1) distinct factor multisets
  Rng rng(93);
  Factorization built;
  for (int p = 0; p < 3; ++p) {
    Spectrum sp;
    sp.variant = Variant::polar;
    sp.n = 4;
    sp.v_plus = -1.0 + p;      // {-1, 0, 1}
    sp.v_minus = 2.0 - 1.5 * p;
    sp.pairs = {{0.5 * p - 0.6, 0.4 + 0.3 * p}};
    built.linear_roots.push_back(from_spectrum(sp));
  }
  const NPolynomial poly = expand(built, Variant::polar, 4);
  // slots: v_+, v_-, one pair -> 6^2 = 36
  CHECK(count_factorizations(poly, 1000) == 36);
}

TEST_CASE("expand round trips") {
  // a single factor u - u1 has a_1 = -u1
  const NComplex u1(Variant::polar, {0.3, -1.2, 0.7});
  Factorization single;
  single.linear_roots = {u1};
  const NPolynomial p1 = expand(single, Variant::polar, 3);
  REQUIRE(p1.degree() == 1);
  CHECK(test::max_abs(p1.coefficients[0] + u1) < 1e-15);

  // expand of every enumerated factorization reproduces u^2 - 1
  for (const auto& f : factorizations(u2_minus_1(Variant::polar, 4))) {
    const NPolynomial back = expand(f, Variant::polar, 4);
    CHECK(test::max_abs(back.coefficients[0]) < 1e-10);
    CHECK(test::rel_diff(back.coefficients[1],
                         -NComplex::one(Variant::polar, 4)) < 1e-10);
  }

  Rng rng(94);
  for (Variant variant : {Variant::polar, Variant::planar}) {
    for (int n : {4, 5, 6}) {
      if (variant == Variant::planar && n % 2 != 0) continue;
      for (int s = 0; s < 8; ++s) {
        Factorization built;
        const int m = 2 + rng.index(3);
        for (int p = 0; p < m; ++p)
          built.linear_roots.push_back(0.6 * (p + 1) *
                                       test::random_off_nodal(rng, variant, n,
                                                              0.5, 1.5, false));
        const NPolynomial poly = expand(built, variant, n);
        const auto recovered = factorizations(poly, 4);
        REQUIRE_FALSE(recovered.empty());
        const NPolynomial back = expand(recovered.front(), variant, n);
        double worst = 0.0;
        for (int l = 0; l < poly.degree(); ++l)
          worst = std::max(worst,
                           test::rel_diff(back.coefficients[static_cast<std::size_t>(l)],
                                          poly.coefficients[static_cast<std::size_t>(l)]));
        CHECK(worst < 1e-8);
      }
    }
  }
}

TEST_CASE("polar polynomials with complex axis roots fuse into quadratics") {
  // u^2 + 1 over the polar algebra: the v+/v- roots are +-i, so the only
  // factorization is the quadratic u^2 + 1 itself
  const auto all = factorizations(u2_plus_1(Variant::polar, 4));
  REQUIRE(all.size() == 1);
  CHECK(all.front().mixed);
  CHECK(all.front().linear_roots.empty());
  REQUIRE(all.front().quadratic_factors.size() == 1);
  const auto& q = all.front().quadratic_factors.front();
  CHECK(test::max_abs(q.b) < 1e-10);
  CHECK(test::rel_diff(q.c, NComplex::one(Variant::polar, 4)) < 1e-10);
  const NPolynomial back = expand(all.front(), Variant::polar, 4);
  CHECK(test::max_abs(back.coefficients[0]) < 1e-10);
  CHECK(test::rel_diff(back.coefficients[1], NComplex::one(Variant::polar, 4)) <
        1e-10);

  // mixed case: (u^2+1)(u - 1) has one quadratic and one linear factor
  Factorization one_root;
  one_root.linear_roots = {NComplex::one(Variant::polar, 4)};
  NPolynomial cubic = expand(one_root, Variant::polar, 4);
  // multiply by u^2 + 1: coefficients [a_1, a_2, a_3] of degree 3
  cubic = {Variant::polar, 4,
           {-NComplex::one(Variant::polar, 4), NComplex::one(Variant::polar, 4),
            -NComplex::one(Variant::polar, 4)}};
  const auto mixed = factorizations(cubic);
  REQUIRE_FALSE(mixed.empty());
  for (const auto& f : mixed) {
    CHECK(f.linear_roots.size() == 1);
    CHECK(f.quadratic_factors.size() == 1);
    const NPolynomial back2 = expand(f, Variant::polar, 4);
    double worst = 0.0;
    for (int l = 0; l < 3; ++l)
      worst = std::max(
          worst, max_abs_diff(back2.coefficients[static_cast<std::size_t>(l)],
                              cubic.coefficients[static_cast<std::size_t>(l)]));
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("planar polynomials always factor into linear pieces") {
  Rng rng(95);
  for (int s = 0; s < 10; ++s) {
    NPolynomial p{Variant::planar, 6, {}};
    const int m = 2 + rng.index(3);
    for (int l = 0; l < m; ++l)
      p.coefficients.push_back(test::random_ncx(rng, Variant::planar, 6));
    const auto all = factorizations(p, 50);
    REQUIRE_FALSE(all.empty());
    for (const auto& f : all) {
      CHECK(f.quadratic_factors.empty());
      CHECK_FALSE(f.mixed);
      CHECK(f.linear_roots.size() == static_cast<std::size_t>(m));
      for (const auto& r : f.linear_roots)
        CHECK(test::max_abs(poly_eval(p, r)) < 1e-7);
    }
  }
}

TEST_CASE("degree validation") {
  CHECK_THROWS_AS(component_polynomials(NPolynomial{Variant::polar, 4, {}}),
                  DomainError);
}

TEST_SUITE_END();
