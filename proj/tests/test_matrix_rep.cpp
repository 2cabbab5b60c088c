#include <doctest.h>

#include <complex>

#include "helpers.hpp"
#include "ncx/elementary.hpp"
#include "ncx/matrix_rep.hpp"

using namespace ncx;
using test::Rng;

TEST_SUITE_BEGIN("matrix_rep");

TEST_CASE("representation layout at n=2") {
  const Mat polar = represent(NComplex(Variant::polar, {3, 7}));
  CHECK(polar(0, 0) == 3);
  CHECK(polar(0, 1) == 7);
  CHECK(polar(1, 0) == 7);
  CHECK(polar(1, 1) == 3);

  const Mat planar = represent(NComplex(Variant::planar, {3, 7}));
  CHECK(planar(0, 0) == 3);
  CHECK(planar(0, 1) == 7);
  CHECK(planar(1, 0) == -7);
  CHECK(planar(1, 1) == 3);

  CHECK(max_abs_diff(represent(NComplex::one(Variant::polar, 5)),
                     Mat::identity(5)) == 0.0);
}

TEST_CASE("representation is a homomorphism") {
  Rng rng(31);
  for (Variant variant : {Variant::polar, Variant::planar}) {
    for (int n : {2, 4, 5, 6, 8}) {
      if (variant == Variant::planar && n % 2 != 0) continue;
      for (int s = 0; s < 30; ++s) {
        const NComplex u = test::random_ncx(rng, variant, n);
        const NComplex v = test::random_ncx(rng, variant, n);
        CHECK(max_abs_diff(represent(u + v), represent(u) + represent(v)) <
              1e-14);
        const Mat prod = represent(u) * represent(v);
        CHECK(max_abs_diff(represent(mul(u, v)), prod) <=
              1e-12 * std::max(1.0, prod.max_abs()));
      }
    }
  }
}

TEST_CASE("block form matches spectrum and determinant") {
  const BlockForm id = block_form(NComplex::one(Variant::polar, 6));
  CHECK(*id.v_plus == doctest::Approx(1.0));
  CHECK(*id.v_minus == doctest::Approx(1.0));
  for (const auto& blk : id.blocks) {
    CHECK(blk[0] == doctest::Approx(1.0));
    CHECK(blk[1] == doctest::Approx(0.0).epsilon(1e-14));
  }

  Rng rng(32);
  for (Variant variant : {Variant::polar, Variant::planar}) {
    for (int n : {4, 5, 6, 8}) {
      if (variant == Variant::planar && n % 2 != 0) continue;
      for (int s = 0; s < 20; ++s) {
        const NComplex u = test::random_ncx(rng, variant, n);
        const BlockForm b = block_form(u);
        const double lu = lu_determinant(represent(u));
        CHECK(block_determinant(b) ==
              doctest::Approx(lu).epsilon(1e-9));
        CHECK(determinant(u) == doctest::Approx(lu).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("block multiplicativity") {
  Rng rng(33);
  const NComplex u = test::random_ncx(rng, Variant::polar, 6);
  const NComplex v = test::random_ncx(rng, Variant::polar, 6);
  const BlockForm bu = block_form(u), bv = block_form(v),
                  bw = block_form(mul(u, v));
  for (std::size_t k = 0; k < bw.blocks.size(); ++k) {
    CHECK(bw.blocks[k][0] ==
          doctest::Approx(bu.blocks[k][0] * bv.blocks[k][0] -
                          bu.blocks[k][1] * bv.blocks[k][1])
              .epsilon(1e-11));
    CHECK(bw.blocks[k][1] ==
          doctest::Approx(bu.blocks[k][0] * bv.blocks[k][1] +
                          bu.blocks[k][1] * bv.blocks[k][0])
              .epsilon(1e-11));
  }
}

TEST_CASE("matrix exponential") {
  CHECK(max_abs_diff(matrix_exp(Mat(3)), Mat::identity(3)) < 1e-15);

  // rotation: exp of the planar representation of [0, theta]
  const double theta = 0.7;
  const Mat rot = matrix_exp(represent(NComplex(Variant::planar, {0, theta})));
  CHECK(rot(0, 0) == doctest::Approx(std::cos(theta)).epsilon(1e-13));
  CHECK(rot(0, 1) == doctest::Approx(std::sin(theta)).epsilon(1e-13));
  CHECK(rot(1, 0) == doctest::Approx(-std::sin(theta)).epsilon(1e-13));

  Rng rng(34);
  for (Variant variant : {Variant::polar, Variant::planar}) {
    for (int n : {2, 3, 4, 6}) {
      if (variant == Variant::planar && n % 2 != 0) continue;
      for (int s = 0; s < 20; ++s) {
        const NComplex u = test::random_ncx(rng, variant, n, -1.5, 1.5);
        const Mat lhs = represent(exp(u));
        const Mat rhs = matrix_exp(represent(u));
        CHECK(max_abs_diff(lhs, rhs) <= 1e-9 * std::max(1.0, rhs.max_abs()));
      }
    }
  }
}

TEST_CASE("claimed eigenvalues annihilate the characteristic polynomial") {
  Rng rng(35);
  for (Variant variant : {Variant::polar, Variant::planar}) {
    for (int n : {4, 5, 6}) {
      if (variant == Variant::planar && n % 2 != 0) continue;
      const NComplex u = test::random_ncx(rng, variant, n);
      const Mat m = represent(u);
      const Spectrum s = to_spectrum(u);
      const double scale = std::pow(m.one_norm() + 1.0, n);
      auto check_eigen = [&](std::complex<double> lambda) {
        CHECK(std::abs(char_poly_at(m, lambda)) < 1e-9 * scale);
      };
      if (s.v_plus) check_eigen(*s.v_plus);
      if (s.v_minus) check_eigen(*s.v_minus);
      for (const auto& z : s.pairs) {
        check_eigen(z);
        check_eigen(std::conj(z));
      }
      // a perturbed value is not an eigenvalue
      const std::complex<double> off =
          (s.v_plus ? std::complex<double>(*s.v_plus) : s.pairs[0]) + 0.25;
      CHECK(std::abs(char_poly_at(m, off)) > 1e-9 * scale);
    }
  }
}

TEST_SUITE_END();
