#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "anore/derivation.hpp"
#include "anore/series.hpp"
#include "helpers.hpp"

using namespace anore;
using anore::test::close;
using anore::test::conv_oracle;
using anore::test::seeded_rng;

TEST_CASE("add is coefficientwise and pads polynomial tails") {
  const auto a = TruncatedSeries::polynomial(0.0, {1.0, 1.0});       // 1+y
  const auto b = TruncatedSeries::polynomial(0.0, {2.0, 0.0, 1.0});  // 2+y^2
  const auto c = add(a, b);
  REQUIRE(c.trunc_order() == 2);
  CHECK(close(c.coeff(0), 3.0));
  CHECK(close(c.coeff(1), 1.0));
  CHECK(close(c.coeff(2), 1.0));
  CHECK(c.is_polynomial());
}

TEST_CASE("add identity and commutativity") {
  auto rng = seeded_rng();
  const auto a = random_series(0.0, 12, rng);
  const auto zero = TruncatedSeries::zero(0.0, 3);
  CHECK(max_coeff_difference(add(a, zero), a) == 0.0);
  for (int t = 0; t < 20; ++t) {
    const auto u = random_series(0.0, 10, rng);
    const auto v = random_series(0.0, 10, rng);
    CHECK(max_coeff_difference(add(u, v), add(v, u)) == 0.0);
  }
}

TEST_CASE("add rejects center mismatch") {
  const auto a = TruncatedSeries::polynomial(0.0, {1.0});
  const auto b = TruncatedSeries::polynomial(1.0, {1.0});
  CHECK_THROWS_AS(add(a, b), std::invalid_argument);
  CHECK_THROWS_AS(mul(a, b), std::invalid_argument);
}

TEST_CASE("mul matches the binomial square") {
  const auto a = TruncatedSeries::polynomial(0.0, {1.0, 1.0});
  const auto c = mul(a, a);
  CHECK(close(c.coeff(0), 1.0));
  CHECK(close(c.coeff(1), 2.0));
  CHECK(close(c.coeff(2), 1.0));
}

TEST_CASE("mul of jet monomials keeps the min truncation order") {
  const auto y3 = TruncatedSeries(0.0, TruncatedSeries::monomial(0.0, 3, 10).coeffs(), false);
  const auto y4 = TruncatedSeries(0.0, TruncatedSeries::monomial(0.0, 4, 10).coeffs(), false);
  const auto c = mul(y3, y4);
  REQUIRE(c.trunc_order() == 10);
  for (int n = 0; n <= 10; ++n) {
    CHECK(close(c.coeff(n), n == 7 ? cplx(1.0) : cplx(0.0)));
  }
}

TEST_CASE("mul agrees with the schoolbook convolution oracle") {
  auto rng = seeded_rng(31);
  for (int t = 0; t < 50; ++t) {
    std::vector<cplx> ac(17), bc(17);
    for (auto& x : ac) x = random_unit_disc(rng);
    for (auto& x : bc) x = random_unit_disc(rng);
    const auto a = TruncatedSeries(0.0, ac, false);
    const auto b = TruncatedSeries(0.0, bc, false);
    const auto c = mul(a, b);
    const auto expect = conv_oracle(ac, bc, 17);
    REQUIRE(c.trunc_order() == 16);
    for (int n = 0; n <= 16; ++n) {
      CHECK(std::abs(c.coeff(n) - expect[static_cast<size_t>(n)]) <=
            1e-12 * (1.0 + std::abs(expect[static_cast<size_t>(n)])));
    }
  }
}

TEST_CASE("differentiate shifts and scales") {
  const auto y2 = TruncatedSeries::monomial(0.0, 2, 4);
  const auto d = differentiate(y2);
  CHECK(close(d.coeff(0), 0.0));
  CHECK(close(d.coeff(1), 2.0));

  const auto c = TruncatedSeries::constant(0.0, 5.0);
  CHECK(differentiate(c).degree() == -1);
}

TEST_CASE("differentiate fixes the exponential series") {
  std::vector<cplx> e(11);
  for (int n = 0; n <= 10; ++n) e[static_cast<size_t>(n)] = 1.0 / std::tgamma(n + 1.0);
  const auto exp_jet = TruncatedSeries(0.0, e, false);
  const auto d = differentiate(exp_jet);
  REQUIRE(d.trunc_order() == 9);
  for (int n = 0; n <= 9; ++n) {
    CHECK(std::abs(d.coeff(n) - e[static_cast<size_t>(n)]) <= 1e-15);
  }
}

TEST_CASE("seminorm frozen values") {
  // y^3 with r=1, s=1: 1/3! = 1/6
  const auto y3 = TruncatedSeries::monomial(0.0, 3, 3);
  CHECK(seminorm(y3, SeminormParams::power(1.0, 1.0)) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));

  // 1+y under the formal family with m=0
  const auto a = TruncatedSeries::polynomial(0.0, {1.0, 1.0});
  CHECK(seminorm(a, SeminormParams::formal(0)) == doctest::Approx(1.0).epsilon(1e-15));

  // y^4 with r=2, s=1/2: 2^4 / sqrt(24)
  const auto y4 = TruncatedSeries::monomial(0.0, 4, 4);
  CHECK(seminorm(y4, SeminormParams::power(2.0, 0.5)) ==
        doctest::Approx(3.265986323710904).epsilon(1e-13));
}

TEST_CASE("seminorm overflow is reported") {
  const auto big = TruncatedSeries(0.0, std::vector<cplx>(101, 1.0), false);
  CHECK_THROWS_AS(seminorm(big, SeminormParams::power(1e10, 0.0)), SeminormOverflow);
}

TEST_CASE("seminorm parameter validation") {
  CHECK_THROWS_AS(SeminormParams::power(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(SeminormParams::power(1.0, -0.5), std::invalid_argument);
  CHECK_THROWS_AS(SeminormParams::formal(-1), std::invalid_argument);
}

TEST_CASE("weight inequality r^(l+n)/(l+n)!^s <= product of weights") {
  for (const double s : {0.0, 1.0 / 3.0, 0.5, 1.0, 2.0}) {
    for (const double r : {0.5, 1.0, 3.0}) {
      for (int l = 0; l <= 60; l += 5) {
        for (int n = 0; n <= 60; n += 7) {
          const double lhs = power_weight_log(l + n, r, s);
          const double rhs = power_weight_log(l, r, s) + power_weight_log(n, r, s);
          CHECK(lhs <= rhs + 1e-9);
        }
      }
    }
  }
}

TEST_CASE("power seminorms are submultiplicative on truncations") {
  auto rng = seeded_rng(77);
  const SeminormParams grid[] = {SeminormParams::power(0.5, 0.5),
                                 SeminormParams::power(1.0, 1.0),
                                 SeminormParams::power(2.0, 1.0 / 3.0),
                                 SeminormParams::formal(6)};
  for (int t = 0; t < 100; ++t) {
    const auto a = random_series(0.0, 10, rng);
    const auto b = random_series(0.0, 10, rng);
    const auto ab = mul(a, b);
    for (const auto& p : grid) {
      CHECK(seminorm(ab, p) <= seminorm(a, p) * seminorm(b, p) * (1.0 + 1e-12) + 1e-300);
    }
  }
}

TEST_CASE("shift_center binomial example and identity") {
  const auto z2 = TruncatedSeries::monomial(0.0, 2, 2);
  const auto shifted = shift_center(z2, 1.0);
  CHECK(close(shifted.coeff(0), 1.0));
  CHECK(close(shifted.coeff(1), 2.0));
  CHECK(close(shifted.coeff(2), 1.0));

  const auto same = shift_center(z2, 0.0);
  CHECK(max_coeff_difference(same, z2) == 0.0);
}

TEST_CASE("shift_center round-trips degree-8 polynomials") {
  auto rng = seeded_rng(5);
  for (int t = 0; t < 30; ++t) {
    std::vector<cplx> c(9);
    for (auto& x : c) x = random_unit_disc(rng);
    const auto a = TruncatedSeries::polynomial(0.0, c);
    const cplx target = random_unit_disc(rng);
    const auto back = shift_center(shift_center(a, target), 0.0);
    CHECK(max_coeff_difference(back, a) <= 1e-12);
    // larger shifts amplify roundoff through the binomial recombination
    const auto far = shift_center(shift_center(a, target * 3.0), 0.0);
    CHECK(max_coeff_difference(far, a) <= 1e-9);
  }
}

TEST_CASE("shift_center refuses jets") {
  const auto jet = TruncatedSeries(0.0, {1.0, 1.0}, false);
  CHECK_THROWS_AS(shift_center(jet, 1.0), std::invalid_argument);
}

TEST_CASE("truncate lowers the cap and tracks the polynomial flag") {
  const auto a = TruncatedSeries::polynomial(0.0, {1.0, 2.0, 3.0});
  const auto t1 = truncate(a, 1);
  CHECK_FALSE(t1.is_polynomial());
  CHECK(t1.trunc_order() == 1);
  const auto t5 = truncate(a, 5);
  CHECK(t5.is_polynomial());
  CHECK(t5.trunc_order() == 5);
  CHECK(close(t5.coeff(5), 0.0));
}
