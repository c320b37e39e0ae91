#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "anore/ore.hpp"
#include "helpers.hpp"

using namespace anore;
using anore::test::close;
using anore::test::seeded_rng;

namespace {

const FunctionModel kH2 = FunctionModel::polynomial({0.0, 0.0, 1.0});        // y^2
const FunctionModel kHmix = FunctionModel::polynomial({0.0, 1.0, -2.0, 1.0});  // z(z-1)^2

std::vector<ZeroDatum> zeros_of(const FunctionModel& h) { return find_zeros(h); }

AlgebraElement random_element(size_t count, int max_degree, std::mt19937_64& rng) {
  AlgebraElement e;
  for (size_t j = 0; j < count; ++j) e.components.push_back(random_series(0.0, max_degree, rng));
  return e;
}

}  // namespace

TEST_CASE("element_y lists lambda_j + y_j") {
  const auto single = element_y({ZeroDatum(0.0, 2)});
  REQUIRE(single.size() == 1);
  CHECK(close(single.components[0].coeff(0), 0.0));
  CHECK(close(single.components[0].coeff(1), 1.0));

  const auto pair = element_y({ZeroDatum(0.0, 1), ZeroDatum(1.0, 2)});
  REQUIRE(pair.size() == 2);
  CHECK(close(pair.components[1].coeff(0), 1.0));
  CHECK(close(pair.components[1].coeff(1), 1.0));

  const cplx hbar = 1.3;
  const auto zs = sinh_deformation_zeros(hbar, 2);
  const auto ys = element_y(zs);
  REQUIRE(ys.size() == 5);
  for (size_t j = 0; j < zs.size(); ++j) {
    CHECK(close(ys.components[j].coeff(0), zs[j].lambda));
    CHECK(close(ys.components[j].coeff(1), 1.0));
  }

  CHECK_THROWS_AS(element_y({}), std::invalid_argument);
}

TEST_CASE("mu sends 1 to the unit and the identity to y") {
  const std::vector<ZeroDatum> zs{ZeroDatum(0.0, 1), ZeroDatum(1.0, 2)};
  const auto one = mu(FunctionModel::polynomial({1.0}), zs, 8);
  for (const auto& c : one.components) {
    CHECK(close(c.coeff(0), 1.0));
    CHECK(c.degree() == 0);
  }
  const auto id = mu(FunctionModel::polynomial({0.0, 1.0}), zs, 8);
  CHECK(max_component_difference(id, element_y(zs)) == 0.0);
}

TEST_CASE("mu of h itself has valuation k_j in component j") {
  const auto zs = zeros_of(kHmix);
  const auto img = mu(kHmix, zs, 12);
  for (size_t j = 0; j < zs.size(); ++j) {
    CHECK(img.components[j].valuation(1e-10) == zs[j].order);
  }
}

TEST_CASE("intertwining residual vanishes") {
  const std::vector<ZeroDatum> z2{ZeroDatum(0.0, 2)};
  CHECK(intertwining_residual(kH2, z2, FunctionModel::polynomial({3.0}), 16) == 0.0);
  CHECK(intertwining_residual(kH2, z2, FunctionModel::polynomial({0.0, 0.0, 0.0, 1.0}),
                              16) <= 1e-12);

  auto rng = seeded_rng(17);
  const auto zs = zeros_of(kHmix);
  for (int t = 0; t < 40; ++t) {
    std::vector<cplx> c(11);
    for (auto& x : c) x = random_unit_disc(rng);
    const auto f = FunctionModel::polynomial(c);
    CHECK(intertwining_residual(kHmix, zs, f, 24) <= 1e-10);
  }
}

TEST_CASE("delta_apply works componentwise") {
  const auto zs = zeros_of(kHmix);
  const OreContext ctx{kHmix, zs, 16};

  const auto u = AlgebraElement::unit(zs.size());
  const auto du = delta_apply(ctx, u);
  for (const auto& c : du.components) CHECK(c.valuation(1e-14) == -1);

  // two zeros of z(z-1)^2 on (y_0, y_1): h(y_0) at 0 and h(y_1+1) at 1
  const auto y = element_y(zs);
  const auto dy = delta_apply(ctx, y);
  for (size_t j = 0; j < zs.size(); ++j) {
    const auto expect = deltaj_apply(kHmix, zs[j], y.components[j], 16);
    CHECK(max_coeff_difference(dy.components[j], expect) == 0.0);
  }

  const AlgebraElement wrong = AlgebraElement::unit(zs.size() + 1);
  CHECK_THROWS_AS(delta_apply(ctx, wrong), std::invalid_argument);
}

TEST_CASE("ore_mul implements the defining relation") {
  const std::vector<ZeroDatum> zs{ZeroDatum(0.0, 2)};
  const OreContext ctx{kH2, zs, 12};
  auto rng = seeded_rng(3);

  const auto a = random_element(1, 6, rng);
  const auto x = ore_x(1);
  const auto xa = ore_mul(x, ore_embed(a), ctx);
  REQUIRE(xa.x_degree() == 1);
  CHECK(max_component_difference(xa.coeffs[1], a) == 0.0);
  CHECK(max_component_difference(xa.coeffs[0], delta_apply(ctx, a)) == 0.0);

  const auto xx = ore_mul(x, x, ctx);
  REQUIRE(xx.x_degree() == 2);
  CHECK(max_component_difference(xx.coeffs[2], AlgebraElement::unit(1)) == 0.0);
  CHECK(max_component_difference(xx.coeffs[1], AlgebraElement::zero(1)) == 0.0);
  CHECK(max_component_difference(xx.coeffs[0], AlgebraElement::zero(1)) == 0.0);

  // x^2 a = a x^2 + 2 delta(a) x + delta^2(a)
  const auto x2a = ore_mul(xx, ore_embed(a), ctx);
  const auto da = delta_apply(ctx, a);
  const auto dda = delta_apply(ctx, da);
  REQUIRE(x2a.x_degree() == 2);
  CHECK(max_component_difference(x2a.coeffs[2], a) == 0.0);
  CHECK(max_component_difference(x2a.coeffs[1], scale(da, 2.0)) <= 1e-14);
  CHECK(max_component_difference(x2a.coeffs[0], dda) == 0.0);
}

TEST_CASE("degree-0 embedding is multiplicative") {
  auto rng = seeded_rng(29);
  const std::vector<ZeroDatum> zs{ZeroDatum(0.0, 2)};
  const OreContext ctx{kH2, zs, 12};
  for (int t = 0; t < 30; ++t) {
    const auto a = random_element(1, 6, rng);
    const auto b = random_element(1, 6, rng);
    const auto lhs = ore_mul(ore_embed(a), ore_embed(b), ctx);
    REQUIRE(lhs.x_degree() == 0);
    CHECK(max_component_difference(lhs.coeffs[0], mul(a, b)) == 0.0);
  }
}

TEST_CASE("commutator with x reproduces the derivation") {
  auto rng = seeded_rng(31);
  const auto zs = zeros_of(kHmix);
  const OreContext ctx{kHmix, zs, 16};
  const auto x = ore_x(zs.size());
  CHECK(ore_sub(ore_mul(x, x, ctx), ore_mul(x, x, ctx)).coeffs.size() == 3);

  for (int t = 0; t < 25; ++t) {
    const auto a = random_element(zs.size(), 8, rng);
    const auto c = commutator(x, ore_embed(a), ctx);
    CHECK(max_component_difference(c.coeffs[0], delta_apply(ctx, a)) <= 1e-14);
    CHECK(max_component_difference(c.coeffs[1], AlgebraElement::zero(zs.size())) == 0.0);
  }

  // [x, mu(f)] embeds delta(mu f) at x-degree 0
  const auto f = FunctionModel::polynomial({1.0, 0.5, 0.0, 2.0});
  const auto mf = mu(f, zs, 16);
  const auto c = commutator(x, ore_embed(mf), ctx);
  CHECK(max_component_difference(c.coeffs[0], delta_apply(ctx, mf)) == 0.0);
}

TEST_CASE("ore_mul is associative on random triples") {
  auto rng = seeded_rng(41);
  const auto zs = zeros_of(kHmix);
  const OreContext ctx{kHmix, zs, 16};
  for (int t = 0; t < 25; ++t) {
    OrePoly p{{random_element(zs.size(), 4, rng), random_element(zs.size(), 4, rng)}};
    OrePoly q{{random_element(zs.size(), 4, rng), random_element(zs.size(), 4, rng)}};
    OrePoly r{{random_element(zs.size(), 4, rng), random_element(zs.size(), 4, rng)}};
    const auto lhs = ore_mul(ore_mul(p, q, ctx), r, ctx);
    const auto rhs = ore_mul(p, ore_mul(q, r, ctx), ctx);
    REQUIRE(lhs.x_degree() == rhs.x_degree());
    for (size_t i = 0; i < lhs.coeffs.size(); ++i) {
      CHECK(max_component_difference(lhs.coeffs[i], rhs.coeffs[i]) <= 1e-12);
    }
  }
}

TEST_CASE("main relation holds for the benchmark functions") {
  // h = y travels an exact integer path
  {
    const auto h = FunctionModel::polynomial({0.0, 1.0});
    const auto rep = verify_main_relation(h, find_zeros(h), 32);
    CHECK(rep.max_deviation == 0.0);
  }
  for (int k = 1; k <= 3; ++k) {
    std::vector<cplx> c(static_cast<size_t>(k) + 2, 0.0);
    c.back() = 1.0;
    const auto h = FunctionModel::polynomial(c);
    const auto rep = verify_main_relation(h, find_zeros(h), 32);
    CHECK(rep.max_deviation <= 1e-12);
  }
  {
    const auto rep = verify_main_relation(kHmix, find_zeros(kHmix), 32);
    CHECK(rep.max_deviation <= 1e-12);
  }
  {
    const cplx hbar = 0.9;
    const auto h = FunctionModel::sinh_deformation(hbar);
    const auto rep = verify_main_relation(h, sinh_deformation_zeros(hbar, 1), 24);
    CHECK(rep.max_deviation <= 1e-12);
  }
}

TEST_CASE("ore_seminorm aggregates with powers of rho") {
  const std::vector<SeminormParams> params{SeminormParams::power(1.0, 1.0)};
  const auto unit = ore_embed(AlgebraElement::unit(1));
  CHECK(ore_seminorm(unit, params, 2.0) == doctest::Approx(1.0));

  OrePoly x3{{AlgebraElement::zero(1), AlgebraElement::zero(1), AlgebraElement::zero(1),
              AlgebraElement::unit(1)}};
  CHECK(ore_seminorm(x3, params, 2.0) == doctest::Approx(8.0));

  // y x + 1 with r = s = 1, rho = 2: 1 + ||y|| * 2 = 3
  OrePoly p{{AlgebraElement::unit(1),
             AlgebraElement{{TruncatedSeries::monomial(0.0, 1, 1)}}}};
  CHECK(ore_seminorm(p, params, 2.0) == doctest::Approx(3.0));
}

TEST_CASE("diagonal embedding computes the same value along both routes") {
  const auto yn = TruncatedSeries::monomial(0.0, 5, 5);
  const auto [a1, a2] = kothe_diagonal_embed(yn, 0.5, 1.0 / 3.0, 2.0, 3.0);
  const double expect = std::pow(6.0, 5) / std::pow(std::tgamma(6.0), 0.5 + 1.0 / 3.0);
  CHECK(a1 == doctest::Approx(expect).epsilon(1e-12));
  CHECK(a2 == doctest::Approx(expect).epsilon(1e-12));

  const auto one = TruncatedSeries::constant(0.0, 1.0);
  const auto [b1, b2] = kothe_diagonal_embed(one, 1.0, 2.0, 5.0, 0.25);
  CHECK(b1 == doctest::Approx(1.0));
  CHECK(b2 == doctest::Approx(1.0));

  auto rng = seeded_rng(47);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_series(0.0, 32, rng);
    const auto [u, v] = kothe_diagonal_embed(a, 0.5, 1.0 / 3.0, 2.0, 3.0);
    CHECK(std::abs(u - v) <= 1e-12 * std::max(1.0, std::abs(u)));
  }
}
