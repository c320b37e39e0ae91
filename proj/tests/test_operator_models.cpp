#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "anore/operator_models.hpp"
#include "helpers.hpp"

using namespace anore;
using anore::test::seeded_rng;

namespace {

AlgebraElement random_poly_element(int max_degree, std::mt19937_64& rng) {
  AlgebraElement e;
  e.components.push_back(random_series(0.0, max_degree, rng));
  return e;
}

OrePoly random_ore(int xdeg, int max_degree, std::mt19937_64& rng) {
  OrePoly p;
  for (int i = 0; i <= xdeg; ++i) p.coeffs.push_back(random_poly_element(max_degree, rng));
  return p;
}

}  // namespace

TEST_CASE("jordan_pair reproduces the closed form for h = y") {
  const auto h = FunctionModel::polynomial({0.0, 1.0});
  const auto rep = jordan_pair(h, ZeroDatum(0.0, 1), 4);
  CHECK(rep.residual <= 1e-13);
  CHECK(rep.solved);
  CHECK_FALSE(rep.trace_obstruction);

  // the diagonal ladder X0 = diag(0,-1,-2,-3) solves [X0, J] = J exactly
  Eigen::MatrixXcd x0 = Eigen::MatrixXcd::Zero(4, 4);
  for (int i = 0; i < 4; ++i) x0(i, i) = -static_cast<double>(i);
  const Eigen::MatrixXcd jmat = rep.Y;
  CHECK((x0 * jmat - jmat * x0 - jmat).norm() <= 1e-15);

  // the solver's pick differs from the ladder by an element commuting with Y
  const Eigen::MatrixXcd diff = rep.X - x0;
  CHECK((diff * rep.Y - rep.Y * diff).norm() <= 1e-12);
}

TEST_CASE("jordan_pair solves h = y^2 and rejects constants") {
  const auto h2 = FunctionModel::polynomial({0.0, 0.0, 1.0});
  const auto rep = jordan_pair(h2, ZeroDatum(0.0, 2), 4);
  CHECK(rep.residual <= 1e-10);
  CHECK(rep.solved);

  const auto hconst = FunctionModel::polynomial({1.0});
  for (const int n : {2, 3, 4, 6, 8}) {
    const auto bad = jordan_pair(hconst, ZeroDatum(0.0, 1), n);
    CHECK(bad.trace_obstruction);
    CHECK_FALSE(bad.solved);
    CHECK(bad.residual >= 1.0);  // distance to traceless matrices is sqrt(n)
  }
}

TEST_CASE("commutators are traceless") {
  auto rng = seeded_rng(90);
  const auto h2 = FunctionModel::polynomial({0.0, 0.0, 1.0});
  const auto rep = jordan_pair(h2, ZeroDatum(0.0, 2), 5);
  CHECK(std::abs((rep.X * rep.Y - rep.Y * rep.X).trace()) <= 1e-12);
  (void)rng;
}

TEST_CASE("evaluate_orepoly maps the generators") {
  const auto h = FunctionModel::polynomial({0.0, 0.0, 1.0});
  const std::vector<ZeroDatum> zs{ZeroDatum(0.0, 2)};
  const auto rep = jordan_pair(h, zs[0], 5);

  const auto ye = element_y(zs);
  CHECK((evaluate_orepoly(ore_embed(ye), rep, 0) - rep.Y).norm() <= 1e-14);
  CHECK((evaluate_orepoly(ore_x(1), rep, 0) - rep.X).norm() <= 1e-14);
}

TEST_CASE("evaluation is multiplicative on random Ore polynomials") {
  const auto h = FunctionModel::polynomial({0.0, 0.0, 1.0});
  const std::vector<ZeroDatum> zs{ZeroDatum(0.0, 2)};
  const OreContext ctx{h, zs, 16};
  auto rng = seeded_rng(123);
  for (const int dim : {4, 6}) {
    const auto rep = jordan_pair(h, zs[0], dim);
    REQUIRE(rep.solved);
    for (int t = 0; t < 25; ++t) {
      const auto p = random_ore(3, dim - 1, rng);
      const auto q = random_ore(3, dim - 1, rng);
      const Eigen::MatrixXcd lhs = evaluate_orepoly(ore_mul(p, q, ctx), rep, 0);
      const Eigen::MatrixXcd rhs =
          evaluate_orepoly(p, rep, 0) * evaluate_orepoly(q, rep, 0);
      CHECK((lhs - rhs).norm() <= 1e-8 * std::max(1.0, rhs.norm()));
    }
  }
}

TEST_CASE("evaluate_orepoly wants enough series data") {
  const auto h = FunctionModel::polynomial({0.0, 0.0, 1.0});
  const auto rep = jordan_pair(h, ZeroDatum(0.0, 2), 6);
  OrePoly p{{AlgebraElement{{TruncatedSeries(0.0, {1.0, 1.0}, false)}}}};  // jet, order 1
  CHECK_THROWS_AS(evaluate_orepoly(p, rep, 0), std::invalid_argument);
  OrePoly ok{{AlgebraElement{{TruncatedSeries::polynomial(0.0, {1.0, 1.0})}}}};
  CHECK_NOTHROW(evaluate_orepoly(ok, rep, 0));
}

TEST_CASE("volterra norm estimates match the classical first value") {
  const auto norms = volterra_norms(500, 3);
  CHECK(norms[0] == doctest::Approx(2.0 / std::numbers::pi).epsilon(5e-3));
  // monotone decay against submultiplicativity
  CHECK(norms[1] <= norms[0] * norms[0] * 1.01);
  CHECK(norms[2] <= norms[0] * norms[1] * 1.01);
}

TEST_CASE("volterra scaled sequence approaches one half") {
  const auto norms = volterra_norms(600, 12);
  const double scaled =
      std::exp(std::lgamma(13.0) + std::log(norms[11]));
  CHECK(scaled == doctest::Approx(0.5).epsilon(0.05));

  // submultiplicativity of the estimates within 1%
  for (size_t m = 1; m < norms.size(); ++m) {
    for (size_t n = 1; m + n <= norms.size(); ++n) {
      CHECK(norms[m + n - 1] <= norms[m - 1] * norms[n - 1] * 1.01);
    }
  }
}

TEST_CASE("the TV commutator is strictly lower triangular and shrinks") {
  const int g = 120;
  const auto v = volterra_matrix(g);
  const auto t = position_matrix(g);
  const Eigen::MatrixXd c = t * v - v * t;
  for (int i = 0; i < g; ++i) {
    for (int j = i; j < g; ++j) CHECK(c(i, j) == 0.0);
  }
  const double r1 = commutator_residual_tv(100);
  const double r2 = commutator_residual_tv(200);
  const double r3 = commutator_residual_tv(400);
  CHECK(r1 > r2);
  CHECK(r2 > r3);
  CHECK(r3 <= 0.02);
}

TEST_CASE("bound propagator: k = 1 collapses to exact zero") {
  const auto seq = bound_propagator(1, 3.5, 1.0, {2.0}, 10);
  for (int n = 0; n <= 3; ++n) CHECK(seq.bounds[static_cast<size_t>(n)] == 2.0);
  for (int n = 4; n <= 10; ++n) CHECK(seq.bounds[static_cast<size_t>(n)] == 0.0);

  auto rng = seeded_rng(6);
  std::uniform_real_distribution<double> unif(0.1, 10.0);
  for (int t = 0; t < 20; ++t) {
    const double c = unif(rng);
    const double w = unif(rng);
    const auto s = bound_propagator(1, c, w, {1.0}, 60);
    const int cut = static_cast<int>(std::ceil(c * w));
    for (int n = cut + 1; n <= 60; ++n) CHECK(s.bounds[static_cast<size_t>(n)] == 0.0);
  }
}

TEST_CASE("bound propagator: k >= 2 reproduces the product denominators") {
  // k=2, m=1, j=3: denominator 1*2*3 = 6 at n = 4
  const double C = 1.25, w = 0.75;
  const std::vector<double> base{1.0, 1.0};
  const auto seq = bound_propagator(2, C, w, base, 8);
  CHECK(seq.bounds[4] ==
        doctest::Approx(std::pow(C, 3) * std::pow(w, 4) / 6.0).epsilon(1e-15));

  for (const int k : {2, 3, 4}) {
    std::vector<double> bases(static_cast<size_t>(k), 1.0);
    const auto s = bound_propagator(k, 2.0, 0.5, bases, 50);
    for (int n = 1; n <= 50; ++n) {
      const int m = (n - 1) % (k - 1) + 1;
      const int j = (n - m) / (k - 1);
      double denom = 1.0;
      for (int t = 0; t < j; ++t) denom *= static_cast<double>(m + t * (k - 1));
      const double expect = std::pow(2.0, j) * std::pow(0.5, j + 1) / denom;
      CHECK(s.bounds[static_cast<size_t>(n)] == doctest::Approx(expect).epsilon(1e-13));
    }
  }

  CHECK_THROWS_AS(bound_propagator(0, 1.0, 1.0, {1.0}, 5), std::invalid_argument);
  CHECK_THROWS_AS(bound_propagator(2, 1.0, 1.0, {1.0}, 5), std::invalid_argument);
}

TEST_CASE("factorial domination of the denominator products") {
  // (k-1) * sum log(m + t(k-1)) >= lgamma(m + (j-1)(k-1) + 1)
  for (const int k : {2, 3, 4, 5}) {
    for (int m = 1; m <= k - 1; ++m) {
      for (int j = 1; j <= 50; ++j) {
        double lhs = 0.0;
        for (int t = 0; t < j; ++t) lhs += std::log(static_cast<double>(m + t * (k - 1)));
        lhs *= static_cast<double>(k - 1);
        const double rhs = std::lgamma(static_cast<double>(m + (j - 1) * (k - 1)) + 1.0);
        CHECK(lhs >= rhs - 1e-9);
      }
    }
  }
}

TEST_CASE("propagated bounds sit below a fitted factorial-decay envelope") {
  for (const int k : {2, 3}) {
    std::vector<double> bases(static_cast<size_t>(k), 1.0);
    const auto seq = bound_propagator(k, 3.0, 2.0, bases, 50);
    const auto env = fit_decay_envelope(seq.bounds, k, 25);
    for (int n = k - 1; n <= 50; ++n) {
      CHECK(seq.bounds[static_cast<size_t>(n)] <=
            envelope_value(env, k, n) * (1.0 + 1e-9));
    }
  }
}
