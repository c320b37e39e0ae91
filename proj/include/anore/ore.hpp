#pragma once

// The product algebra over the zero set, the canonical element y, the
// simultaneous-expansion homomorphism mu with mu.delta0 = delta.mu, and
// truncated Ore-extension arithmetic realizing [x, y] = h(y).

#include <vector>

#include "anore/derivation.hpp"
#include "anore/function_model.hpp"
#include "anore/series.hpp"

namespace anore {

// One truncated series per zero, each centered at 0 in its own variable y_j.
struct AlgebraElement {
  std::vector<TruncatedSeries> components;

  static AlgebraElement unit(size_t count);
  static AlgebraElement zero(size_t count);
  size_t size() const { return components.size(); }
};

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(const AlgebraElement& a, cplx factor);

// max over components of max_coeff_difference (through exact orders).
double max_component_difference(const AlgebraElement& a, const AlgebraElement& b);

// Everything the truncated Ore arithmetic needs: the function, its zeros, and
// the working series order used when expanding oracle models.
struct OreContext {
  FunctionModel h;
  std::vector<ZeroDatum> zeros;
  int order = 64;
};

// The element y = (lambda_j + y_j)_j.
AlgebraElement element_y(const std::vector<ZeroDatum>& zeros);

// mu(f) = (Taylor expansion of f at lambda_j, written in y_j)_j.
AlgebraElement mu(const FunctionModel& f, const std::vector<ZeroDatum>& zeros, int N);

// delta = product of the delta_j, applied componentwise.
AlgebraElement delta_apply(const OreContext& ctx, const AlgebraElement& a);

// max coefficientwise difference between mu(delta0 f) and delta(mu f); the
// two sides travel independent code paths (global model arithmetic vs local
// recentered series), so this is a genuine consistency check.
double intertwining_residual(const FunctionModel& h, const std::vector<ZeroDatum>& zeros,
                             const FunctionModel& f, int N);

// Skew polynomial sum c_0 + c_1 x + ... + c_D x^D with coefficients on the
// left, subject to x a = a x + delta(a).
struct OrePoly {
  std::vector<AlgebraElement> coeffs;
  int x_degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

OrePoly ore_embed(const AlgebraElement& a);           // eta at x-degree 0
OrePoly ore_x(size_t component_count);                // the adjoined variable
OrePoly ore_add(const OrePoly& p, const OrePoly& q);
OrePoly ore_sub(const OrePoly& p, const OrePoly& q);

// (a x^i)(b x^j) = sum_m binom(i,m) a delta^m(b) x^{i+j-m}, extended
// bilinearly; exact through the series truncation orders and degree D_P+D_Q.
OrePoly ore_mul(const OrePoly& p, const OrePoly& q, const OreContext& ctx);

OrePoly commutator(const OrePoly& p, const OrePoly& q, const OreContext& ctx);

struct RelationReport {
  double max_deviation = 0.0;
  std::vector<double> component_deviations;  // per zero, at x-degree 0
  int series_order = 0;
  int x_degree = 0;
};

// Computes [x, y] and mu(h) and reports the worst coefficient deviation
// through the exact orders, padded through x-degree `xdeg`.
RelationReport verify_main_relation(const FunctionModel& h,
                                    const std::vector<ZeroDatum>& zeros, int N,
                                    int xdeg = 4);

// sum_i (max over components of the component seminorm) * rho^i.
double ore_seminorm(const OrePoly& p, const std::vector<SeminormParams>& params,
                    double rho);

// Both sides of the diagonal embedding identity: ||a||_{rq, s+t} and
// sum_n |a_n| r^n q^n / (n!^s n!^t); equal because n!^s n!^t = n!^{s+t}.
std::pair<double, double> kothe_diagonal_embed(const TruncatedSeries& a, double s,
                                               double t, double r, double q);

}  // namespace anore
