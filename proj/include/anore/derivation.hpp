#pragma once

// The derivation delta0(f) = h f' and its component versions
// delta_j = h(y_j + lambda_j) d/dy_j, with analytic and empirical
// stability constants for the weighted seminorms.

#include <random>
#include <vector>

#include "anore/function_model.hpp"
#include "anore/series.hpp"

namespace anore {

// delta0(f) = h f' at the center of f: the truncated product
// taylor_at(h, center, order) * differentiate(f).  Exact through `order`
// for polynomial f; through min(order, N_f - 1) for jets.
TruncatedSeries delta0_apply(const FunctionModel& h, const TruncatedSeries& f, int order);

// delta_j acting on a series in the local variable y_j (centered at 0).
// The first k Taylor coefficients of h at lambda_j are validated against the
// declared order and pinned to exact zero, which raises the output valuation
// by k - 1 and keeps the output exact through N_a - 1 + k for jet input.
// min_order only matters for polynomial input against an oracle h, where the
// expansion depth is otherwise unconstrained.
TruncatedSeries deltaj_apply(const FunctionModel& h, const ZeroDatum& z,
                             const TruncatedSeries& a, int min_order = -1);

// Certified upper bound for C_r = sum_m r^m / m!^s (partial sum plus a
// geometric tail bound); requires s > 0.
double c_r_sum(double r, double s);

// The delta0-stability constant C_r M r^(k-1) / R^k for a zero of order
// k >= 2 and s >= 1/(k-1); M, R are Cauchy data (|h^(p)(lambda)/p!| <= M/R^p).
// Rejects s < 1/(k-1): the bound is not established there.
double stability_bound_analytic(const ZeroDatum& z, double r, double s, double M,
                                double R);

// max over `trials` random truncated series f of seminorm(delta_j f)/seminorm(f).
// Computed on truncations, so it is a lower bound of the operator seminorm.
double stability_empirical(const FunctionModel& h, const ZeroDatum& z,
                           const SeminormParams& params, int N, int trials,
                           std::mt19937_64& rng);

struct StabilityCertificate {
  ZeroDatum zero;
  double r = 0.0;
  double s = 0.0;
  double M = 0.0;
  double R = 0.0;
  double C_analytic = 0.0;
  double C_empirical = 0.0;
  int trials = 0;

  bool dominated(double eps = 1e-9) const {
    return C_empirical <= C_analytic * (1.0 + eps);
  }
};

// Builds the full certificate: Cauchy data from circle sampling, the analytic
// bound, and the empirical constant from seeded random trials.
StabilityCertificate certify_stability(const FunctionModel& h, const ZeroDatum& z,
                                       double r, double s, int N, int trials,
                                       std::mt19937_64& rng, double R = 1.0,
                                       int samples = 256, double margin = 0.05);

// The restriction of delta0 to the first m+1 Taylor coefficients at a zero is
// a linear map (row l, column q): coefficient l of delta0(f) as a function of
// f_q.  Defined because h(lambda) = 0 kills the dependence on f_{m+1}.
std::vector<std::vector<cplx>> formal_delta0_matrix(const FunctionModel& h,
                                                    const ZeroDatum& z, int m);

// Operator bound of that linear map for the coefficient-sum norm ||.||_{m,inf}
// (the maximum column sum of absolute values).
double formal_operator_bound(const FunctionModel& h, const ZeroDatum& z, int m);

// Random polynomial with coefficients uniform in the unit disc and degree
// uniform in [0, max_degree]; the workhorse of the property suites.
TruncatedSeries random_series(cplx center, int max_degree, std::mt19937_64& rng);

cplx random_unit_disc(std::mt19937_64& rng);

}  // namespace anore
