#include "anore/derivation.hpp"

#include <algorithm>
#include <cmath>

namespace anore {

namespace {

// Taylor model of h at lambda, recentered so it lives in the same variable as
// the local series, with the first `forced_zeros` coefficients validated and
// pinned to exact zero.
TruncatedSeries local_h_model(const FunctionModel& h, cplx lambda, cplx variable_center,
                              int order, int forced_zeros) {
  auto coeffs = h.coefficients_at(lambda, order);
  if (forced_zeros > 0) {
    double maxc = 0.0;
    for (const cplx& c : coeffs) maxc = std::max(maxc, std::abs(c));
    for (int j = 0; j < forced_zeros && j < static_cast<int>(coeffs.size()); ++j) {
      if (std::abs(coeffs[static_cast<size_t>(j)]) > 1e-6 * maxc) {
        throw NotAZeroError("h does not vanish to the declared order at the zero");
      }
      coeffs[static_cast<size_t>(j)] = 0.0;
    }
  }
  const bool tail_zero =
      h.is_polynomial() && order >= static_cast<int>(h.poly_coeffs().size()) - 1;
  return TruncatedSeries(variable_center, std::move(coeffs), tail_zero);
}

}  // namespace

TruncatedSeries delta0_apply(const FunctionModel& h, const TruncatedSeries& f, int order) {
  if (order < 0) throw std::invalid_argument("negative expansion order");
  const auto hloc = [&] {
    if (h.is_polynomial()) {
      const int full = static_cast<int>(h.poly_coeffs().size()) - 1;
      return local_h_model(h, f.center(), f.center(), std::max(order, full), 0);
    }
    return local_h_model(h, f.center(), f.center(), order, 0);
  }();
  return mul(hloc, differentiate(f));
}

TruncatedSeries deltaj_apply(const FunctionModel& h, const ZeroDatum& z,
                             const TruncatedSeries& a, int min_order) {
  if (a.center() != cplx(0.0)) {
    throw std::invalid_argument("delta_j expects a series centered at 0 in y_j");
  }
  const int k = z.order;
  const auto ap = differentiate(a);

  if (h.is_polynomial()) {
    const int full = static_cast<int>(h.poly_coeffs().size()) - 1;
    const auto hloc = local_h_model(h, z.lambda, cplx(0.0), std::max(full, k), k);
    return mul(hloc, ap);  // tail-aware mul keeps the valuation gain
  }

  int expand;
  if (a.is_polynomial()) {
    expand = std::max({min_order, a.trunc_order() - 1 + k, k});
  } else {
    expand = a.trunc_order() - 1 + k;  // exactness cap for jet input
  }
  const auto hloc = local_h_model(h, z.lambda, cplx(0.0), expand, k);

  // Convolution through `expand`; coefficient n only touches a' through
  // n - k, which a jet of order N_a - 1 covers for all n <= N_a - 1 + k.
  std::vector<cplx> c(static_cast<size_t>(expand) + 1, 0.0);
  const int dap = ap.is_polynomial() ? ap.degree() : ap.trunc_order();
  for (int p = k; p <= expand; ++p) {
    const cplx hp = hloc.coeff(p);
    if (hp == cplx(0.0)) continue;
    for (int q = 0; q <= std::min(dap, expand - p); ++q) {
      c[static_cast<size_t>(p + q)] += hp * ap.coeff(q);
    }
  }
  return TruncatedSeries(cplx(0.0), std::move(c), false);
}

double c_r_sum(double r, double s) {
  if (!(r > 0.0)) throw std::invalid_argument("C_r requires r > 0");
  if (!(s > 0.0)) throw std::invalid_argument("C_r requires s > 0");
  double sum = 0.0;
  for (int m = 0;; ++m) {
    const double term = std::exp(power_weight_log(m, r, s));
    sum += term;
    if (m > 4 && term < 1e-16 * sum) {
      const double q = r / std::pow(static_cast<double>(m + 2), s);
      if (q < 0.5) {
        sum += std::exp(power_weight_log(m + 1, r, s)) / (1.0 - q);
        return sum;
      }
    }
    if (m > 200000) throw std::runtime_error("C_r summation did not converge");
  }
}

double stability_bound_analytic(const ZeroDatum& z, double r, double s, double M,
                                double R) {
  if (z.order < 2) {
    throw std::invalid_argument("analytic stability bound needs a zero of order >= 2");
  }
  const double s_min = 1.0 / static_cast<double>(z.order - 1);
  if (s < s_min * (1.0 - 1e-12)) {
    throw std::invalid_argument("stability bound not established for s < 1/(k-1)");
  }
  if (!(M >= 0.0) || !(R > 0.0)) throw std::invalid_argument("need M >= 0 and R > 0");
  return c_r_sum(r, s) * M * std::pow(r, z.order - 1) / std::pow(R, z.order);
}

double stability_empirical(const FunctionModel& h, const ZeroDatum& z,
                           const SeminormParams& params, int N, int trials,
                           std::mt19937_64& rng) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const auto f = random_series(0.0, N, rng);
    const double denom = seminorm(f, params);
    if (denom < 1e-300) continue;
    const auto df = deltaj_apply(h, z, f, N + z.order + 8);
    worst = std::max(worst, seminorm(df, params) / denom);
  }
  return worst;
}

StabilityCertificate certify_stability(const FunctionModel& h, const ZeroDatum& z,
                                       double r, double s, int N, int trials,
                                       std::mt19937_64& rng, double R, int samples,
                                       double margin) {
  StabilityCertificate cert{z};
  cert.r = r;
  cert.s = s;
  cert.R = R;
  cert.M = cauchy_bounds(h, z.lambda, R, samples, margin);
  cert.C_analytic = stability_bound_analytic(z, r, s, cert.M, cert.R);
  cert.C_empirical = stability_empirical(h, z, SeminormParams::power(r, s), N, trials, rng);
  cert.trials = trials;
  return cert;
}

std::vector<std::vector<cplx>> formal_delta0_matrix(const FunctionModel& h,
                                                    const ZeroDatum& z, int m) {
  if (m < 0) throw std::invalid_argument("formal family needs m >= 0");
  // (delta0 f)_l = sum_{p+q=l, q>=0} h_p (q+1) f_{q+1}; h_0..h_{k-1} vanish,
  // so columns stop at index l <= m and the map closes on f_0..f_m.
  const auto coeffs = h.coefficients_at(z.lambda, m + 1);
  std::vector<std::vector<cplx>> L(static_cast<size_t>(m) + 1,
                                   std::vector<cplx>(static_cast<size_t>(m) + 1, 0.0));
  double maxc = 0.0;
  for (const cplx& c : coeffs) maxc = std::max(maxc, std::abs(c));
  for (int j = 0; j < z.order && j <= m + 1; ++j) {
    if (std::abs(coeffs[static_cast<size_t>(j)]) > 1e-6 * maxc) {
      throw NotAZeroError("h does not vanish to the declared order at the zero");
    }
  }
  for (int l = 0; l <= m; ++l) {
    for (int q = 1; q <= l; ++q) {  // p = l - q + 1 >= 1; p >= k enforced by zeros
      const int p = l - q + 1;
      if (p < z.order) continue;
      L[static_cast<size_t>(l)][static_cast<size_t>(q)] =
          static_cast<double>(q) * coeffs[static_cast<size_t>(p)];
    }
  }
  return L;
}

double formal_operator_bound(const FunctionModel& h, const ZeroDatum& z, int m) {
  const auto L = formal_delta0_matrix(h, z, m);
  double bound = 0.0;
  for (size_t col = 0; col < L.size(); ++col) {
    double col_sum = 0.0;
    for (size_t row = 0; row < L.size(); ++row) col_sum += std::abs(L[row][col]);
    bound = std::max(bound, col_sum);
  }
  return bound;
}

cplx random_unit_disc(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (;;) {
    const double x = unif(rng);
    const double y = unif(rng);
    if (x * x + y * y <= 1.0) return {x, y};
  }
}

TruncatedSeries random_series(cplx center, int max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  const int d = deg(rng);
  std::vector<cplx> c(static_cast<size_t>(d) + 1);
  for (auto& x : c) x = random_unit_disc(rng);
  return TruncatedSeries::polynomial(center, std::move(c));
}

}  // namespace anore
