#include "anore/ore.hpp"

#include <algorithm>
#include <cmath>

namespace anore {

namespace {

void require_same_size(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("algebra elements have mismatched component counts");
  }
}

// Binomial coefficients for small i; exact in doubles far beyond any x-degree
// the truncated arithmetic sees.
double binom(int n, int k) {
  double v = 1.0;
  for (int t = 1; t <= k; ++t) v = v * static_cast<double>(n - k + t) / t;
  return std::round(v);
}

TruncatedSeries as_local_variable(const TruncatedSeries& ts) {
  return TruncatedSeries(cplx(0.0), ts.coeffs(), ts.is_polynomial());
}

}  // namespace

AlgebraElement AlgebraElement::unit(size_t count) {
  AlgebraElement e;
  for (size_t j = 0; j < count; ++j) {
    e.components.push_back(TruncatedSeries::constant(0.0, 1.0));
  }
  return e;
}

AlgebraElement AlgebraElement::zero(size_t count) {
  AlgebraElement e;
  for (size_t j = 0; j < count; ++j) {
    e.components.push_back(TruncatedSeries::zero(0.0, 0));
  }
  return e;
}

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_size(a, b);
  AlgebraElement out;
  for (size_t j = 0; j < a.size(); ++j) {
    out.components.push_back(add(a.components[j], b.components[j]));
  }
  return out;
}

AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_size(a, b);
  AlgebraElement out;
  for (size_t j = 0; j < a.size(); ++j) {
    out.components.push_back(sub(a.components[j], b.components[j]));
  }
  return out;
}

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_size(a, b);
  AlgebraElement out;
  for (size_t j = 0; j < a.size(); ++j) {
    out.components.push_back(mul(a.components[j], b.components[j]));
  }
  return out;
}

AlgebraElement scale(const AlgebraElement& a, cplx factor) {
  AlgebraElement out;
  for (const auto& c : a.components) out.components.push_back(scale(c, factor));
  return out;
}

double max_component_difference(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_size(a, b);
  double m = 0.0;
  for (size_t j = 0; j < a.size(); ++j) {
    m = std::max(m, max_coeff_difference(a.components[j], b.components[j]));
  }
  return m;
}

AlgebraElement element_y(const std::vector<ZeroDatum>& zeros) {
  if (zeros.empty()) {
    throw std::invalid_argument(
        "empty zero list: the universal algebra is trivial and has no y");
  }
  AlgebraElement e;
  for (const auto& z : zeros) {
    e.components.push_back(TruncatedSeries::polynomial(0.0, {z.lambda, 1.0}));
  }
  return e;
}

AlgebraElement mu(const FunctionModel& f, const std::vector<ZeroDatum>& zeros, int N) {
  if (zeros.empty()) throw std::invalid_argument("mu needs a nonempty zero list");
  AlgebraElement e;
  for (const auto& z : zeros) {
    e.components.push_back(as_local_variable(taylor_at(f, z.lambda, N)));
  }
  return e;
}

AlgebraElement delta_apply(const OreContext& ctx, const AlgebraElement& a) {
  if (a.size() != ctx.zeros.size()) {
    throw std::invalid_argument("component count does not match the zero list");
  }
  AlgebraElement out;
  for (size_t j = 0; j < a.size(); ++j) {
    out.components.push_back(
        deltaj_apply(ctx.h, ctx.zeros[j], a.components[j], ctx.order));
  }
  return out;
}

double intertwining_residual(const FunctionModel& h, const std::vector<ZeroDatum>& zeros,
                             const FunctionModel& f, int N) {
  const auto lhs = mu(FunctionModel::product(h, FunctionModel::derivative(f)), zeros, N);
  OreContext ctx{h, zeros, N};
  const auto rhs = delta_apply(ctx, mu(f, zeros, N));
  return max_component_difference(lhs, rhs);
}

OrePoly ore_embed(const AlgebraElement& a) { return OrePoly{{a}}; }

OrePoly ore_x(size_t component_count) {
  return OrePoly{{AlgebraElement::zero(component_count), AlgebraElement::unit(component_count)}};
}

OrePoly ore_add(const OrePoly& p, const OrePoly& q) {
  if (p.coeffs.empty() || q.coeffs.empty()) {
    throw std::invalid_argument("Ore polynomial needs at least the constant coefficient");
  }
  OrePoly out;
  const size_t deg = std::max(p.coeffs.size(), q.coeffs.size());
  for (size_t i = 0; i < deg; ++i) {
    if (i < p.coeffs.size() && i < q.coeffs.size()) {
      out.coeffs.push_back(add(p.coeffs[i], q.coeffs[i]));
    } else if (i < p.coeffs.size()) {
      out.coeffs.push_back(p.coeffs[i]);
    } else {
      out.coeffs.push_back(q.coeffs[i]);
    }
  }
  return out;
}

OrePoly ore_sub(const OrePoly& p, const OrePoly& q) {
  OrePoly negq;
  for (const auto& c : q.coeffs) negq.coeffs.push_back(scale(c, -1.0));
  return ore_add(p, negq);
}

OrePoly ore_mul(const OrePoly& p, const OrePoly& q, const OreContext& ctx) {
  if (p.coeffs.empty() || q.coeffs.empty()) {
    throw std::invalid_argument("Ore polynomial needs at least the constant coefficient");
  }
  const size_t count = ctx.zeros.size();
  for (const auto& c : p.coeffs) {
    if (c.size() != count) throw std::invalid_argument("zero-list mismatch in ore_mul");
  }
  for (const auto& c : q.coeffs) {
    if (c.size() != count) throw std::invalid_argument("zero-list mismatch in ore_mul");
  }

  const int dp = p.x_degree();
  const int dq = q.x_degree();

  // delta^m of each right-hand coefficient, shared across left-hand terms.
  std::vector<std::vector<AlgebraElement>> deltas(static_cast<size_t>(dq) + 1);
  for (int j = 0; j <= dq; ++j) {
    deltas[static_cast<size_t>(j)].push_back(q.coeffs[static_cast<size_t>(j)]);
    for (int m = 1; m <= dp; ++m) {
      deltas[static_cast<size_t>(j)].push_back(
          delta_apply(ctx, deltas[static_cast<size_t>(j)].back()));
    }
  }

  OrePoly out;
  for (int i = 0; i <= dp + dq; ++i) out.coeffs.push_back(AlgebraElement::zero(count));
  for (int i = 0; i <= dp; ++i) {
    for (int j = 0; j <= dq; ++j) {
      for (int m = 0; m <= i; ++m) {
        const auto term = scale(
            mul(p.coeffs[static_cast<size_t>(i)], deltas[static_cast<size_t>(j)][static_cast<size_t>(m)]),
            binom(i, m));
        auto& slot = out.coeffs[static_cast<size_t>(i + j - m)];
        slot = add(slot, term);
      }
    }
  }
  return out;
}

OrePoly commutator(const OrePoly& p, const OrePoly& q, const OreContext& ctx) {
  return ore_sub(ore_mul(p, q, ctx), ore_mul(q, p, ctx));
}

RelationReport verify_main_relation(const FunctionModel& h,
                                    const std::vector<ZeroDatum>& zeros, int N,
                                    int xdeg) {
  const OreContext ctx{h, zeros, N};
  const auto x = ore_x(zeros.size());
  const auto y = ore_embed(element_y(zeros));
  const auto comm = commutator(x, y, ctx);
  const auto target = mu(h, zeros, N);

  RelationReport report;
  report.series_order = N;
  report.x_degree = xdeg;

  for (size_t j = 0; j < zeros.size(); ++j) {
    const double d =
        max_coeff_difference(comm.coeffs.front().components[j], target.components[j]);
    report.component_deviations.push_back(d);
    report.max_deviation = std::max(report.max_deviation, d);
  }
  // everything at x-degree >= 1 must vanish, through the padded degree
  const auto zero_elem = AlgebraElement::zero(zeros.size());
  for (int i = 1; i <= std::max(xdeg, comm.x_degree()); ++i) {
    if (i > comm.x_degree()) break;  // absent coefficients are exact zeros
    report.max_deviation = std::max(
        report.max_deviation,
        max_component_difference(comm.coeffs[static_cast<size_t>(i)], zero_elem));
  }
  return report;
}

double ore_seminorm(const OrePoly& p, const std::vector<SeminormParams>& params,
                    double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("ore_seminorm needs rho > 0");
  double acc = 0.0;
  double rho_i = 1.0;
  for (const auto& c : p.coeffs) {
    if (c.size() != params.size()) {
      throw std::invalid_argument("one seminorm parameter set per component required");
    }
    double worst = 0.0;
    for (size_t j = 0; j < c.size(); ++j) {
      worst = std::max(worst, seminorm(c.components[j], params[j]));
    }
    acc += worst * rho_i;
    rho_i *= rho;
  }
  return acc;
}

std::pair<double, double> kothe_diagonal_embed(const TruncatedSeries& a, double s,
                                               double t, double r, double q) {
  if (a.center() != cplx(0.0)) {
    throw std::invalid_argument("diagonal embedding expects a series centered at 0");
  }
  const double lhs = seminorm(a, SeminormParams::power(r * q, s + t));
  double rhs = 0.0;
  for (int n = 0; n <= a.trunc_order(); ++n) {
    const double lw = static_cast<double>(n) * (std::log(r) + std::log(q)) -
                      s * std::lgamma(static_cast<double>(n) + 1.0) -
                      t * std::lgamma(static_cast<double>(n) + 1.0);
    rhs += std::abs(a.coeff(n)) * std::exp(lw);
  }
  return {lhs, rhs};
}

}  // namespace anore
