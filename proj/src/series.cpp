#include "anore/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace anore {

namespace {

constexpr double kLogDblMax = 709.78;  // log(DBL_MAX), slightly rounded down

void require_same_center(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.center() != b.center()) {
    throw std::invalid_argument("series center mismatch");
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(cplx center, std::vector<cplx> coeffs, bool tail_zero)
    : center_(center), coeffs_(std::move(coeffs)), tail_zero_(tail_zero) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("series needs at least the constant coefficient");
  }
}

TruncatedSeries TruncatedSeries::polynomial(cplx center, std::vector<cplx> coeffs) {
  if (coeffs.empty()) coeffs.push_back(0.0);
  return TruncatedSeries(center, std::move(coeffs), true);
}

TruncatedSeries TruncatedSeries::constant(cplx center, cplx value) {
  return polynomial(center, {value});
}

TruncatedSeries TruncatedSeries::monomial(cplx center, int n, int order) {
  if (n < 0 || order < n) {
    throw std::invalid_argument("monomial exponent out of range");
  }
  std::vector<cplx> c(static_cast<size_t>(order) + 1, 0.0);
  c[static_cast<size_t>(n)] = 1.0;
  return TruncatedSeries(center, std::move(c), true);
}

TruncatedSeries TruncatedSeries::zero(cplx center, int order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  return TruncatedSeries(center, std::vector<cplx>(static_cast<size_t>(order) + 1, 0.0), true);
}

cplx TruncatedSeries::coeff(int n) const {
  if (n < 0) throw std::out_of_range("negative coefficient index");
  if (n <= trunc_order()) return coeffs_[static_cast<size_t>(n)];
  if (tail_zero_) return 0.0;
  throw std::out_of_range("coefficient beyond truncation order of a non-polynomial series");
}

int TruncatedSeries::degree() const {
  for (int n = trunc_order(); n >= 0; --n) {
    if (coeffs_[static_cast<size_t>(n)] != cplx(0.0)) return n;
  }
  return -1;
}

int TruncatedSeries::valuation(double tol) const {
  for (int n = 0; n <= trunc_order(); ++n) {
    if (std::abs(coeffs_[static_cast<size_t>(n)]) > tol) return n;
  }
  return -1;
}

cplx TruncatedSeries::evaluate(cplx z) const {
  const cplx u = z - center_;
  cplx acc = 0.0;
  for (int n = trunc_order(); n >= 0; --n) {
    acc = acc * u + coeffs_[static_cast<size_t>(n)];
  }
  return acc;
}

SeminormParams SeminormParams::power(double r, double s) {
  if (!(r > 0.0)) throw std::invalid_argument("Power seminorm requires r > 0");
  if (!(s >= 0.0)) throw std::invalid_argument("Power seminorm requires s >= 0");
  SeminormParams p;
  p.kind = Kind::Power;
  p.r = r;
  p.s = s;
  return p;
}

SeminormParams SeminormParams::formal(int m) {
  if (m < 0) throw std::invalid_argument("Formal seminorm requires m >= 0");
  SeminormParams p;
  p.kind = Kind::Formal;
  p.m = m;
  return p;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_center(a, b);
  const bool poly = a.is_polynomial() && b.is_polynomial();
  int order;
  if (poly) {
    order = std::max(a.trunc_order(), b.trunc_order());
  } else if (a.is_polynomial()) {
    order = b.trunc_order();
  } else if (b.is_polynomial()) {
    order = a.trunc_order();
  } else {
    order = std::min(a.trunc_order(), b.trunc_order());
  }
  std::vector<cplx> c(static_cast<size_t>(order) + 1, 0.0);
  for (int n = 0; n <= order; ++n) {
    cplx an = (n <= a.trunc_order() || a.is_polynomial()) ? a.coeff(n) : 0.0;
    cplx bn = (n <= b.trunc_order() || b.is_polynomial()) ? b.coeff(n) : 0.0;
    c[static_cast<size_t>(n)] = an + bn;
  }
  return TruncatedSeries(a.center(), std::move(c), poly);
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  return add(a, scale(b, -1.0));
}

TruncatedSeries scale(const TruncatedSeries& a, cplx factor) {
  std::vector<cplx> c = a.coeffs();
  for (auto& x : c) x *= factor;
  return TruncatedSeries(a.center(), std::move(c), a.is_polynomial());
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_center(a, b);
  const bool poly = a.is_polynomial() && b.is_polynomial();
  int order;
  if (poly) {
    order = (a.degree() < 0 || b.degree() < 0) ? 0 : a.degree() + b.degree();
  } else if (a.is_polynomial()) {
    order = b.trunc_order() + std::max(a.valuation(), 0);
  } else if (b.is_polynomial()) {
    order = a.trunc_order() + std::max(b.valuation(), 0);
  } else {
    order = std::min(a.trunc_order(), b.trunc_order());
  }
  std::vector<cplx> c(static_cast<size_t>(order) + 1, 0.0);
  const int da = a.is_polynomial() ? a.degree() : a.trunc_order();
  const int db = b.is_polynomial() ? b.degree() : b.trunc_order();
  for (int p = 0; p <= std::min(da, order); ++p) {
    const cplx ap = a.coeff(p);
    if (ap == cplx(0.0)) continue;
    for (int q = 0; q <= std::min(db, order - p); ++q) {
      c[static_cast<size_t>(p + q)] += ap * b.coeff(q);
    }
  }
  return TruncatedSeries(a.center(), std::move(c), poly);
}

TruncatedSeries differentiate(const TruncatedSeries& a) {
  if (a.trunc_order() < 1) {
    if (a.is_polynomial()) return TruncatedSeries::zero(a.center(), 0);
    throw std::invalid_argument("differentiate needs trunc_order >= 1");
  }
  std::vector<cplx> c(static_cast<size_t>(a.trunc_order()), 0.0);
  for (int n = 0; n + 1 <= a.trunc_order(); ++n) {
    c[static_cast<size_t>(n)] = static_cast<double>(n + 1) * a.coeff(n + 1);
  }
  return TruncatedSeries(a.center(), std::move(c), a.is_polynomial());
}

TruncatedSeries truncate(const TruncatedSeries& a, int order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  if (order >= a.trunc_order()) {
    if (!a.is_polynomial() || order == a.trunc_order()) return a;
    std::vector<cplx> c = a.coeffs();
    c.resize(static_cast<size_t>(order) + 1, 0.0);
    return TruncatedSeries(a.center(), std::move(c), true);
  }
  std::vector<cplx> c(a.coeffs().begin(), a.coeffs().begin() + order + 1);
  const bool still_poly = a.is_polynomial() && a.degree() <= order;
  return TruncatedSeries(a.center(), std::move(c), still_poly);
}

double power_weight_log(int n, double r, double s) {
  return static_cast<double>(n) * std::log(r) - s * std::lgamma(static_cast<double>(n) + 1.0);
}

double seminorm(const TruncatedSeries& a, const SeminormParams& p) {
  if (p.kind == SeminormParams::Kind::Formal) {
    double acc = 0.0;
    const int top = std::min(p.m, a.trunc_order());
    for (int n = 0; n <= top; ++n) acc += std::abs(a.coeff(n));
    return acc;
  }
  double acc = 0.0;
  for (int n = 0; n <= a.trunc_order(); ++n) {
    const double lw = power_weight_log(n, p.r, p.s);
    if (lw > kLogDblMax) {
      throw SeminormOverflow("seminorm weight overflows at order " + std::to_string(n));
    }
    acc += std::abs(a.coeff(n)) * std::exp(lw);
  }
  return acc;
}

TruncatedSeries shift_center(const TruncatedSeries& a, cplx new_center) {
  if (!a.is_polynomial()) {
    throw std::invalid_argument("shift_center requires a polynomial model (tail unknown)");
  }
  // Repeated synthetic division (Horner's Taylor shift); exact recombination.
  const cplx t = new_center - a.center();
  std::vector<cplx> c = a.coeffs();
  const int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i) {
    for (int j = n - 2; j >= i; --j) {
      c[static_cast<size_t>(j)] += t * c[static_cast<size_t>(j) + 1];
    }
  }
  return TruncatedSeries(new_center, std::move(c), true);
}

int common_exact_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.is_polynomial() && b.is_polynomial()) {
    return std::max({a.degree(), b.degree(), 0});
  }
  if (a.is_polynomial()) return b.trunc_order();
  if (b.is_polynomial()) return a.trunc_order();
  return std::min(a.trunc_order(), b.trunc_order());
}

double max_coeff_difference(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_center(a, b);
  const int top = common_exact_order(a, b);
  double m = 0.0;
  for (int n = 0; n <= top; ++n) {
    const cplx an = (a.is_polynomial() || n <= a.trunc_order()) ? a.coeff(n) : 0.0;
    const cplx bn = (b.is_polynomial() || n <= b.trunc_order()) ? b.coeff(n) : 0.0;
    m = std::max(m, std::abs(an - bn));
  }
  return m;
}

}  // namespace anore
