#include "anore/function_model.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace anore {

namespace {

std::vector<cplx> trim_trailing_zeros(std::vector<cplx> c) {
  while (c.size() > 1 && c.back() == cplx(0.0)) c.pop_back();
  if (c.empty()) c.push_back(0.0);
  return c;
}

std::vector<cplx> convolve(const std::vector<cplx>& a, const std::vector<cplx>& b,
                           size_t out_size) {
  std::vector<cplx> c(out_size, 0.0);
  for (size_t p = 0; p < a.size(); ++p) {
    if (a[p] == cplx(0.0)) continue;
    for (size_t q = 0; q < b.size() && p + q < out_size; ++q) {
      c[p + q] += a[p] * b[q];
    }
  }
  return c;
}

}  // namespace

FunctionModel FunctionModel::polynomial(std::vector<cplx> coeffs) {
  FunctionModel f;
  f.poly_ = trim_trailing_zeros(std::move(coeffs));
  f.name_ = "polynomial";
  return f;
}

FunctionModel FunctionModel::oracle(std::string name, CoefficientRule rule,
                                    RadiusRule radius) {
  if (!rule || !radius) throw std::invalid_argument("oracle needs rule and radius");
  FunctionModel f;
  f.rule_ = std::move(rule);
  f.radius_ = std::move(radius);
  f.name_ = std::move(name);
  return f;
}

FunctionModel FunctionModel::sinh_deformation(cplx hbar) {
  const cplx sh = std::sinh(hbar);
  if (std::abs(sh) == 0.0) {
    throw std::invalid_argument("sinh_deformation requires sinh(hbar) != 0");
  }
  auto rule = [hbar, sh](cplx center, int order) {
    // d^n/dy^n sinh(hbar*y) = hbar^n * (sinh or cosh)(hbar*y)
    std::vector<cplx> c(static_cast<size_t>(order) + 1);
    const cplx u = hbar * center;
    const cplx even = std::sinh(u) / sh;
    const cplx odd = std::cosh(u) / sh;
    cplx hn_over_nfact = 1.0;  // hbar^n / n!
    for (int n = 0; n <= order; ++n) {
      c[static_cast<size_t>(n)] = hn_over_nfact * (n % 2 == 0 ? even : odd);
      hn_over_nfact *= hbar / static_cast<double>(n + 1);
    }
    return c;
  };
  auto radius = [](cplx) { return std::numeric_limits<double>::infinity(); };
  return oracle("sinh_deformation", std::move(rule), std::move(radius));
}

FunctionModel FunctionModel::derivative(const FunctionModel& f) {
  if (f.is_polynomial()) {
    const auto& c = f.poly_coeffs();
    std::vector<cplx> d;
    for (size_t n = 1; n < c.size(); ++n) d.push_back(static_cast<double>(n) * c[n]);
    if (d.empty()) d.push_back(0.0);
    return polynomial(std::move(d));
  }
  FunctionModel base = f;
  auto rule = [base](cplx center, int order) {
    const auto c = base.coefficients_at(center, order + 1);
    std::vector<cplx> d(static_cast<size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
      d[static_cast<size_t>(n)] = static_cast<double>(n + 1) * c[static_cast<size_t>(n) + 1];
    }
    return d;
  };
  auto radius = [base](cplx center) { return base.validity_radius(center); };
  return oracle(f.name() + "'", std::move(rule), std::move(radius));
}

FunctionModel FunctionModel::product(const FunctionModel& f, const FunctionModel& g) {
  if (f.is_polynomial() && g.is_polynomial()) {
    const auto& a = f.poly_coeffs();
    const auto& b = g.poly_coeffs();
    return polynomial(convolve(a, b, a.size() + b.size() - 1));
  }
  FunctionModel lhs = f;
  FunctionModel rhs = g;
  auto rule = [lhs, rhs](cplx center, int order) {
    const auto a = lhs.coefficients_at(center, order);
    const auto b = rhs.coefficients_at(center, order);
    return convolve(a, b, static_cast<size_t>(order) + 1);
  };
  auto radius = [lhs, rhs](cplx center) {
    return std::min(lhs.validity_radius(center), rhs.validity_radius(center));
  };
  return oracle("(" + f.name() + ")*(" + g.name() + ")", std::move(rule), std::move(radius));
}

const std::vector<cplx>& FunctionModel::poly_coeffs() const {
  if (!poly_) throw std::logic_error("not a polynomial model");
  return *poly_;
}

double FunctionModel::validity_radius(cplx center) const {
  if (is_polynomial()) return std::numeric_limits<double>::infinity();
  return radius_(center);
}

std::vector<cplx> FunctionModel::coefficients_at(cplx center, int order) const {
  if (order < 0) throw std::invalid_argument("negative expansion order");
  if (is_polynomial()) {
    const auto shifted =
        shift_center(TruncatedSeries::polynomial(0.0, *poly_), center).coeffs();
    std::vector<cplx> c(static_cast<size_t>(order) + 1, 0.0);
    for (size_t n = 0; n < c.size() && n < shifted.size(); ++n) c[n] = shifted[n];
    return c;
  }
  if (!(validity_radius(center) > 0.0)) {
    throw std::invalid_argument("expansion center outside the model's validity region");
  }
  auto c = rule_(center, order);
  if (c.size() != static_cast<size_t>(order) + 1) {
    throw std::runtime_error("coefficient rule returned wrong length");
  }
  return c;
}

ZeroDatum::ZeroDatum(cplx lambda_, int order_) : lambda(lambda_), order(order_) {
  if (order < 1) throw std::invalid_argument("zero order must be >= 1");
  exponent = order == 1 ? std::numeric_limits<double>::infinity()
                        : 1.0 / static_cast<double>(order - 1);
}

TruncatedSeries taylor_at(const FunctionModel& f, cplx lambda, int N) {
  if (N < 0) throw std::invalid_argument("negative expansion order");
  if (f.is_polynomial()) {
    auto full = shift_center(TruncatedSeries::polynomial(0.0, f.poly_coeffs()), lambda);
    return truncate(full, N);
  }
  return TruncatedSeries(lambda, f.coefficients_at(lambda, N), false);
}

int zero_order(const FunctionModel& f, cplx lambda, double tol, int depth) {
  if (depth < 1) throw std::invalid_argument("probe depth must be >= 1");
  const auto ts = taylor_at(f, lambda, depth);
  double maxc = 0.0;
  for (int n = 0; n <= depth; ++n) maxc = std::max(maxc, std::abs(ts.coeff(n)));
  if (maxc == 0.0) {
    throw OrderUndecidableError("all Taylor coefficients vanish through the probe depth");
  }
  const double threshold = tol * maxc;
  for (int n = 0; n <= depth; ++n) {
    if (std::abs(ts.coeff(n)) > threshold) {
      if (n == 0) throw NotAZeroError("constant Taylor coefficient above tolerance");
      return n;
    }
  }
  throw OrderUndecidableError("zero order undecidable at this probe depth");
}

ZeroDatum validated_zero(const FunctionModel& f, cplx lambda, double tol, int depth) {
  return ZeroDatum(lambda, zero_order(f, lambda, tol, depth));
}

TruncatedSeries local_factor(const FunctionModel& f, const ZeroDatum& z, int N) {
  const int k = z.order;
  const int depth = std::max(N + k, std::max(2 * k, 8));
  const int found = zero_order(f, z.lambda, 1e-9, depth);
  if (found != k) {
    throw NotAZeroError("declared zero order " + std::to_string(k) +
                        " disagrees with probed order " + std::to_string(found));
  }
  const auto ts = taylor_at(f, z.lambda, N + k);
  std::vector<cplx> g(static_cast<size_t>(N) + 1, 0.0);
  for (int n = 0; n <= N; ++n) g[static_cast<size_t>(n)] = ts.coeff(n + k);
  return TruncatedSeries(z.lambda, std::move(g), ts.is_polynomial());
}

double cauchy_bounds(const FunctionModel& f, cplx lambda, double R, int samples,
                     double margin) {
  if (!(R > 0.0)) throw std::invalid_argument("Cauchy radius must be positive");
  if (samples < 1) throw std::invalid_argument("need at least one circle sample");
  if (!(f.validity_radius(lambda) > R)) {
    throw std::invalid_argument("disc of radius R exits the validity region");
  }

  TruncatedSeries model = [&] {
    if (f.is_polynomial()) {
      return shift_center(TruncatedSeries::polynomial(0.0, f.poly_coeffs()), lambda);
    }
    // Expand until the tail at radius R is negligible.
    int order = 32;
    for (;;) {
      auto ts = taylor_at(f, lambda, order);
      double scale = 0.0;
      for (int n = 0; n <= order; ++n) {
        scale = std::max(scale, std::abs(ts.coeff(n)) * std::pow(R, n));
      }
      bool settled = order >= 8;
      for (int n = std::max(0, order - 7); n <= order && settled; ++n) {
        if (std::abs(ts.coeff(n)) * std::pow(R, n) > 1e-18 * scale) settled = false;
      }
      if (settled || order >= 2048) {
        if (!settled) throw std::runtime_error("Taylor tail did not settle at radius R");
        return ts;
      }
      order *= 2;
    }
  }();

  double max_mod = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) / samples;
    const cplx z = lambda + R * cplx(std::cos(theta), std::sin(theta));
    max_mod = std::max(max_mod, std::abs(model.evaluate(z)));
  }
  return (1.0 + margin) * max_mod;
}

bool Rectangle::contains(cplx z) const {
  return z.real() >= re_min && z.real() <= re_max && z.imag() >= im_min &&
         z.imag() <= im_max;
}

namespace {

std::vector<cplx> companion_roots(const std::vector<cplx>& coeffs) {
  const int d = static_cast<int>(coeffs.size()) - 1;
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -coeffs[static_cast<size_t>(i)] / coeffs.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("companion-matrix eigenvalue solve failed");
  }
  std::vector<cplx> roots(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) roots[static_cast<size_t>(i)] = solver.eigenvalues()(i);
  return roots;
}

std::vector<std::vector<cplx>> cluster_points(std::vector<cplx> pts, double radius) {
  std::vector<std::vector<cplx>> clusters;
  std::vector<bool> used(pts.size(), false);
  for (size_t i = 0; i < pts.size(); ++i) {
    if (used[i]) continue;
    std::vector<cplx> cluster{pts[i]};
    used[i] = true;
    // chain growth: a point joins if it is within radius of any member
    bool grew = true;
    while (grew) {
      grew = false;
      for (size_t j = 0; j < pts.size(); ++j) {
        if (used[j]) continue;
        for (const cplx& m : cluster) {
          if (std::abs(pts[j] - m) <= radius) {
            cluster.push_back(pts[j]);
            used[j] = true;
            grew = true;
            break;
          }
        }
      }
    }
    clusters.push_back(std::move(cluster));
  }
  return clusters;
}

}  // namespace

std::vector<ZeroDatum> find_zeros(const FunctionModel& f, const Rectangle& region,
                                  double tol, double cluster_radius) {
  if (!f.is_polynomial()) {
    throw std::invalid_argument(
        "find_zeros handles polynomial models only; declare oracle zeros explicitly");
  }
  const auto& coeffs = f.poly_coeffs();
  const int d = static_cast<int>(coeffs.size()) - 1;
  if (d == 0) {
    if (coeffs[0] == cplx(0.0)) {
      throw std::invalid_argument("the zero function has no zero set to analyze");
    }
    return {};
  }

  const auto roots = companion_roots(coeffs);
  const int depth = std::max(d, 4);

  for (double radius = cluster_radius; radius <= 1e-2; radius *= 4.0) {
    auto clusters = cluster_points(roots, radius);
    std::vector<ZeroDatum> out;
    bool consistent = true;
    for (const auto& cluster : clusters) {
      cplx mean = 0.0;
      for (const cplx& z : cluster) mean += z;
      mean /= static_cast<double>(cluster.size());
      if (!region.contains(mean)) continue;
      try {
        const int k = zero_order(f, mean, tol, depth);
        if (k != static_cast<int>(cluster.size())) {
          consistent = false;
          break;
        }
        out.emplace_back(mean, k);
      } catch (const NotAZeroError&) {
        consistent = false;
        break;
      } catch (const OrderUndecidableError&) {
        consistent = false;
        break;
      }
    }
    if (consistent) {
      std::sort(out.begin(), out.end(), [](const ZeroDatum& a, const ZeroDatum& b) {
        if (a.lambda.real() != b.lambda.real()) return a.lambda.real() < b.lambda.real();
        return a.lambda.imag() < b.lambda.imag();
      });
      return out;
    }
  }
  throw OrderUndecidableError(
      "root clustering did not stabilize; multiplicity structure undecidable");
}

std::vector<ZeroDatum> sinh_deformation_zeros(cplx hbar, int window) {
  if (window < 0) throw std::invalid_argument("zero window must be >= 0");
  std::vector<ZeroDatum> zeros;
  for (int j = -window; j <= window; ++j) {
    const cplx lambda = cplx(0.0, std::numbers::pi * j) / hbar;
    zeros.emplace_back(lambda, 1);
  }
  return zeros;
}

cplx evaluate(const FunctionModel& f, cplx z) {
  if (f.is_polynomial()) {
    return TruncatedSeries::polynomial(0.0, f.poly_coeffs()).evaluate(z);
  }
  return f.coefficients_at(z, 0)[0];
}

}  // namespace anore
