#pragma once

// Holomorphic function models: polynomial coefficient lists or coefficient
// oracles with a validity radius.  Locates and validates zeros with their
// orders, produces local Taylor data and Cauchy bounds.

#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "anore/series.hpp"

namespace anore {

class NotAZeroError : public std::runtime_error {
 public:
  explicit NotAZeroError(const std::string& what) : std::runtime_error(what) {}
};

class OrderUndecidableError : public std::runtime_error {
 public:
  explicit OrderUndecidableError(const std::string& what) : std::runtime_error(what) {}
};

// Taylor coefficients a_0..a_N of the modeled function at `center`.
using CoefficientRule = std::function<std::vector<cplx>(cplx center, int order)>;
// Radius of validity of the Taylor data around `center` (may be infinite).
using RadiusRule = std::function<double(cplx center)>;

class FunctionModel {
 public:
  // Polynomial with the given coefficients at 0 (exact everywhere).
  static FunctionModel polynomial(std::vector<cplx> coeffs);
  // Deterministic coefficient oracle; the rule must be pure.
  static FunctionModel oracle(std::string name, CoefficientRule rule, RadiusRule radius);
  // Builtin h(y) = sinh(hbar*y)/sinh(hbar), entire, zeros at pi*i*j/hbar.
  static FunctionModel sinh_deformation(cplx hbar);

  static FunctionModel derivative(const FunctionModel& f);
  static FunctionModel product(const FunctionModel& f, const FunctionModel& g);

  bool is_polynomial() const { return poly_.has_value(); }
  const std::vector<cplx>& poly_coeffs() const;
  const std::string& name() const { return name_; }
  double validity_radius(cplx center) const;
  std::vector<cplx> coefficients_at(cplx center, int order) const;

 private:
  FunctionModel() = default;
  std::optional<std::vector<cplx>> poly_;
  CoefficientRule rule_;
  RadiusRule radius_;
  std::string name_;
};

// Zero lambda of h with its order k and the derived exponent
// s = 1/(k-1) (k = 1 gives s = infinity, handled by the Formal family).
struct ZeroDatum {
  ZeroDatum(cplx lambda_, int order_);

  cplx lambda;
  int order;
  double exponent;  // 1/(order-1), or +infinity for simple zeros
};

// Taylor polynomial of f at lambda through order N; coefficients f^(n)(lambda)/n!.
TruncatedSeries taylor_at(const FunctionModel& f, cplx lambda, int N);

// Smallest n with |c_n| > tol * max_{m<=depth} |c_m|.  Throws NotAZeroError
// when n = 0 and OrderUndecidableError when every probed coefficient is below
// the threshold.
int zero_order(const FunctionModel& f, cplx lambda, double tol = 1e-9, int depth = 32);

// zero_order packaged with the derived exponent.
ZeroDatum validated_zero(const FunctionModel& f, cplx lambda, double tol = 1e-9,
                         int depth = 32);

// The unit factor g with h(z) = (z-lambda)^k g(z) locally: g_n = c_{n+k}.
TruncatedSeries local_factor(const FunctionModel& f, const ZeroDatum& z, int N);

// M = (1+margin) * max over `samples` points on |z-lambda| = R of |f(z)|,
// evaluated by summing the Taylor model at lambda.  Cauchy's inequalities
// then give |f^(p)(lambda)/p!| <= M/R^p within the margin.
double cauchy_bounds(const FunctionModel& f, cplx lambda, double R, int samples,
                     double margin = 0.05);

struct Rectangle {
  double re_min = -1e9;
  double re_max = 1e9;
  double im_min = -1e9;
  double im_max = 1e9;
  bool contains(cplx z) const;
};

// All zeros of a polynomial model inside the region: companion-matrix
// eigenvalues clustered into multiplicities, each cluster validated by
// zero_order.  The clustering radius adapts upward when the validated order
// disagrees with the cluster size (multiple roots scatter like eps^(1/k)).
// Refuses coefficient oracles: their zeros must be declared, then validated.
std::vector<ZeroDatum> find_zeros(const FunctionModel& f, const Rectangle& region = {},
                                  double tol = 1e-9, double cluster_radius = 1e-6);

// Declared zero window for the sinh deformation: j in [-window, window].
std::vector<ZeroDatum> sinh_deformation_zeros(cplx hbar, int window);

cplx evaluate(const FunctionModel& f, cplx z);

}  // namespace anore
