#pragma once

// Concrete realizations and numeric oracles: Jordan-block matrix pairs
// solving [X, Y] = h(Y), the evaluation homomorphism on Ore polynomials,
// the Volterra-operator norm study, and the norm-decay bound propagator.

#include <Eigen/Dense>

#include <vector>

#include "anore/function_model.hpp"
#include "anore/ore.hpp"

namespace anore {

struct MatrixRep {
  int n = 0;
  cplx lambda = 0.0;
  Eigen::MatrixXcd X;
  Eigen::MatrixXcd Y;  // lambda*I + nilpotent Jordan shift
  double residual = 0.0;
  // trace of any commutator vanishes, so trace(h(Y)) = n*h(lambda) != 0
  // makes the relation unsolvable in every dimension
  bool trace_obstruction = false;
  bool solved = false;  // residual within tolerance and no obstruction
};

// Y = lambda*I + J_n; H = h(Y) summed exactly on the nilpotent part; X from
// the linear system [X, Y] = H by minimum-norm least squares.
MatrixRep jordan_pair(const FunctionModel& h, const ZeroDatum& z, int n,
                      double tol = 1e-10);

// tau(P) = sum_i c_i(Y - lambda*I) X^i with the series coefficient evaluated
// at the nilpotent part (exact: nilpotency kills orders >= n).  Components
// other than zero_index are ignored; the rep has single-point spectrum.
Eigen::MatrixXcd evaluate_orepoly(const OrePoly& p, const MatrixRep& rep,
                                  size_t zero_index);

// Largest singular value by power iteration on A^T A.
double operator_norm_estimate(const Eigen::MatrixXd& a);

// Quadrature matrix of indefinite integration on the midpoint grid
// (strictly lower triangular, entries = spacing).
Eigen::MatrixXd volterra_matrix(int grid);
// Multiplication by x, discretized as the diagonal of midpoint nodes.
Eigen::MatrixXd position_matrix(int grid);

// L2 operator-norm estimates of V^n for n = 1..n_max via the iterated kernel
// (x-t)^(n-1)/(n-1)! on a uniform grid; entries are computed in the log
// domain and the estimate is (largest singular value) * spacing.
std::vector<double> volterra_norms(int grid, int n_max);

// ||TV - VT - V^2|| for the discretized pair; first order in the spacing.
double commutator_residual_tv(int grid);

struct BoundSequence {
  int k = 0;
  double C = 0.0;
  double w_norm = 0.0;
  std::vector<double> base;
  std::vector<double> bounds;  // index n
};

// Propagates the recurrence ||y^{n+k-1} g chi|| <= C/n ||y^n g chi|| ||w||.
// k = 1: bounds collapse to exact zero for n > C*||w||.  k >= 2: closed
// product formula along n = m + j(k-1) with base values ||y^m g chi||.
BoundSequence bound_propagator(int k, double C, double w_norm,
                               const std::vector<double>& base_norms, int n_max);

struct DecayEnvelope {
  double K = 0.0;
  double r = 0.0;
};

// Fits K, r with bounds[n] <= K r^n / ((n+k-1)!)^{1/(k-1)} on the prefix
// n <= fit_prefix (log-domain least squares, then K normalized to dominate
// the prefix).  The tail staying below the fitted envelope is the check.
DecayEnvelope fit_decay_envelope(const std::vector<double>& bounds, int k,
                                 int fit_prefix);

double envelope_value(const DecayEnvelope& env, int k, int n);

}  // namespace anore
