#include "anore/operator_models.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace anore {

namespace {

Eigen::MatrixXcd nilpotent_shift(int n) {
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) j(i, i + 1) = 1.0;
  return j;
}

}  // namespace

MatrixRep jordan_pair(const FunctionModel& h, const ZeroDatum& z, int n, double tol) {
  if (n < 2) throw std::invalid_argument("jordan_pair needs dimension >= 2");
  MatrixRep rep;
  rep.n = n;
  rep.lambda = z.lambda;

  const Eigen::MatrixXcd jmat = nilpotent_shift(n);
  rep.Y = z.lambda * Eigen::MatrixXcd::Identity(n, n) + jmat;

  // h(Y) = sum_{m<n} h^(m)(lambda)/m! J^m, exact by nilpotency: an upper
  // triangular Toeplitz matrix with the Taylor coefficients on the diagonals.
  const auto hc = h.coefficients_at(z.lambda, n - 1);
  Eigen::MatrixXcd hmat = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int m = 0; i + m < n; ++m) hmat(i, i + m) = hc[static_cast<size_t>(m)];
  }

  const cplx tr = hmat.trace();
  rep.trace_obstruction = std::abs(tr) > 1e-8 * (1.0 + hmat.norm());

  // vec(XY - YX) = (Y^T kron I - I kron Y) vec(X), column-major vec.
  const int nn = n * n;
  Eigen::MatrixXcd sys = Eigen::MatrixXcd::Zero(nn, nn);
  const Eigen::MatrixXcd yt = rep.Y.transpose();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        // (Y^T kron I)((a,c),(b,c)) = Y^T(a,b); blocks indexed column-major
        sys(a * n + c, b * n + c) += yt(a, b);
        // (I kron Y)((c,a),(c,b)) = Y(a,b)
        sys(c * n + a, c * n + b) -= rep.Y(a, b);
      }
    }
  }
  Eigen::VectorXcd rhs(nn);
  for (int col = 0; col < n; ++col) {
    for (int row = 0; row < n; ++row) rhs(col * n + row) = hmat(row, col);
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sys, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(1e-12);
  const Eigen::VectorXcd sol = svd.solve(rhs);  // minimum-norm least squares

  rep.X = Eigen::MatrixXcd::Zero(n, n);
  for (int col = 0; col < n; ++col) {
    for (int row = 0; row < n; ++row) rep.X(row, col) = sol(col * n + row);
  }
  rep.residual = (rep.X * rep.Y - rep.Y * rep.X - hmat).norm();
  rep.solved = !rep.trace_obstruction && rep.residual <= tol;
  return rep;
}

Eigen::MatrixXcd evaluate_orepoly(const OrePoly& p, const MatrixRep& rep,
                                  size_t zero_index) {
  const int n = rep.n;
  const Eigen::MatrixXcd nil = rep.Y - rep.lambda * Eigen::MatrixXcd::Identity(n, n);

  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(n, n);
  Eigen::MatrixXcd xpow = Eigen::MatrixXcd::Identity(n, n);
  for (const auto& coeff : p.coeffs) {
    if (zero_index >= coeff.size()) {
      throw std::invalid_argument("zero index outside the coefficient components");
    }
    const auto& series = coeff.components[zero_index];
    if (!series.is_polynomial() && series.trunc_order() < n - 1) {
      throw std::invalid_argument(
          "series truncation order below n-1: insufficient data for the evaluation");
    }
    Eigen::MatrixXcd value = Eigen::MatrixXcd::Zero(n, n);
    Eigen::MatrixXcd nilpow = Eigen::MatrixXcd::Identity(n, n);
    for (int m = 0; m < n; ++m) {
      value += series.coeff(m) * nilpow;
      nilpow = nilpow * nil;
    }
    acc += value * xpow;
    xpow = xpow * rep.X;
  }
  return acc;
}

double operator_norm_estimate(const Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.cols());
  Eigen::VectorXd v = Eigen::VectorXd::Ones(n) / std::sqrt(static_cast<double>(n));
  double sigma = 0.0;
  for (int it = 0; it < 10000; ++it) {
    const Eigen::VectorXd w = a * v;
    const double s = w.norm();
    if (s == 0.0) return 0.0;
    Eigen::VectorXd v2 = a.transpose() * w;
    const double nv = v2.norm();
    if (nv == 0.0) return s;
    v = v2 / nv;
    if (it >= 5 && std::abs(s - sigma) <= 1e-12 * s) return s;
    sigma = s;
  }
  return sigma;
}

Eigen::MatrixXd volterra_matrix(int grid) {
  const double dx = 1.0 / grid;
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(grid, grid);
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < i; ++j) v(i, j) = dx;
  }
  return v;
}

Eigen::MatrixXd position_matrix(int grid) {
  const double dx = 1.0 / grid;
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(grid, grid);
  for (int i = 0; i < grid; ++i) t(i, i) = (i + 0.5) * dx;
  return t;
}

std::vector<double> volterra_norms(int grid, int n_max) {
  if (grid < 100) throw std::invalid_argument("volterra_norms needs grid >= 100");
  if (n_max < 1) throw std::invalid_argument("volterra_norms needs n_max >= 1");
  const double dx = 1.0 / grid;

  std::vector<double> norms;
  Eigen::MatrixXd kernel = Eigen::MatrixXd::Zero(grid, grid);
  std::vector<double> band(static_cast<size_t>(grid));
  for (int n = 1; n <= n_max; ++n) {
    // kernel (x_i - t_j)^{n-1}/(n-1)! for t_j < x_i; on the midpoint grid the
    // difference is (i-j)*dx, so the matrix is Toeplitz in i-j.
    const double lg = std::lgamma(static_cast<double>(n));
    for (int d = 1; d < grid; ++d) {
      band[static_cast<size_t>(d)] =
          std::exp(static_cast<double>(n - 1) * std::log(d * dx) - lg);
    }
    for (int i = 0; i < grid; ++i) {
      for (int j = 0; j < i; ++j) kernel(i, j) = band[static_cast<size_t>(i - j)];
    }
    norms.push_back(operator_norm_estimate(kernel) * dx);
  }
  return norms;
}

double commutator_residual_tv(int grid) {
  if (grid < 100) throw std::invalid_argument("commutator_residual_tv needs grid >= 100");
  const Eigen::MatrixXd v = volterra_matrix(grid);
  const Eigen::MatrixXd t = position_matrix(grid);
  const Eigen::MatrixXd resid = t * v - v * t - v * v;
  return operator_norm_estimate(resid);
}

BoundSequence bound_propagator(int k, double C, double w_norm,
                               const std::vector<double>& base_norms, int n_max) {
  if (k < 1) throw std::invalid_argument("bound_propagator needs k >= 1");
  if (!(C > 0.0) || !(w_norm > 0.0)) {
    throw std::invalid_argument("bound_propagator needs C > 0 and ||w|| > 0");
  }
  if (n_max < 0) throw std::invalid_argument("negative n_max");

  BoundSequence seq;
  seq.k = k;
  seq.C = C;
  seq.w_norm = w_norm;
  seq.base = base_norms;
  seq.bounds.assign(static_cast<size_t>(n_max) + 1, 0.0);

  if (k == 1) {
    if (base_norms.size() != 1) {
      throw std::invalid_argument("k = 1 takes a single base value");
    }
    // the recurrence pins ||y^n chi|| <= (C w / n) ||y^n chi||: exact zero
    // once n exceeds C*||w||
    const double cutoff = C * w_norm;
    for (int n = 0; n <= n_max; ++n) {
      seq.bounds[static_cast<size_t>(n)] =
          static_cast<double>(n) > cutoff ? 0.0 : base_norms[0] * w_norm;
    }
    return seq;
  }

  if (static_cast<int>(base_norms.size()) != k) {
    throw std::invalid_argument("k >= 2 takes base values for m = 0..k-1");
  }
  seq.bounds[0] = base_norms[0] * w_norm;
  for (int n = 1; n <= n_max; ++n) {
    const int m = (n - 1) % (k - 1) + 1;  // unique n = m + j(k-1), 1 <= m <= k-1
    const int j = (n - m) / (k - 1);
    double b = base_norms[static_cast<size_t>(m)] * w_norm;
    for (int t = 0; t < j; ++t) {
      b *= C * w_norm / static_cast<double>(m + t * (k - 1));
    }
    seq.bounds[static_cast<size_t>(n)] = b;
  }
  return seq;
}

DecayEnvelope fit_decay_envelope(const std::vector<double>& bounds, int k,
                                 int fit_prefix) {
  if (k < 2) throw std::invalid_argument("decay envelope is for k >= 2");
  std::vector<std::pair<double, double>> pts;  // (n, log b_n + lgamma(n+k)/(k-1))
  const int top = std::min<int>(fit_prefix, static_cast<int>(bounds.size()) - 1);
  for (int n = k - 1; n <= top; ++n) {
    const double b = bounds[static_cast<size_t>(n)];
    if (b <= 0.0) continue;
    pts.emplace_back(static_cast<double>(n),
                     std::log(b) + std::lgamma(static_cast<double>(n + k)) / (k - 1));
  }
  if (pts.size() < 2) throw std::invalid_argument("not enough positive bounds to fit");

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double count = static_cast<double>(pts.size());
  const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  double log_k = -std::numeric_limits<double>::infinity();
  for (const auto& [x, y] : pts) log_k = std::max(log_k, y - slope * x);

  DecayEnvelope env;
  env.r = std::exp(slope);
  env.K = std::exp(log_k);
  return env;
}

double envelope_value(const DecayEnvelope& env, int k, int n) {
  return std::exp(std::log(env.K) + n * std::log(env.r) -
                  std::lgamma(static_cast<double>(n + k)) / (k - 1));
}

}  // namespace anore
