#pragma once

// Truncated power-series arithmetic and the weighted seminorms
// ||a||_{r,s} = sum |a_n| r^n / n!^s  and  ||a||_{m,inf} = sum_{n<=m} |a_n|.

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace anore {

using cplx = std::complex<double>;

class SeminormOverflow : public std::runtime_error {
 public:
  explicit SeminormOverflow(const std::string& what) : std::runtime_error(what) {}
};

// Complex Taylor polynomial around a fixed center, degree-capped.
//
// trunc_order() is the exactness boundary: coefficients through that order
// are exact given exact inputs, and nothing is claimed beyond it.  A series
// flagged as polynomial has an exactly-zero tail, so it behaves as if padded
// with zeros to any order; operations exploit that to keep results exact.
class TruncatedSeries {
 public:
  TruncatedSeries(cplx center, std::vector<cplx> coeffs, bool tail_zero = false);

  // Exact polynomial model: tail beyond the listed coefficients is zero.
  static TruncatedSeries polynomial(cplx center, std::vector<cplx> coeffs);
  static TruncatedSeries constant(cplx center, cplx value);
  // y^n as an exact polynomial, represented through `order`.
  static TruncatedSeries monomial(cplx center, int n, int order);
  static TruncatedSeries zero(cplx center, int order);

  cplx center() const { return center_; }
  int trunc_order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  bool is_polynomial() const { return tail_zero_; }

  // Coefficient of order n; zero beyond the cap only for polynomial models.
  cplx coeff(int n) const;

  // Index of the last nonzero stored coefficient, -1 for the zero series.
  int degree() const;
  // Index of the first coefficient with |a_n| > tol, -1 if none.
  int valuation(double tol = 0.0) const;

  cplx evaluate(cplx z) const;  // Horner on the stored coefficients

 private:
  cplx center_;
  std::vector<cplx> coeffs_;  // a_0 .. a_N
  bool tail_zero_;
};

// Seminorm parameters: Power(r,s) for ||.||_{r,s}, Formal(m) for ||.||_{m,inf}.
// s = infinity is not a Power value; the Formal family models it.
struct SeminormParams {
  enum class Kind { Power, Formal };

  static SeminormParams power(double r, double s);
  static SeminormParams formal(int m);

  Kind kind = Kind::Power;
  double r = 1.0;
  double s = 0.0;
  int m = 0;
};

// Result trunc_order is min over non-polynomial inputs (polynomial tails pad
// for free); the sum of two polynomials is again an exact polynomial.
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const TruncatedSeries& a, cplx factor);

// Cauchy product c_n = sum_{p+q=n} a_p b_q.  Exact orders: full convolution
// for two polynomials; otherwise min over jets, shifted up by the exact
// valuation of a polynomial partner.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries differentiate(const TruncatedSeries& a);

// Lower the cap to `order` (marks the tail unknown when it cuts coefficients).
TruncatedSeries truncate(const TruncatedSeries& a, int order);

// log of the weight r^n / n!^s; the seminorm works in the log domain so that
// orders up to several hundred stay representable.
double power_weight_log(int n, double r, double s);

double seminorm(const TruncatedSeries& a, const SeminormParams& p);

// Taylor recombination to a new center; exact, polynomial models only.
TruncatedSeries shift_center(const TruncatedSeries& a, cplx new_center);

// Largest order through which both operands claim exact coefficients
// (-1 when either claims nothing; INT_MAX/2-ish cap for two polynomials).
int common_exact_order(const TruncatedSeries& a, const TruncatedSeries& b);

// max |a_n - b_n| over the common exact orders; requires equal centers.
double max_coeff_difference(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace anore
