#ifndef SUSYLOOPS_SPECFUN_HPP_
#define SUSYLOOPS_SPECFUN_HPP_

#include <cstddef>
#include <vector>

namespace susyloops {

/// Outcome of a hypergeometric series summation.
struct SeriesResult {
  double value = 0.0;
  std::size_t terms_used = 1;  // number of terms added, >= 1
  bool converged = false;      // last added term <= tol * |value|
};

/// Sign-aware log-Gamma: ln|Gamma(x)| together with sign(Gamma(x)).
struct LogGamma {
  double log_abs = 0.0;
  int sign = 1;  // +1 or -1
};

/// True when x is a non-positive integer, i.e. a pole of Gamma.
bool is_gamma_pole(double x);

/// ln|Gamma(x)| and the sign of Gamma(x), Lanczos approximation with
/// reflection for x < 1/2.  Relative error below 1e-12 for |x| <= 50.
/// Throws PoleError at non-positive integers.
LogGamma log_gamma(double x);

/// Kummer confluent hypergeometric 1F1(a,b;y) by direct Taylor summation
/// with the term-ratio recurrence and compensated accumulation.
///
/// The series terminates exactly when a is a non-positive integer.
/// Throws PoleError when b is a non-positive integer (and the series does
/// not terminate first), std::domain_error when |y| > y_max, and
/// ConvergenceError when max_terms is exhausted.
SeriesResult kummer_1f1(double a, double b, double y, double tol = 1e-14,
                        std::size_t max_terms = 10000, double y_max = 400.0);

/// d/dy 1F1(a,b;y) = (a/b) 1F1(a+1,b+1;y).
SeriesResult kummer_1f1_dy(double a, double b, double y, double tol = 1e-14,
                           std::size_t max_terms = 10000, double y_max = 400.0);

/// Generalized hypergeometric 0Fq(d_1,...,d_q; y) = sum_n y^n / (n! prod_i (d_i)_n),
/// y >= 0.  Same error contract as kummer_1f1.
SeriesResult hyper_0fq(const std::vector<double>& denoms, double y, double tol = 1e-14,
                       std::size_t max_terms = 10000);

}  // namespace susyloops

#endif  // SUSYLOOPS_SPECFUN_HPP_
