#ifndef SUSYLOOPS_SEED_HPP_
#define SUSYLOOPS_SEED_HPP_

#include <vector>

namespace susyloops {

/// One Schroedinger seed solution of the oscillator at factorization energy
/// epsilon, with asymmetry parameter nu.  Natural units hbar = m = omega = 1.
struct SeedSpec {
  double epsilon = 0.0;
  double nu = 0.0;
};

/// Seed value and derivatives at one point.  derivatives[d-1] holds u^(d).
struct SeedEval {
  double x = 0.0;
  double u = 0.0;
  std::vector<double> derivatives;

  double deriv(int order) const { return order == 0 ? u : derivatives[order - 1]; }
};

/// Evaluate the seed solution
///
///   u(x) = exp(-x^2/2) [ 1F1(a1, 1/2; x^2)
///                        + 2 x nu Gamma(a2)/Gamma(a1) 1F1(a2, 3/2; x^2) ],
///   a1 = (1 - 2 eps)/4,  a2 = (3 - 2 eps)/4,
///
/// normalized so u(0) = 1 and u'(0) = 2 nu Gamma(a2)/Gamma(a1).  u' comes from
/// term-wise closed-form differentiation; orders >= 2 from the Schroedinger
/// recursion u'' = 2 (x^2/2 - eps) u expanded with the Leibniz rule.
///
/// When a1 is a non-positive integer the Gamma ratio's pole in the denominator
/// kills the nu term (taken as exactly 0).  When a2 is a non-positive integer
/// the ratio diverges: the term is 0 if nu == 0, otherwise a PoleError naming
/// Gamma((3-2 eps)/4) is thrown.
///
/// max_deriv in [1, 12].
SeedEval eval_seed(const SeedSpec& spec, double x, int max_deriv = 2);

/// Log-derivative u'(x)/u(x).  Throws NodeError when |u(x)| < 1e-280.
double alpha1(const SeedSpec& spec, double x);

/// Coefficient of the odd part: 2 nu Gamma((3-2 eps)/4)/Gamma((1-2 eps)/4),
/// with the pole limits described at eval_seed.  Equals u'(0).
double seed_odd_coefficient(const SeedSpec& spec);

}  // namespace susyloops

#endif  // SUSYLOOPS_SEED_HPP_
