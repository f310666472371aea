#ifndef SUSYLOOPS_ALGEBRA_HPP_
#define SUSYLOOPS_ALGEBRA_HPP_

#include <string>
#include <vector>

#include "susyloops/rational.hpp"
#include "susyloops/state_vector.hpp"
#include "susyloops/susychain.hpp"

namespace susyloops {

/// Level set of H_k: k isolated one-step ladders below 1/2 plus the infinite
/// oscillator ladder E_n = n + 1/2.
struct SpectrumDescriptor {
  std::vector<double> isolated;  // strictly increasing, all < 1/2

  static SpectrumDescriptor from_chain(const SusyChain& chain);
  static SpectrumDescriptor from_isolated(std::vector<double> eps_increasing);

  int k() const { return static_cast<int>(isolated.size()); }
  double ladder_base() const { return 0.5; }
  double level(int n) const { return n + 0.5; }
  int ladder_count() const { return k() + 1; }
};

/// q(E) = (E - 1/2) prod_i (E - eps_i - 1)(E - eps_i), the product of the
/// annihilation-creation pair, and p(E) = q(E+1) - q(E), the deformed
/// commutator polynomial.  Coefficients stored lowest degree first.
struct LadderPolynomials {
  std::vector<double> q;  // degree 2k+1
  std::vector<double> p;  // degree 2k

  double eval_q(double e) const;
  double eval_p(double e) const;
};

/// Expand q from its roots {1/2} u {eps_i + 1} u {eps_i}; p by coefficient
/// subtraction of the unit-shifted q.
LadderPolynomials build_polynomials(const SpectrumDescriptor& spectrum);

/// Same expansion in exact rational arithmetic, eps_i = 1/2 - l_i/m_i.
struct RationalLadderPolynomials {
  std::vector<Rational> q;
  std::vector<Rational> p;
};
RationalLadderPolynomials build_polynomials_rational(const std::vector<Rational>& lm_pairs);

/// q evaluated as the explicit root product; exactly zero at the ladder base
/// and on the isolated levels.
double q_from_roots(const SpectrumDescriptor& spectrum, double energy);

enum class LadderDirection { down, up };

/// Algebraic action of the natural ladder operators on the eigenbasis:
/// isolated levels are annihilated in both directions (one-step ladders);
/// on the infinite ladder L^- |n> = sqrt(q(E_n)) |n-1> and
/// L^+ |n> = sqrt(q(E_{n+1})) |n+1>, matrix elements real non-negative.
StateVector ladder_action(const SpectrumDescriptor& spectrum, LadderDirection direction,
                          const StateVector& state);

/// {"q": [...], "p": [...]} with float coefficients; the rational overload
/// emits exact [num, den] pairs.
std::string polynomials_to_json(const LadderPolynomials& polys);
std::string polynomials_to_json(const RationalLadderPolynomials& polys);

}  // namespace susyloops

#endif  // SUSYLOOPS_ALGEBRA_HPP_
