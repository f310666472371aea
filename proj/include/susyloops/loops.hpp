#ifndef SUSYLOOPS_LOOPS_HPP_
#define SUSYLOOPS_LOOPS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "susyloops/algebra.hpp"
#include "susyloops/rational.hpp"
#include "susyloops/state_vector.hpp"

namespace susyloops {

enum class LoopKind { none, partial, global };

/// Evolution-loop classification for H_k.  A partial loop (tau = 2 pi,
/// phi = -pi on the infinite-ladder subspace) always exists; a global loop
/// requires every isolated level to be declared as eps_j = 1/2 - l_j/m_j
/// with coprime positive integers, and then tau = 2 M pi with M the least
/// common multiple of the m_j.
struct LoopReport {
  LoopKind kind = LoopKind::none;
  double tau = 0.0;
  double phi = 0.0;  // overall phase folded into [-pi, pi)
  double partial_tau = 0.0;
  double partial_phi = 0.0;
  std::vector<Rational> rationals;  // (l_j, m_j) aligned with spectrum.isolated
  long long M = 0;                  // set when global
};

/// Geometric phase together with its decomposition.  beta = phi + tau <H>
/// with phi the raw (unfolded) total phase of the cyclic state.
struct PhaseResult {
  double beta = 0.0;         // raw
  double beta_mod_2pi = 0.0; // folded into [0, 2 pi)
  double phi = 0.0;          // raw total phase
  double dynamical = 0.0;    // -tau <H>
};

/// Closed form of the coherent-state geometric phase:
/// beta(r) = prefactor * r^2 * 0F_{2k}(num_denoms; r^2) / 0F_{2k}(den_denoms; r^2).
struct CoherentPhaseForm {
  double prefactor = 0.0;  // 2 pi / prod_i (1/2 - eps_i)(3/2 - eps_i)
  std::vector<double> num_denoms;
  std::vector<double> den_denoms;

  double eval(double r) const;
};

/// Rationality is declared by the caller, never inferred from floats.  Each
/// pair (l_j, m_j), aligned with spectrum.isolated, must satisfy
/// |1/2 - l_j/m_j - eps_j| <= 1e-12 (RationalMismatchError otherwise); pairs
/// are reduced to coprime form at intake.  M, tau, phi use exact integer
/// arithmetic.  Without rational data the partial loop alone is reported;
/// with k = 0 the partial loop covers the whole space and counts as global
/// with M = 1.
LoopReport detect_loops(const SpectrumDescriptor& spectrum,
                        const std::optional<std::vector<Rational>>& rational_eps = std::nullopt);

/// U(t): b_j -> e^{-i eps_j t} b_j, c_n -> e^{-i (n + 1/2) t} c_n.
StateVector evolve(const SpectrumDescriptor& spectrum, const StateVector& state, double t);

/// Geometric phase of a cyclic state under the given loop, computed from the
/// closed coefficient formula and re-derived from phi + tau <H>; the two must
/// agree to 1e-12 (std::logic_error otherwise).  Partial loops demand b = 0
/// (NonCyclicError).
PhaseResult geometric_phase_state(const SpectrumDescriptor& spectrum, const StateVector& state,
                                  const LoopReport& loop);

CoherentPhaseForm coherent_phase_form(const SpectrumDescriptor& spectrum);

/// Coherent-state geometric phase at radius r from the closed hypergeometric
/// form, cross-checked against the coefficient-sum route through the actual
/// coherent state (1e-9 relative; std::logic_error on disagreement).
PhaseResult geometric_phase_coherent(const SpectrumDescriptor& spectrum, double r);

/// Exact prefactor coefficient: beta(r) = c * pi * r^2 * (0F ratio) with
/// c = 2 prod_i m_i^2 / (l_i (l_i + m_i)) as a reduced rational.
Rational coherent_phase_prefactor_rational(const std::vector<Rational>& lm_pairs);

std::string loop_to_json(const LoopReport& report);
std::string phase_to_json(const PhaseResult& phase);

}  // namespace susyloops

#endif  // SUSYLOOPS_LOOPS_HPP_
