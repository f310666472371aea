#ifndef SUSYLOOPS_STATES_HPP_
#define SUSYLOOPS_STATES_HPP_

#include <complex>
#include <string>

#include "susyloops/algebra.hpp"
#include "susyloops/state_vector.hpp"

namespace susyloops {

/// Nonlinear coherent state |z>: eigenstate of the ladder-down operator,
/// supported on the infinite ladder only (b = 0).
struct CoherentState {
  std::complex<double> z;
  double r = 0.0;  // |z|
  StateVector state;
  double normalization = 0.0;  // N(r), closed hypergeometric form
};

/// Build |z> from the downward recurrence
///   c_n = z c_{n-1} / sqrt(q(E_n)),
/// with c_0 fixed by normalization.  N(r) is evaluated both from the closed
/// 0F_{2k} form and from direct coefficient summation; the two must agree to
/// 1e-10 relative or a std::logic_error is raised.  The expansion is grown
/// until the truncation tail is far below 1e-12, capped at 4096 terms
/// (TruncationError beyond the cap).
CoherentState coherent_state(const SpectrumDescriptor& spectrum, std::complex<double> z,
                             double r_max = 20.0);

/// || L^- |z>  -  z |z> ||.
double eigenvalue_residual(const SpectrumDescriptor& spectrum, const CoherentState& cs);

/// <H_k> = sum_j eps_j |b_j|^2 + sum_n (n + 1/2) |c_n|^2.
double energy_expectation(const SpectrumDescriptor& spectrum, const StateVector& state);

/// CoherentState JSON: z, r, normalization and the underlying state.
std::string coherent_to_json(const CoherentState& cs);

}  // namespace susyloops

#endif  // SUSYLOOPS_STATES_HPP_
