#ifndef SUSYLOOPS_STATE_VECTOR_HPP_
#define SUSYLOOPS_STATE_VECTOR_HPP_

#include <complex>
#include <string>
#include <vector>

namespace susyloops {

/// Expansion of a state over the eigenbasis of H_k: b over the isolated
/// levels (ordered like SpectrumDescriptor::isolated, i.e. increasing energy)
/// and c over the infinite ladder E_n = n + 1/2.
struct StateVector {
  std::vector<std::complex<double>> b;
  std::vector<std::complex<double>> c;

  double norm_squared() const;
  double norm() const;

  friend StateVector operator-(const StateVector& l, const StateVector& r);
  StateVector scaled(std::complex<double> factor) const;

  /// Largest coefficient-wise |this - other|; vectors must match in shape.
  double max_coefficient_distance(const StateVector& other) const;
};

/// {"isolated": [[re,im],...], "ladder": [[re,im],...]}
std::string state_to_json(const StateVector& state);

}  // namespace susyloops

#endif  // SUSYLOOPS_STATE_VECTOR_HPP_
