#include "susyloops/state_vector.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "susyloops/susychain.hpp"  // format_g17

namespace susyloops {

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const auto& v : b) s += std::norm(v);
  for (const auto& v : c) s += std::norm(v);
  return s;
}

double StateVector::norm() const { return std::sqrt(norm_squared()); }

StateVector operator-(const StateVector& l, const StateVector& r) {
  if (l.b.size() != r.b.size() || l.c.size() != r.c.size())
    throw std::invalid_argument("StateVector: shape mismatch");
  StateVector out = l;
  for (std::size_t i = 0; i < out.b.size(); ++i) out.b[i] -= r.b[i];
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] -= r.c[i];
  return out;
}

StateVector StateVector::scaled(std::complex<double> factor) const {
  StateVector out = *this;
  for (auto& v : out.b) v *= factor;
  for (auto& v : out.c) v *= factor;
  return out;
}

double StateVector::max_coefficient_distance(const StateVector& other) const {
  if (b.size() != other.b.size() || c.size() != other.c.size())
    throw std::invalid_argument("StateVector: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) m = std::max(m, std::abs(b[i] - other.b[i]));
  for (std::size_t i = 0; i < c.size(); ++i) m = std::max(m, std::abs(c[i] - other.c[i]));
  return m;
}

namespace {
void append_complex_list(std::ostringstream& os, const std::vector<std::complex<double>>& v) {
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << "[" << format_g17(v[i].real()) << "," << format_g17(v[i].imag()) << "]";
  }
  os << "]";
}
}  // namespace

std::string state_to_json(const StateVector& state) {
  std::ostringstream os;
  os << "{\"isolated\":";
  append_complex_list(os, state.b);
  os << ",\"ladder\":";
  append_complex_list(os, state.c);
  os << "}";
  return os.str();
}

}  // namespace susyloops
