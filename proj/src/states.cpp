#include "susyloops/states.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "susyloops/errors.hpp"
#include "susyloops/specfun.hpp"

namespace susyloops {

namespace {

constexpr int kHardCap = 4096;
constexpr double kTailBudget = 1e-12;
// Internal growth target well under the budget so the last stored
// coefficient itself is negligible (the eigenvalue residual sees it).
constexpr double kTailTarget = 1e-24;

std::vector<double> normalization_denoms(const SpectrumDescriptor& spectrum) {
  std::vector<double> d;
  d.reserve(2 * spectrum.isolated.size());
  for (double eps : spectrum.isolated) d.push_back(0.5 - eps);
  for (double eps : spectrum.isolated) d.push_back(1.5 - eps);
  return d;
}

// sqrt(prod_i Gamma(1/2 - eps_i) Gamma(3/2 - eps_i)) in log space.
double gamma_prefactor(const SpectrumDescriptor& spectrum) {
  double lg = 0.0;
  for (double eps : spectrum.isolated)
    lg += log_gamma(0.5 - eps).log_abs + log_gamma(1.5 - eps).log_abs;
  return std::exp(0.5 * lg);
}

}  // namespace

CoherentState coherent_state(const SpectrumDescriptor& spectrum, std::complex<double> z,
                             double r_max) {
  const double r = std::abs(z);
  if (r > r_max) {
    std::ostringstream os;
    os << "coherent_state: |z| = " << r << " exceeds r_max = " << r_max;
    throw std::domain_error(os.str());
  }

  // Unnormalized recurrence a_n = z a_{n-1} / sqrt(q(E_n)), a_0 = 1.
  std::vector<std::complex<double>> a{{1.0, 0.0}};
  double sum_sq = 1.0;
  while (true) {
    const int n = static_cast<int>(a.size());
    const double q = q_from_roots(spectrum, spectrum.level(n));
    const std::complex<double> next = z * a.back() / std::sqrt(q);
    a.push_back(next);
    sum_sq += std::norm(next);

    const double ratio_sq = (r * r) / q_from_roots(spectrum, spectrum.level(n + 1));
    if (ratio_sq < 1.0) {
      const double tail_bound = std::norm(next) * ratio_sq / (1.0 - ratio_sq);
      if (tail_bound < kTailTarget * sum_sq) break;
      if (static_cast<int>(a.size()) >= kHardCap) {
        if (tail_bound >= kTailBudget * sum_sq) {
          std::ostringstream os;
          os << "coherent_state: truncation tail still " << tail_bound / sum_sq << " at n_max = "
             << kHardCap;
          throw TruncationError(os.str());
        }
        break;
      }
    } else if (static_cast<int>(a.size()) >= kHardCap) {
      throw TruncationError("coherent_state: expansion not yet decaying at n_max = 4096");
    }
  }

  CoherentState cs;
  cs.z = z;
  cs.r = r;
  cs.state.b.assign(static_cast<std::size_t>(spectrum.k()), {0.0, 0.0});
  cs.state.c.resize(a.size());
  const double inv_norm = 1.0 / std::sqrt(sum_sq);
  for (std::size_t i = 0; i < a.size(); ++i) cs.state.c[i] = a[i] * inv_norm;

  // N(r) two ways: closed 0F_{2k} form against the direct coefficient sum.
  const double gamma_pref = gamma_prefactor(spectrum);
  const double f_den = hyper_0fq(normalization_denoms(spectrum), r * r).value;
  const double n_closed = gamma_pref / std::sqrt(f_den);
  const double n_direct = gamma_pref / std::sqrt(sum_sq);
  if (std::fabs(n_closed - n_direct) > 1e-10 * std::fabs(n_closed)) {
    std::ostringstream os;
    os << "coherent_state: normalization cross-check failed, closed = " << n_closed
       << " direct = " << n_direct;
    throw std::logic_error(os.str());
  }
  cs.normalization = n_closed;
  return cs;
}

double eigenvalue_residual(const SpectrumDescriptor& spectrum, const CoherentState& cs) {
  const StateVector lowered = ladder_action(spectrum, LadderDirection::down, cs.state);
  return (lowered - cs.state.scaled(cs.z)).norm();
}

double energy_expectation(const SpectrumDescriptor& spectrum, const StateVector& state) {
  if (state.b.size() != static_cast<std::size_t>(spectrum.k()))
    throw std::invalid_argument("energy_expectation: isolated block does not match spectrum");
  double e = 0.0;
  for (std::size_t j = 0; j < state.b.size(); ++j)
    e += spectrum.isolated[j] * std::norm(state.b[j]);
  for (std::size_t n = 0; n < state.c.size(); ++n)
    e += (static_cast<double>(n) + 0.5) * std::norm(state.c[n]);
  return e;
}

std::string coherent_to_json(const CoherentState& cs) {
  std::ostringstream os;
  os << "{\"z\":[" << format_g17(cs.z.real()) << "," << format_g17(cs.z.imag()) << "]"
     << ",\"r\":" << format_g17(cs.r) << ",\"normalization\":" << format_g17(cs.normalization)
     << ",\"state\":" << state_to_json(cs.state) << "}";
  return os.str();
}

}  // namespace susyloops
