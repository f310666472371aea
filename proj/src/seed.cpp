#include "susyloops/seed.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "susyloops/errors.hpp"
#include "susyloops/specfun.hpp"

namespace susyloops {

double seed_odd_coefficient(const SeedSpec& spec) {
  const double a1 = (1.0 - 2.0 * spec.epsilon) / 4.0;
  const double a2 = (3.0 - 2.0 * spec.epsilon) / 4.0;
  if (is_gamma_pole(a1)) return 0.0;  // Gamma(a1) pole sits in the denominator
  if (is_gamma_pole(a2)) {
    if (spec.nu == 0.0) return 0.0;
    std::ostringstream os;
    os << "seed: Gamma((3-2*eps)/4) has a pole at eps = " << spec.epsilon
       << " and nu != 0 leaves no cancellation";
    throw PoleError(os.str());
  }
  const LogGamma g2 = log_gamma(a2);
  const LogGamma g1 = log_gamma(a1);
  return 2.0 * spec.nu * g2.sign * g1.sign * std::exp(g2.log_abs - g1.log_abs);
}

SeedEval eval_seed(const SeedSpec& spec, double x, int max_deriv) {
  if (max_deriv < 1 || max_deriv > 12)
    throw std::invalid_argument("eval_seed: max_deriv must lie in [1, 12]");

  const double a1 = (1.0 - 2.0 * spec.epsilon) / 4.0;
  const double a2 = (3.0 - 2.0 * spec.epsilon) / 4.0;
  const double c = seed_odd_coefficient(spec);
  const double y = x * x;
  const double gauss = std::exp(-0.5 * y);

  const double f1 = kummer_1f1(a1, 0.5, y).value;
  const double f2 = (c == 0.0) ? 0.0 : kummer_1f1(a2, 1.5, y).value;

  // g = f1 + c x f2;  g' = 2x f1'(y) + c f2 + 2 c x^2 f2'(y)
  const double f1p = kummer_1f1_dy(a1, 0.5, y).value;
  const double f2p = (c == 0.0) ? 0.0 : kummer_1f1_dy(a2, 1.5, y).value;
  const double g = f1 + c * x * f2;
  const double gp = 2.0 * x * f1p + c * f2 + 2.0 * c * y * f2p;

  SeedEval out;
  out.x = x;
  out.u = gauss * g;
  out.derivatives.resize(static_cast<std::size_t>(max_deriv));
  out.derivatives[0] = gauss * (gp - x * g);

  // u^(d+2) = 2 [ (x^2/2 - eps) u^(d) + d x u^(d-1) + d(d-1)/2 u^(d-2) ]
  const double v0e = 0.5 * y - spec.epsilon;
  for (int d = 0; d + 2 <= max_deriv; ++d) {
    double next = v0e * out.deriv(d);
    if (d >= 1) next += static_cast<double>(d) * x * out.deriv(d - 1);
    if (d >= 2) next += 0.5 * static_cast<double>(d) * static_cast<double>(d - 1) * out.deriv(d - 2);
    out.derivatives[static_cast<std::size_t>(d + 1)] = 2.0 * next;
  }
  return out;
}

double alpha1(const SeedSpec& spec, double x) {
  const SeedEval e = eval_seed(spec, x, 1);
  if (std::fabs(e.u) < 1e-280) {
    std::ostringstream os;
    os << "alpha1: seed solution vanishes at x = " << x;
    throw NodeError(os.str(), x);
  }
  return e.derivatives[0] / e.u;
}

}  // namespace susyloops
