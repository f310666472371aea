#include "susyloops/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace susyloops {

SpectrumDescriptor SpectrumDescriptor::from_chain(const SusyChain& chain) {
  std::vector<double> eps;
  eps.reserve(chain.seeds().size());
  // chain stores eps_1 > ... > eps_k; the descriptor lists them increasing
  for (auto it = chain.seeds().rbegin(); it != chain.seeds().rend(); ++it)
    eps.push_back(it->epsilon);
  return from_isolated(std::move(eps));
}

SpectrumDescriptor SpectrumDescriptor::from_isolated(std::vector<double> eps_increasing) {
  for (std::size_t i = 0; i < eps_increasing.size(); ++i) {
    if (eps_increasing[i] >= 0.5)
      throw std::invalid_argument("isolated levels must lie below the ladder base 1/2");
    if (i > 0 && eps_increasing[i] <= eps_increasing[i - 1])
      throw std::invalid_argument("isolated levels must be strictly increasing");
  }
  return SpectrumDescriptor{std::move(eps_increasing)};
}

namespace {

// (x - root) * poly, coefficients lowest degree first.
template <typename T>
std::vector<T> multiply_by_root(const std::vector<T>& poly, const T& root) {
  std::vector<T> out(poly.size() + 1, T{});
  for (std::size_t i = 0; i < poly.size(); ++i) {
    out[i + 1] = out[i + 1] + poly[i];
    out[i] = out[i] - root * poly[i];
  }
  return out;
}

std::vector<std::vector<long long>> binomial_table(std::size_t deg) {
  std::vector<std::vector<long long>> binom(deg + 1);
  for (std::size_t n = 0; n <= deg; ++n) {
    binom[n].assign(n + 1, 1);
    for (std::size_t r = 1; r < n; ++r) binom[n][r] = binom[n - 1][r - 1] + binom[n - 1][r];
  }
  return binom;
}

// p(x) = q(x+1) - q(x) by binomial expansion of each power of q.
template <typename T, typename FromInt>
std::vector<T> shifted_difference(const std::vector<T>& q, FromInt from_int) {
  if (q.size() <= 1) return {T{}};
  const std::size_t deg = q.size() - 1;
  const auto binom = binomial_table(deg);
  std::vector<T> p(q.size() - 1, T{});
  for (std::size_t n = 1; n <= deg; ++n)
    for (std::size_t r = 0; r < n; ++r) p[r] = p[r] + q[n] * from_int(binom[n][r]);
  return p;
}

double horner(const std::vector<double>& coeffs, double x) {
  double v = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
  return v;
}

}  // namespace

double LadderPolynomials::eval_q(double e) const { return horner(q, e); }
double LadderPolynomials::eval_p(double e) const { return horner(p, e); }

LadderPolynomials build_polynomials(const SpectrumDescriptor& spectrum) {
  std::vector<double> q{1.0};
  q = multiply_by_root(q, 0.5);
  for (double eps : spectrum.isolated) {
    q = multiply_by_root(q, eps + 1.0);
    q = multiply_by_root(q, eps);
  }
  LadderPolynomials out;
  out.q = q;
  out.p = shifted_difference(q, [](long long v) { return static_cast<double>(v); });
  return out;
}

RationalLadderPolynomials build_polynomials_rational(const std::vector<Rational>& lm_pairs) {
  std::vector<Rational> q{Rational(1, 1)};
  q = multiply_by_root(q, Rational(1, 2));
  for (const Rational& lm : lm_pairs) {
    const Rational eps = Rational(1, 2) - lm;  // eps = 1/2 - l/m
    q = multiply_by_root(q, eps + Rational(1, 1));
    q = multiply_by_root(q, eps);
  }
  RationalLadderPolynomials out;
  out.q = q;
  out.p = shifted_difference(q, [](long long v) { return Rational(v, 1); });
  return out;
}

double q_from_roots(const SpectrumDescriptor& spectrum, double energy) {
  double v = energy - 0.5;
  for (double eps : spectrum.isolated) v *= (energy - eps - 1.0) * (energy - eps);
  return v;
}

StateVector ladder_action(const SpectrumDescriptor& spectrum, LadderDirection direction,
                          const StateVector& state) {
  if (state.b.size() != static_cast<std::size_t>(spectrum.k()))
    throw std::invalid_argument("ladder_action: isolated block does not match spectrum");

  StateVector out;
  out.b.assign(state.b.size(), {0.0, 0.0});  // one-step ladders: annihilated both ways
  out.c.assign(state.c.size(), {0.0, 0.0});

  const int n_top = static_cast<int>(state.c.size());
  if (direction == LadderDirection::down) {
    // (L^- psi)_{n-1} = sqrt(q(E_n)) c_n; q(E_0) = 0 kills the ladder base
    for (int n = 1; n < n_top; ++n) {
      const double q = q_from_roots(spectrum, spectrum.level(n));
      out.c[static_cast<std::size_t>(n - 1)] =
          std::sqrt(q) * state.c[static_cast<std::size_t>(n)];
    }
  } else {
    for (int n = 0; n + 1 < n_top; ++n) {
      const double q = q_from_roots(spectrum, spectrum.level(n) + 1.0);
      out.c[static_cast<std::size_t>(n + 1)] =
          std::sqrt(q) * state.c[static_cast<std::size_t>(n)];
    }
  }
  return out;
}

std::string polynomials_to_json(const LadderPolynomials& polys) {
  auto emit = [](std::ostringstream& os, const std::vector<double>& v) {
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) os << ",";
      os << format_g17(v[i]);
    }
    os << "]";
  };
  std::ostringstream os;
  os << "{\"q\":";
  emit(os, polys.q);
  os << ",\"p\":";
  emit(os, polys.p);
  os << "}";
  return os.str();
}

std::string polynomials_to_json(const RationalLadderPolynomials& polys) {
  auto emit = [](std::ostringstream& os, const std::vector<Rational>& v) {
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) os << ",";
      os << "[" << v[i].num << "," << v[i].den << "]";
    }
    os << "]";
  };
  std::ostringstream os;
  os << "{\"q\":";
  emit(os, polys.q);
  os << ",\"p\":";
  emit(os, polys.p);
  os << "}";
  return os.str();
}

}  // namespace susyloops
