#include "susyloops/susychain.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "susyloops/errors.hpp"

namespace susyloops {

std::vector<double> Grid::points() const {
  std::vector<double> xs(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) xs[static_cast<std::size_t>(i)] = x(i);
  return xs;
}

Grid default_grid() { return Grid{-12.0, 12.0, 2401}; }

SusyChain::SusyChain(std::vector<SeedSpec> seeds, Grid grid)
    : seeds_(std::move(seeds)), grid_(grid) {
  if (grid_.n_points < 3) throw std::invalid_argument("grid needs at least 3 points");
  if (grid_.x_max <= grid_.x_min) throw std::invalid_argument("grid requires x_max > x_min");
  if (seeds_.size() > 10) throw std::invalid_argument("chain order capped at 10");
  for (std::size_t i = 0; i < seeds_.size(); ++i) {
    if (seeds_[i].epsilon >= 0.5)
      throw std::invalid_argument("factorization energies must lie below 1/2");
    if (i > 0 && seeds_[i].epsilon >= seeds_[i - 1].epsilon)
      throw std::invalid_argument("factorization energies must be strictly decreasing");
  }
  for (std::size_t i = 0; i < seeds_.size(); ++i) {
    const bool want_small = (i % 2 == 0);  // |nu_1| < 1, |nu_2| > 1, ...
    const double an = std::fabs(seeds_[i].nu);
    if (want_small ? (an >= 1.0) : (an <= 1.0)) {
      std::ostringstream os;
      os << "seed " << (i + 1) << ": |nu| = " << an << " violates the "
         << (want_small ? "|nu| < 1" : "|nu| > 1") << " window; node scan enforced";
      warnings_.push_back(os.str());
    }
  }
}

namespace {

// Signed logarithmic value: v = sign * exp(log_abs), sign == 0 means v == 0.
struct SignedLog {
  int sign = 0;
  double log_abs = 0.0;

  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
};

SignedLog signed_log_add(const SignedLog& a, const SignedLog& b) {
  if (a.sign == 0) return b;
  if (b.sign == 0) return a;
  const SignedLog& big = (a.log_abs >= b.log_abs) ? a : b;
  const SignedLog& small = (a.log_abs >= b.log_abs) ? b : a;
  const double t = static_cast<double>(small.sign) * static_cast<double>(big.sign) *
                   std::exp(small.log_abs - big.log_abs);
  const double m = 1.0 + t;
  if (m == 0.0) return {0, 0.0};
  SignedLog r;
  r.sign = (m > 0.0) ? big.sign : -big.sign;
  r.log_abs = big.log_abs + std::log(std::fabs(m));
  return r;
}

// Determinant with per-row max-magnitude scaling and partial pivoting; the
// scaling keeps e^{x^2/2}-grown seed rows inside double range.
SignedLog det_scaled(std::vector<std::vector<double>> m) {
  const std::size_t k = m.size();
  SignedLog out{1, 0.0};
  for (std::size_t r = 0; r < k; ++r) {
    double mx = 0.0;
    for (double v : m[r]) mx = std::max(mx, std::fabs(v));
    if (mx == 0.0) return {0, 0.0};
    for (double& v : m[r]) v /= mx;
    out.log_abs += std::log(mx);
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < k; ++r)
      if (std::fabs(m[r][c]) > std::fabs(m[piv][c])) piv = r;
    if (m[piv][c] == 0.0) return {0, 0.0};
    if (piv != c) {
      std::swap(m[piv], m[c]);
      out.sign = -out.sign;
    }
    const double d = m[c][c];
    out.sign *= (d > 0.0) ? 1 : -1;
    out.log_abs += std::log(std::fabs(d));
    for (std::size_t r = c + 1; r < k; ++r) {
      const double f = m[r][c] / d;
      for (std::size_t cc = c + 1; cc < k; ++cc) m[r][cc] -= f * m[c][cc];
    }
  }
  return out;
}

// rows[m][j] = u_j^(m); selects the requested derivative orders.
SignedLog wronskian_minor(const std::vector<std::vector<double>>& rows,
                          const std::vector<int>& orders) {
  std::vector<std::vector<double>> m(orders.size());
  for (std::size_t r = 0; r < orders.size(); ++r)
    m[r] = rows[static_cast<std::size_t>(orders[r])];
  return det_scaled(std::move(m));
}

constexpr double kLogNodeFloor = -575.64627324851142;  // ln(1e-250)

}  // namespace

WronskianTable wronskian_table(const SusyChain& chain) {
  const int k = chain.order();
  const Grid& grid = chain.grid();
  const int n = grid.n_points;

  WronskianTable out;
  out.grid = grid;
  out.order = k;
  out.w.resize(static_cast<std::size_t>(n));
  out.w_prime.resize(static_cast<std::size_t>(n));
  out.w_second.resize(static_cast<std::size_t>(n));
  out.dlog.resize(static_cast<std::size_t>(n));
  out.ddlog.resize(static_cast<std::size_t>(n));

  if (k == 0) {
    std::fill(out.w.begin(), out.w.end(), 1.0);
    std::fill(out.w_prime.begin(), out.w_prime.end(), 0.0);
    std::fill(out.w_second.begin(), out.w_second.end(), 0.0);
    std::fill(out.dlog.begin(), out.dlog.end(), 0.0);
    std::fill(out.ddlog.begin(), out.ddlog.end(), 0.0);
    return out;
  }

  std::vector<int> base(static_cast<std::size_t>(k));      // 0..k-1
  for (int m = 0; m < k; ++m) base[static_cast<std::size_t>(m)] = m;
  std::vector<int> first = base;                            // 0..k-2, k
  first.back() = k;
  std::vector<int> second_b = base;                         // 0..k-2, k+1
  second_b.back() = k + 1;
  std::vector<int> second_a;                                // 0..k-3, k-1, k
  if (k >= 2) {
    second_a = base;
    second_a[static_cast<std::size_t>(k - 2)] = k - 1;
    second_a[static_cast<std::size_t>(k - 1)] = k;
  }

  int prev_sign = 0;
  for (int i = 0; i < n; ++i) {
    const double x = grid.x(i);
    // rows[m][j] = u_j^(m), m = 0..k+1
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(k + 2),
                                          std::vector<double>(static_cast<std::size_t>(k)));
    for (int j = 0; j < k; ++j) {
      const SeedEval e = eval_seed(chain.seeds()[static_cast<std::size_t>(j)], x, k + 1);
      for (int m = 0; m <= k + 1; ++m)
        rows[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] = e.deriv(m);
    }

    const SignedLog w = wronskian_minor(rows, base);
    const SignedLog wp = wronskian_minor(rows, first);
    SignedLog ws = wronskian_minor(rows, second_b);
    if (k >= 2) ws = signed_log_add(ws, wronskian_minor(rows, second_a));

    if (w.sign == 0 || w.log_abs < kLogNodeFloor) {
      std::ostringstream os;
      os << "wronskian_table: node (|W| below 1e-250) at x = " << x;
      throw NodeError(os.str(), x);
    }
    if (prev_sign != 0 && w.sign != prev_sign) {
      std::ostringstream os;
      os << "wronskian_table: W changes sign near x = " << x << " (singular transformation)";
      throw NodeError(os.str(), x);
    }
    prev_sign = w.sign;

    const std::size_t ui = static_cast<std::size_t>(i);
    out.w[ui] = w.value();
    out.w_prime[ui] = wp.value();
    out.w_second[ui] = ws.value();
    out.dlog[ui] = (wp.sign == 0) ? 0.0
                                  : wp.sign * w.sign * std::exp(wp.log_abs - w.log_abs);
    out.ddlog[ui] = (ws.sign == 0) ? 0.0
                                   : ws.sign * w.sign * std::exp(ws.log_abs - w.log_abs);
  }
  return out;
}

PotentialTable potential_wronskian(const SusyChain& chain) {
  const WronskianTable wt = wronskian_table(chain);
  PotentialTable out;
  out.grid = chain.grid();
  out.order = chain.order();
  out.v.resize(static_cast<std::size_t>(out.grid.n_points));
  for (int i = 0; i < out.grid.n_points; ++i) {
    const double x = out.grid.x(i);
    const std::size_t ui = static_cast<std::size_t>(i);
    out.v[ui] = 0.5 * x * x - (wt.ddlog[ui] - wt.dlog[ui] * wt.dlog[ui]);
  }
  return out;
}

RiccatiChain riccati_chain(const SusyChain& chain) {
  if (!chain.nu_window_ok()) {
    // Window violated: run the node scan before trusting the chain at all.
    (void)wronskian_table(chain);
  }
  const int k = chain.order();
  const Grid& grid = chain.grid();
  const int n = grid.n_points;

  RiccatiChain rc;
  rc.grid = grid;
  rc.order = k;
  rc.potentials.assign(static_cast<std::size_t>(k) + 1,
                       std::vector<double>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    const double x = grid.x(i);
    rc.potentials[0][static_cast<std::size_t>(i)] = 0.5 * x * x;
  }
  if (k == 0) return rc;

  // aux[j] = alpha_level(x, eps_{j+1}) for j = level-1 .. k-1 (0-based)
  std::vector<std::vector<double>> aux(static_cast<std::size_t>(k),
                                       std::vector<double>(static_cast<std::size_t>(n)));
  for (int j = 0; j < k; ++j) {
    const SeedSpec& s = chain.seeds()[static_cast<std::size_t>(j)];
    for (int i = 0; i < n; ++i) {
      const SeedEval e = eval_seed(s, grid.x(i), 1);
      if (e.u == 0.0) {
        std::ostringstream os;
        os << "riccati_chain: seed " << (j + 1) << " vanishes exactly at grid point x = "
           << grid.x(i);
        throw NodeError(os.str(), grid.x(i));
      }
      aux[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = e.derivatives[0] / e.u;
    }
  }

  rc.alphas.resize(static_cast<std::size_t>(k));
  for (int level = 1; level <= k; ++level) {
    const std::size_t li = static_cast<std::size_t>(level - 1);
    if (level > 1) {
      const double eps_prev = chain.seeds()[li - 1].epsilon;
      std::vector<std::vector<double>> next(static_cast<std::size_t>(k));
      for (int j = level - 1; j < k; ++j) {
        const double eps_j = chain.seeds()[static_cast<std::size_t>(j)].epsilon;
        next[static_cast<std::size_t>(j)].resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
          const std::size_t ui = static_cast<std::size_t>(i);
          const double a_prev = aux[li - 1][ui];
          const double a_j = aux[static_cast<std::size_t>(j)][ui];
          const double denom = a_prev - a_j;
          if (denom == 0.0) {
            std::ostringstream os;
            os << "riccati_chain: Baecklund denominator vanishes at x = " << grid.x(i)
               << " (levels " << (level - 1) << "/" << (j + 1) << "); singular chain";
            throw NodeError(os.str(), grid.x(i));
          }
          next[static_cast<std::size_t>(j)][ui] = -a_prev - 2.0 * (eps_prev - eps_j) / denom;
        }
      }
      aux = std::move(next);
    }
    rc.alphas[li] = aux[li];

    const double eps_i = chain.seeds()[li].epsilon;
    rc.potentials[li + 1].resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const std::size_t ui = static_cast<std::size_t>(i);
      const double a = rc.alphas[li][ui];
      const double ap = 2.0 * (rc.potentials[li][ui] - eps_i) - a * a;
      rc.potentials[li + 1][ui] = rc.potentials[li][ui] - ap;
    }
  }
  return rc;
}

PotentialTable potential_riccati(const RiccatiChain& rc) {
  PotentialTable out;
  out.grid = rc.grid;
  out.order = rc.order;
  out.v = rc.potentials.back();
  return out;
}

std::vector<double> grid_derivative(const std::vector<double>& f, double h) {
  const std::size_t n = f.size();
  std::vector<double> d(n, 0.0);
  if (n < 5) throw std::invalid_argument("grid_derivative: need at least 5 points");
  const double s = 1.0 / (12.0 * h);
  d[0] = s * (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]);
  d[1] = s * (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]);
  for (std::size_t i = 2; i + 2 < n; ++i)
    d[i] = s * (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]);
  d[n - 2] = -s * (-3.0 * f[n - 1] - 10.0 * f[n - 2] + 18.0 * f[n - 3] - 6.0 * f[n - 4] + f[n - 5]);
  d[n - 1] = -s * (-25.0 * f[n - 1] + 48.0 * f[n - 2] - 36.0 * f[n - 3] + 16.0 * f[n - 4] -
                   3.0 * f[n - 5]);
  return d;
}

std::vector<double> grid_second_derivative(const std::vector<double>& f, double h) {
  const std::size_t n = f.size();
  std::vector<double> d(n, 0.0);
  if (n < 5) throw std::invalid_argument("grid_second_derivative: need at least 5 points");
  const double s = 1.0 / (12.0 * h * h);
  const double s2 = 1.0 / (h * h);
  d[0] = s2 * (f[0] - 2.0 * f[1] + f[2]);
  d[1] = s2 * (f[0] - 2.0 * f[1] + f[2]);
  for (std::size_t i = 2; i + 2 < n; ++i)
    d[i] = s * (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]);
  d[n - 2] = s2 * (f[n - 3] - 2.0 * f[n - 2] + f[n - 1]);
  d[n - 1] = s2 * (f[n - 3] - 2.0 * f[n - 2] + f[n - 1]);
  return d;
}

std::vector<double> apply_intertwiner(const RiccatiChain& rc, const std::vector<double>& f) {
  if (f.size() != static_cast<std::size_t>(rc.grid.n_points))
    throw std::invalid_argument("apply_intertwiner: grid size mismatch");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<double> g = f;
  for (int level = 0; level < rc.order; ++level) {
    const std::vector<double> gp = grid_derivative(g, rc.grid.spacing());
    const std::vector<double>& a = rc.alphas[static_cast<std::size_t>(level)];
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = inv_sqrt2 * (-gp[i] + a[i] * g[i]);
  }
  return g;
}

std::vector<double> apply_schrodinger(const PotentialTable& pot, const std::vector<double>& f) {
  if (f.size() != pot.v.size())
    throw std::invalid_argument("apply_schrodinger: grid size mismatch");
  std::vector<double> out = grid_second_derivative(f, pot.grid.spacing());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = -0.5 * out[i] + pot.v[i] * f[i];
  return out;
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(const PotentialTable& pot, std::ostream& os) {
  os << "x,v\n";
  for (int i = 0; i < pot.grid.n_points; ++i)
    os << format_g17(pot.grid.x(i)) << "," << format_g17(pot.v[static_cast<std::size_t>(i)])
       << "\n";
}

}  // namespace susyloops
