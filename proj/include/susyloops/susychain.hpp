#ifndef SUSYLOOPS_SUSYCHAIN_HPP_
#define SUSYLOOPS_SUSYCHAIN_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "susyloops/seed.hpp"

namespace susyloops {

/// Uniform evaluation grid.
struct Grid {
  double x_min = -12.0;
  double x_max = 12.0;
  int n_points = 2401;

  double spacing() const { return (x_max - x_min) / (n_points - 1); }
  double x(int i) const { return x_min + spacing() * i; }
  std::vector<double> points() const;
};

Grid default_grid();

/// Ordered list of seeds defining a k-th order SUSY transformation of the
/// oscillator, eps_1 > eps_2 > ... > eps_k, all below 1/2.
///
/// The alternating nu windows |nu_1| < 1, |nu_2| > 1, |nu_3| < 1, ... are
/// checked at construction; a violation is recorded as a warning, not an
/// error, and forces a Wronskian node scan before any potential is built.
class SusyChain {
 public:
  SusyChain(std::vector<SeedSpec> seeds, Grid grid);

  int order() const { return static_cast<int>(seeds_.size()); }
  const std::vector<SeedSpec>& seeds() const { return seeds_; }
  const Grid& grid() const { return grid_; }
  bool nu_window_ok() const { return warnings_.empty(); }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  std::vector<SeedSpec> seeds_;
  Grid grid_;
  std::vector<std::string> warnings_;
};

/// Tabulated partner potential V_k.
struct PotentialTable {
  Grid grid;
  std::vector<double> v;
  int order = 0;
};

/// Wronskian of the seed solutions with its first two derivatives, evaluated
/// from closed-form seed derivatives only.  Raw values can overflow double
/// for wide grids; the ratio columns are always finite for nodeless chains
/// and are what the potential formula consumes.
struct WronskianTable {
  Grid grid;
  int order = 0;
  std::vector<double> w;        // W
  std::vector<double> w_prime;  // W'
  std::vector<double> w_second; // W''
  std::vector<double> dlog;     // W'/W
  std::vector<double> ddlog;    // W''/W
};

/// Tabulated solutions alpha_i(x, eps_i) of the Riccati chain, with the
/// intermediate potentials V_0..V_k.
struct RiccatiChain {
  Grid grid;
  int order = 0;
  std::vector<std::vector<double>> alphas;      // alphas[i-1] = alpha_i on grid
  std::vector<std::vector<double>> potentials;  // potentials[i] = V_i on grid
};

/// W = det[u_j^(m)], m = 0..k-1; W' raises the last row's derivative order by
/// one; W'' differentiates once more (a sum of two determinants).  Throws
/// NodeError when W changes sign or |W| < 1e-250 anywhere on the grid.
WronskianTable wronskian_table(const SusyChain& chain);

/// V_k = x^2/2 - { W''/W - (W'/W)^2 }.
PotentialTable potential_wronskian(const SusyChain& chain);

/// Iterated finite-difference Baecklund construction:
///   alpha_i(x, eps_j) = -alpha_{i-1}(x, eps_{i-1})
///                       - 2 (eps_{i-1} - eps_j) / [alpha_{i-1}(x, eps_{i-1})
///                                                  - alpha_{i-1}(x, eps_j)],
/// with alpha_i' = 2 (V_{i-1} - eps_i) - alpha_i^2 and V_i = V_{i-1} - alpha_i'.
/// No numerical differentiation anywhere.
RiccatiChain riccati_chain(const SusyChain& chain);

/// V_k read off a RiccatiChain.
PotentialTable potential_riccati(const RiccatiChain& rc);

/// B_k^+ f = A_k^+ ... A_1^+ f with A_i^+ = (1/sqrt 2)(-d/dx + alpha_i);
/// derivatives by 4th-order finite differences.
std::vector<double> apply_intertwiner(const RiccatiChain& rc, const std::vector<double>& f);

/// 4th-order first derivative on a uniform grid (one-sided at the ends).
std::vector<double> grid_derivative(const std::vector<double>& f, double h);

/// 4th-order second derivative in the interior, 2nd-order at the ends.
std::vector<double> grid_second_derivative(const std::vector<double>& f, double h);

/// (-1/2 d^2/dx^2 + V) f on the grid.
std::vector<double> apply_schrodinger(const PotentialTable& pot, const std::vector<double>& f);

/// CSV serialization: header "x,v", one row per grid point, 17 significant digits.
void write_csv(const PotentialTable& pot, std::ostream& os);

/// 17-significant-digit decimal rendering used by every emitted artifact.
std::string format_g17(double v);

}  // namespace susyloops

#endif  // SUSYLOOPS_SUSYCHAIN_HPP_
