#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "painlab/errors.hpp"

namespace painlab::radial {

// Units hbar = 2m = 1 throughout:  u'' + [E - V(r) - l(l+1)/r^2] u = 0.

/// -V0 exp(-2ar) / r.
struct Yukawa {
  double V0;
  double a;
};
/// The approximated Yukawa with r read as z:
/// -V0 |beta| exp(-8 lambda r) / (1 - exp(-8 lambda r)), |beta| = 4 sqrt(lambda^2 + 1).
struct HulthenApprox {
  double V0;
  double lambda;
};
/// Variant carrying the extra exp(-4 lambda r) factor.
struct HulthenConsistent {
  double V0;
  double lambda;
};
/// -V0 / r.
struct Coulomb {
  double V0;
};
/// Plain Hulthen -W exp(-delta r) / (1 - exp(-delta r)) with explicit strength.
struct Hulthen {
  double W;
  double delta;
};

using Potential = std::variant<Yukawa, HulthenApprox, HulthenConsistent, Coulomb, Hulthen>;

enum class Centrifugal { exact, greene_aldrich };

struct RadialSpec {
  Potential potential;
  int l = 0;
  Centrifugal centrifugal = Centrifugal::exact;
};

enum class Method { numerov, fd_matrix, analytic_hulthen, analytic_coulomb };
std::string to_string(Method m);

struct EigenResult {
  int n_radial = 0;
  int l = 0;
  double energy = 0.0;
  Method method = Method::numerov;
  int nodes = 0;
  std::string grid_meta;
};

/// Uniform grid r_i = i h, h = r_max / n, with u(0) = u(r_max) = 0.
/// With check_refinement the solve is repeated on 2n points and
/// GridTooCoarse is thrown if the energy moves by more than
/// refine_tol * max(1, |E|).
struct RadialGrid {
  double r_max = 80.0;
  int n = 40000;
  bool check_refinement = true;
  double refine_tol = 1e-6;
};

std::string potential_name(const Potential& p);
void validate(const RadialSpec& spec);

double potential_value(const Potential& p, double r);

/// lim_{r->0} -r V(r).
double coulomb_strength(const Potential& p);

/// Screening parameter a used by the Greene-Aldrich centrifugal term:
/// a for Yukawa, 4 lambda for the approximated forms, delta / 2 for plain
/// Hulthen; none for Coulomb.
std::optional<double> screening(const Potential& p);

/// l(l+1)/r^2 or l(l+1) a^2 / sinh^2(ar).
double centrifugal_term(const RadialSpec& spec, double r);

/// Lower end of the energy bracket: -10 W_c^2 with W_c the Coulomb strength.
double energy_floor(const RadialSpec& spec);

/// Default grid: r_max = 40 / min(a, sqrt|E_est|) with the hydrogenic
/// estimate E_est = -W_c^2 / (4 n^2), capped at 2000, and h ~ 2e-3 / W_c
/// (at most 2e6 intervals).
RadialGrid default_grid(const RadialSpec& spec, int n_target);

/// Numerov shooting from u(0) = 0, u(h) = h^{l+1}; the eigenvalue with
/// exactly n_target interior nodes is bracketed by node counting.
EigenResult solve_numerov(const RadialSpec& spec, int n_target, const RadialGrid& grid);

/// Number of interior nodes of the Numerov solution at energy E.
int numerov_nodes(const RadialSpec& spec, double energy, const RadialGrid& grid);

/// Three-point finite differences; the k lowest negative eigenvalues by
/// Sturm-sequence bisection. Only bound levels (E < 0) are returned.
/// With check_refinement the reported energies are Richardson-extrapolated
/// from n and 2n points.
std::vector<EigenResult> solve_fd_matrix(const RadialSpec& spec, int k, const RadialGrid& grid);

/// E_n = -((W - n^2 delta^2) / (2 n delta))^2, bound iff W > n^2 delta^2.
double hulthen_analytic_s(double W, double delta, int n);

/// E_n = -V0^2 / (4 n^2).
double coulomb_analytic(double V0, int n);

struct Level {
  int n_radial;
  int l;
};

struct ComparisonRow {
  int n_radial;
  int l;
  std::optional<double> energy_a;
  std::optional<double> energy_b;
  std::optional<double> abs_diff;
  std::optional<double> rel_diff;  // relative to |energy_a|
};

/// Bound energies of two potentials at the requested levels, ordered by
/// (l, n_radial). Rows whose level is unbound on either side carry no diff.
std::vector<ComparisonRow> compare_spectra(const Potential& a, const Potential& b,
                                           std::vector<Level> levels, const RadialGrid& grid,
                                           Centrifugal centrifugal = Centrifugal::exact);

}  // namespace painlab::radial
