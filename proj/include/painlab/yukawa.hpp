#pragma once

#include <optional>
#include <span>
#include <vector>

#include "painlab/errors.hpp"

namespace painlab::yukawa {

/// Fine-structure constant as used for V0 = Z alpha.
inline constexpr double kFineStructure = 1.0 / 137.037;

struct YukawaParams {
  double V0 = 1.0;
  double a = 0.1;
  std::optional<int> Z;

  /// V0 = Z / 137.037.
  static YukawaParams from_Z(int Z, double a);
  void validate() const;
};

/// 4a^2 exp(-2ar) / (1 - exp(-2ar))^2 = a^2 / sinh^2(ar).
double centrifugal_approx(double r, double a);

/// |centrifugal_approx - 1/r^2| r^2; behaves like (ar)^2 / 3 for small ar.
double centrifugal_rel_error(double r, double a);

/// Positive root of centrifugal_approx: 2a exp(-ar) / (1 - exp(-2ar)).
double inv_r_approx(double r, double a);

/// -V0 exp(-2ar) / r.
double yukawa_exact(double r, const YukawaParams& p);

/// 4 sqrt(lambda^2 + 1).
double beta_abs(double lambda);

/// -V0 |beta| exp(-8 lambda z) / (1 - exp(-8 lambda z)).
double yukawa_approx_z(double z, double lambda, double V0);

/// -V0 exp(-8 lambda z) |f(z)| with |f| = |beta| exp(-4 lambda z) / |1 - exp(-8 lambda z)|.
/// Differs from yukawa_approx_z by the factor exp(-4 lambda z).
double yukawa_approx_consistent(double z, double lambda, double V0);

/// The three beta constraints side by side.
struct MapReport {
  double lambda = 0.0;
  double a_from_lambda = 0.0;   // 4 lambda
  double beta_sq_map = 0.0;     // 4 a^2 = 64 lambda^2
  double beta_abs_paper = 0.0;  // 4 sqrt(lambda^2 + 1)
  cplx beta_riccati;            // -4 (lambda + i)
  bool consistent = false;      // beta_sq_map == beta_abs_paper^2 within 1e-12

  /// beta_sq_map - beta_abs_paper^2 = 48 lambda^2 - 16.
  double gap() const { return beta_sq_map - beta_abs_paper * beta_abs_paper; }
};

MapReport parameter_map(double lambda);

/// Root of MapReport::gap in [lo, hi] by bisection, to absolute width tol.
double find_consistent_lambda(double lo = 1e-3, double hi = 10.0, double tol = 1e-14);

struct ErrorRow {
  double r;
  double v_exact;
  double v_approx;             // yukawa_approx_z
  double v_approx_consistent;  // yukawa_approx_consistent
  double abs_err;              // |v_approx - v_exact|
  double rel_err;              // abs_err / |v_exact|
};

/// Tabulates exact vs approximated potentials with r and z identified.
/// Throws EmptyGrid for an empty grid, InvalidArgument for non-positive or
/// non-ascending radii.
std::vector<ErrorRow> error_profile(std::span<const double> r_grid, const YukawaParams& p,
                                    double lambda);

}  // namespace painlab::yukawa
