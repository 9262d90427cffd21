#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "painlab/painleve2.hpp"
#include "painlab/riccati.hpp"

namespace painlab::schrodinger {

/// Orientation of the time derivative in the non-stationary equation.
///
///   printed:  -i hbar psi_t = H psi
///   standard:  i hbar psi_t = H psi
///
/// Substituting psi = f(z) exp(i alpha t), z = i kappa x, into either one
/// gives f'' = 2f^3 - 4zf - s alpha hbar f with s = -1 (printed) or
/// s = +1 (standard). Matching the -2i hbar f term of the quantum
/// Painleve II equation therefore needs alpha = -2i (printed) or
/// alpha = 2i (standard).
enum class TimeConvention { printed, standard };

/// +1 for standard, -1 for printed: the sign of i hbar psi_t.
int time_sign(TimeConvention c);

/// The s in f'' = 2f^3 - 4zf - s alpha hbar f obtained by substitution.
int derived_alpha_sign(TimeConvention c);

/// alpha that turns the reduced equation into quantum Painleve II (c = 0).
cplx matched_alpha(TimeConvention c);

/// Defaults m = 1/2, hbar = 1 give kappa = 1 and z = i x.
struct PhysicalParams {
  double mass = 0.5;
  double hbar = 1.0;
  cplx alpha{0.0, -2.0};
  cplx lambda{1.0, 0.0};
  TimeConvention convention = TimeConvention::printed;
};

/// sqrt(2m / hbar^2).
double kappa(const PhysicalParams& p);

/// z = i kappa x.
cplx x_to_z(double x, const PhysicalParams& p);

struct GridSpec {
  double x_min = -1.0;
  double x_max = 1.0;
  int n = 201;

  double dx() const { return (x_max - x_min) / (n - 1); }
  double x(int i) const { return i + 1 == n ? x_max : x_min + i * dx(); }
  void validate() const;
};

struct WaveField {
  GridSpec grid;
  double t = 0.0;
  std::vector<cplx> values;
};

/// f(z(x_i)) sampled on a grid.
struct FieldProfile {
  GridSpec grid;
  std::vector<cplx> f;
};

/// Pointwise source of f as a function of x.
using FSource = std::function<cplx(double x)>;

/// 4z - 2f^2.
cplx potential_V(cplx z, cplx f);

/// 4z - 2f^2 with f from the closed form at beta = beta_for(lambda).
cplx potential_V(cplx z, cplx lambda, riccati::PoleGuard guard);

/// Throws InvalidArgument if a pole of the closed form (real lambda only)
/// lies in [x_min - 10 dx, x_max + 10 dx].
void check_pole_free(const GridSpec& grid, const PhysicalParams& p);

/// Closed-form f on the grid; applies check_pole_free.
FieldProfile closed_form_profile(const GridSpec& grid, const PhysicalParams& p, cplx beta,
                                 riccati::PoleGuard guard = {});

/// Quantum Painleve II solution (c = 0, hbar = p.hbar) along z = i kappa x,
/// integrated by RK4 from x_min with `substeps` steps per grid cell.
/// f0 and fp0 are f and df/dz at z(x_min).
FieldProfile qpii_profile(const GridSpec& grid, const PhysicalParams& p, cplx f0, cplx fp0,
                          int substeps = 8);

FSource closed_form_source(const PhysicalParams& p, cplx beta, riccati::PoleGuard guard = {});

/// Looks up profile samples; x must coincide with a grid node.
FSource profile_source(const FieldProfile& profile);

/// f(z(x)) exp(i alpha t).
cplx ansatz_psi(double x, double t, const PhysicalParams& p, const FSource& f);

WaveField ansatz_field(const FieldProfile& profile, double t, const PhysicalParams& p);

/// 4z(x_i) - 2 f_i^2 on the profile grid.
std::vector<cplx> sample_potential(const FieldProfile& profile, const PhysicalParams& p);

/// f'' - (2f^3 - 4zf - s alpha hbar f) at interior samples of a uniformly
/// spaced trajectory. When `sign` is empty the derived sign for the
/// convention is used.
std::vector<cplx> reduction_residual(const pii::Trajectory& traj, cplx alpha, double hbar,
                                     TimeConvention convention = TimeConvention::printed,
                                     std::optional<int> sign = std::nullopt);

/// Residual sigma i hbar psi_t - H psi at interior nodes by central
/// differences; boundary nodes are zero. Fields must share the grid and be
/// equally spaced in time.
WaveField pde_residual_fd(const WaveField& before, const WaveField& now, const WaveField& after,
                          std::span<const cplx> potential, const PhysicalParams& p);

/// Dirichlet boundary values; empty functions mean psi = 0.
struct Boundary {
  std::function<cplx(double t)> left;
  std::function<cplx(double t)> right;
};

/// Crank-Nicolson steps of sigma i hbar psi_t = H psi with
/// H = -(hbar^2 / 2m) D2 + V, D2 the 3-point Laplacian:
///   (I + sigma i dt/(2 hbar) H) psi_{k+1} = (I - sigma i dt/(2 hbar) H) psi_k.
WaveField propagate_cn(const WaveField& initial, std::span<const cplx> potential, double dt,
                       int steps, const PhysicalParams& p, const Boundary& boundary = {});

/// sqrt(sum |psi|^2 dx).
double l2_norm(const WaveField& w);

/// ||a - b|| / ||b|| on a shared grid.
double relative_l2(const WaveField& a, const WaveField& b);

}  // namespace painlab::schrodinger
