#pragma once

#include <span>
#include <vector>

#include "painlab/lax.hpp"

namespace painlab::pii {

using lax::SpectralParams;

struct PIIState {
  cplx z;
  cplx f;
  cplx fp;
};

/// Straight ray z(s) = z0 + s * direction, s in [0, length].
///
/// steps > 0 selects classical RK4 with that many equal steps; otherwise the
/// embedded Dormand-Prince 5(4) pair runs with abs = rel tolerance.
struct RaySpec {
  cplx z0{};
  cplx direction{1.0, 0.0};
  double length = 1.0;
  int steps = 0;
  double tolerance = 1e-10;
};

using Trajectory = std::vector<PIIState>;

/// Magnitude guard on |f|; exceeding it is reported as a movable pole.
inline constexpr double kOverflowGuard = 1e8;

struct Derivative {
  cplx df;
  cplx dfp;
};

/// (f', 2f^3 - 4zf - 2i hbar f + c).
Derivative pii_rhs(const PIIState& s, const SpectralParams& sp);

/// Integrates along the ray starting from (ray.z0, initial.f, initial.fp).
/// initial.z is ignored; the ray fixes the start point.
/// The returned trajectory contains both endpoints.
/// Throws BlowUp with the last good z if |f| passes kOverflowGuard or the
/// adaptive step collapses below 1e-12 of the ray length.
Trajectory integrate(const PIIState& initial, const RaySpec& ray, const SpectralParams& sp);

/// Central-difference f'' minus the right-hand side at every interior sample.
/// Samples must be uniformly spaced in z (fixed-step output).
std::vector<cplx> trajectory_residual(const Trajectory& traj, const SpectralParams& sp);

double max_abs(std::span<const cplx> values);

}  // namespace painlab::pii
