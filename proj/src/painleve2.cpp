#include "painlab/painleve2.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace painlab::pii {

namespace {

// The system is integrated in the real ray parameter s; dz = direction * ds.
struct Vec2 {
  cplx f;
  cplx fp;
  Vec2 operator+(const Vec2& o) const { return {f + o.f, fp + o.fp}; }
  Vec2 operator*(double s) const { return {f * s, fp * s}; }
};

Vec2 ray_rhs(double s, const Vec2& y, const RaySpec& ray, const SpectralParams& sp) {
  const cplx z = ray.z0 + s * ray.direction;
  const Derivative d = pii_rhs({z, y.f, y.fp}, sp);
  return {ray.direction * d.df, ray.direction * d.dfp};
}

bool finite(cplx x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); }

bool blown_up(const Vec2& y) {
  return !finite(y.f) || !finite(y.fp) || std::abs(y.f) > kOverflowGuard;
}

void validate(const RaySpec& ray) {
  if (!(ray.length > 0.0) || !std::isfinite(ray.length))
    throw InvalidArgument("ray length must be positive");
  if (std::abs(std::abs(ray.direction) - 1.0) > 1e-12)
    throw InvalidArgument("ray direction must have unit modulus");
  if (!finite(ray.z0)) throw InvalidArgument("ray start must be finite");
  if (ray.steps <= 0 && !(ray.tolerance > 0.0))
    throw InvalidArgument("need steps > 0 or a positive tolerance");
}

Trajectory integrate_fixed(Vec2 y, const RaySpec& ray, const SpectralParams& sp) {
  const double h = ray.length / ray.steps;
  Trajectory out;
  out.reserve(static_cast<std::size_t>(ray.steps) + 1);
  out.push_back({ray.z0, y.f, y.fp});
  for (int i = 0; i < ray.steps; ++i) {
    const double s = i * h;
    const Vec2 k1 = ray_rhs(s, y, ray, sp);
    const Vec2 k2 = ray_rhs(s + 0.5 * h, y + k1 * (0.5 * h), ray, sp);
    const Vec2 k3 = ray_rhs(s + 0.5 * h, y + k2 * (0.5 * h), ray, sp);
    const Vec2 k4 = ray_rhs(s + h, y + k3 * h, ray, sp);
    const Vec2 next = y + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
    if (blown_up(next)) throw BlowUp(out.back().z);
    y = next;
    const double s_next = (i + 1 == ray.steps) ? ray.length : (i + 1) * h;
    out.push_back({ray.z0 + s_next * ray.direction, y.f, y.fp});
  }
  return out;
}

// Dormand-Prince 5(4) tableau.
constexpr std::array<double, 7> kC{0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
constexpr std::array<double, 7> kE{71.0 / 57600,      0.0,           -71.0 / 16695, 71.0 / 1920,
                                   -17253.0 / 339200, 22.0 / 525,    -1.0 / 40};

Trajectory integrate_adaptive(Vec2 y, const RaySpec& ray, const SpectralParams& sp) {
  const double tol = ray.tolerance;
  const double h_min = 1e-12 * ray.length;
  constexpr double kSafety = 0.9;
  constexpr double kBeta = 0.04;
  constexpr double kExpo = 0.2 - 0.75 * kBeta;

  Trajectory out;
  out.push_back({ray.z0, y.f, y.fp});
  double s = 0.0;
  double h = std::min(ray.length, 1e-2 * ray.length + 1e-3);
  double err_old = 1e-4;
  std::array<Vec2, 7> k;
  k[0] = ray_rhs(s, y, ray, sp);

  while (s < ray.length) {
    bool last = false;
    if (s + h >= ray.length) {
      h = ray.length - s;
      last = true;
    }
    for (int stage = 1; stage < 7; ++stage) {
      Vec2 acc = y;
      for (int j = 0; j < stage; ++j)
        if (kA[stage][j] != 0.0) acc = acc + k[static_cast<std::size_t>(j)] * (h * kA[stage][j]);
      // Stage 7 lands on the 5th-order solution and is reused as k[0] (FSAL).
      k[static_cast<std::size_t>(stage)] =
          ray_rhs(s + kC[static_cast<std::size_t>(stage)] * h, acc, ray, sp);
    }
    Vec2 y_new = y;
    for (int j = 0; j < 6; ++j)
      if (kA[6][j] != 0.0) y_new = y_new + k[static_cast<std::size_t>(j)] * (h * kA[6][j]);
    Vec2 err_vec{};
    for (int j = 0; j < 7; ++j)
      if (kE[static_cast<std::size_t>(j)] != 0.0)
        err_vec = err_vec + k[static_cast<std::size_t>(j)] * (h * kE[static_cast<std::size_t>(j)]);

    const double sc_f = tol + tol * std::max(std::abs(y.f), std::abs(y_new.f));
    const double sc_fp = tol + tol * std::max(std::abs(y.fp), std::abs(y_new.fp));
    double err = std::sqrt(0.5 * (std::norm(err_vec.f) / (sc_f * sc_f) +
                                  std::norm(err_vec.fp) / (sc_fp * sc_fp)));
    if (!std::isfinite(err)) err = 1e10;

    const double fac11 = std::pow(std::max(err, 1e-300), kExpo);
    if (err <= 1.0 && !blown_up(y_new)) {
      s = last ? ray.length : s + h;
      y = y_new;
      k[0] = k[6];
      out.push_back({ray.z0 + s * ray.direction, y.f, y.fp});
      double fac = fac11 / std::pow(err_old, kBeta) / kSafety;
      fac = std::clamp(fac, 1.0 / 10.0, 5.0);
      err_old = std::max(err, 1e-4);
      h = h / fac;
    } else {
      if (blown_up(y_new) && err <= 1.0) throw BlowUp(out.back().z);
      h = h / std::min(5.0, fac11 / kSafety);
    }
    if (s < ray.length && h < h_min) throw BlowUp(out.back().z);
  }
  return out;
}

}  // namespace

Derivative pii_rhs(const PIIState& s, const SpectralParams& sp) {
  // Unchecked on purpose: overflow inside an RK stage must surface as BlowUp.
  constexpr cplx i{0.0, 1.0};
  return {s.fp, 2.0 * s.f * s.f * s.f - 4.0 * s.z * s.f - 2.0 * i * sp.hbar * s.f + sp.c};
}

Trajectory integrate(const PIIState& initial, const RaySpec& ray, const SpectralParams& sp) {
  validate(ray);
  if (!finite(initial.f) || !finite(initial.fp)) throw InvalidArgument("non-finite initial data");
  const Vec2 y0{initial.f, initial.fp};
  if (ray.steps > 0) return integrate_fixed(y0, ray, sp);
  return integrate_adaptive(y0, ray, sp);
}

std::vector<cplx> trajectory_residual(const Trajectory& traj, const SpectralParams& sp) {
  if (traj.size() < 5) throw TooFewSamples(traj.size(), 5);
  const cplx dz = traj[1].z - traj[0].z;
  for (std::size_t i = 1; i + 1 < traj.size(); ++i) {
    if (std::abs((traj[i + 1].z - traj[i].z) - dz) > 1e-9 * std::abs(dz))
      throw GridMismatch("trajectory samples are not uniformly spaced");
  }
  std::vector<cplx> res;
  res.reserve(traj.size() - 2);
  for (std::size_t i = 1; i + 1 < traj.size(); ++i) {
    const cplx fpp = (traj[i + 1].f - 2.0 * traj[i].f + traj[i - 1].f) / (dz * dz);
    res.push_back(fpp - lax::qpii_rhs(traj[i].z, traj[i].f, sp));
  }
  return res;
}

double max_abs(std::span<const cplx> values) {
  double m = 0.0;
  for (const auto& v : values) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace painlab::pii
