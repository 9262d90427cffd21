#include "painlab/schrodinger.hpp"

#include <cmath>

#include "painlab/tridiag.hpp"

namespace painlab::schrodinger {

namespace {

constexpr cplx kI{0.0, 1.0};
constexpr double kPi = 3.14159265358979323846;

bool same_grid(const GridSpec& a, const GridSpec& b) {
  return a.n == b.n && a.x_min == b.x_min && a.x_max == b.x_max;
}

void check_params(const PhysicalParams& p) {
  if (!(p.mass > 0.0) || !(p.hbar > 0.0))
    throw InvalidArgument("mass and hbar must be positive");
}

}  // namespace

int time_sign(TimeConvention c) { return c == TimeConvention::standard ? 1 : -1; }

int derived_alpha_sign(TimeConvention c) { return time_sign(c); }

cplx matched_alpha(TimeConvention c) {
  // -s alpha hbar f must equal -2i hbar f.
  return 2.0 * kI / static_cast<double>(derived_alpha_sign(c));
}

double kappa(const PhysicalParams& p) {
  check_params(p);
  return std::sqrt(2.0 * p.mass) / p.hbar;
}

cplx x_to_z(double x, const PhysicalParams& p) { return kI * kappa(p) * x; }

void GridSpec::validate() const {
  if (n < 16) throw InvalidArgument("grid needs at least 16 points");
  if (!(x_max > x_min)) throw InvalidArgument("grid needs x_max > x_min");
}

cplx potential_V(cplx z, cplx f) { return 4.0 * z - 2.0 * f * f; }

cplx potential_V(cplx z, cplx lambda, riccati::PoleGuard guard) {
  return potential_V(z, riccati::closed_form_f(z, lambda, riccati::beta_for(lambda), guard));
}

void check_pole_free(const GridSpec& grid, const PhysicalParams& p) {
  grid.validate();
  const cplx lam = p.lambda;
  if (lam == cplx{}) throw DegenerateLambda();
  if (std::abs(lam.imag()) > 1e-15 * std::abs(lam)) return;  // poles are off the real x axis
  // z_k = -i pi k / (4 lambda) = i kappa x_k  =>  x_k = -pi k / (4 lambda kappa)
  const double spacing = kPi / (4.0 * std::abs(lam.real()) * kappa(p));
  const double margin = 10.0 * grid.dx();
  const double lo = grid.x_min - margin;
  const double hi = grid.x_max + margin;
  const double k_first = std::ceil(lo / spacing);
  if (k_first * spacing <= hi)
    throw InvalidArgument("closed-form pole at x = " + std::to_string(k_first * spacing) +
                          " lies within 10 dx of the window");
}

FieldProfile closed_form_profile(const GridSpec& grid, const PhysicalParams& p, cplx beta,
                                 riccati::PoleGuard guard) {
  check_pole_free(grid, p);
  FieldProfile prof{grid, {}};
  prof.f.reserve(static_cast<std::size_t>(grid.n));
  for (int i = 0; i < grid.n; ++i)
    prof.f.push_back(riccati::closed_form_f(x_to_z(grid.x(i), p), p.lambda, beta, guard));
  return prof;
}

FieldProfile qpii_profile(const GridSpec& grid, const PhysicalParams& p, cplx f0, cplx fp0,
                          int substeps) {
  grid.validate();
  if (substeps < 1) throw InvalidArgument("substeps must be >= 1");
  const double k = kappa(p);
  pii::RaySpec ray;
  ray.z0 = x_to_z(grid.x_min, p);
  ray.direction = kI;
  ray.length = k * (grid.x_max - grid.x_min);
  ray.steps = (grid.n - 1) * substeps;
  const lax::SpectralParams sp{p.lambda, 0.0, p.hbar};
  const pii::Trajectory traj = pii::integrate({ray.z0, f0, fp0}, ray, sp);
  FieldProfile prof{grid, {}};
  prof.f.reserve(static_cast<std::size_t>(grid.n));
  for (int i = 0; i < grid.n; ++i)
    prof.f.push_back(traj[static_cast<std::size_t>(i * substeps)].f);
  return prof;
}

FSource closed_form_source(const PhysicalParams& p, cplx beta, riccati::PoleGuard guard) {
  return [p, beta, guard](double x) {
    return riccati::closed_form_f(x_to_z(x, p), p.lambda, beta, guard);
  };
}

FSource profile_source(const FieldProfile& profile) {
  return [profile](double x) {
    const GridSpec& g = profile.grid;
    const double pos = (x - g.x_min) / g.dx();
    const double idx = std::round(pos);
    if (idx < 0 || idx >= g.n || std::abs(pos - idx) > 1e-9)
      throw GridMismatch("x is not a node of the profile grid");
    return profile.f[static_cast<std::size_t>(idx)];
  };
}

cplx ansatz_psi(double x, double t, const PhysicalParams& p, const FSource& f) {
  return f(x) * std::exp(kI * p.alpha * t);
}

WaveField ansatz_field(const FieldProfile& profile, double t, const PhysicalParams& p) {
  WaveField w{profile.grid, t, {}};
  const cplx phase = std::exp(kI * p.alpha * t);
  w.values.reserve(profile.f.size());
  for (const cplx& f : profile.f) w.values.push_back(f * phase);
  return w;
}

std::vector<cplx> sample_potential(const FieldProfile& profile, const PhysicalParams& p) {
  std::vector<cplx> v;
  v.reserve(profile.f.size());
  for (int i = 0; i < profile.grid.n; ++i)
    v.push_back(potential_V(x_to_z(profile.grid.x(i), p), profile.f[static_cast<std::size_t>(i)]));
  return v;
}

std::vector<cplx> reduction_residual(const pii::Trajectory& traj, cplx alpha, double hbar,
                                     TimeConvention convention, std::optional<int> sign) {
  if (traj.size() < 5) throw TooFewSamples(traj.size(), 5);
  const int s = sign.value_or(derived_alpha_sign(convention));
  if (s != 1 && s != -1) throw InvalidArgument("sign must be +1 or -1");
  const cplx dz = traj[1].z - traj[0].z;
  for (std::size_t i = 1; i + 1 < traj.size(); ++i)
    if (std::abs((traj[i + 1].z - traj[i].z) - dz) > 1e-9 * std::abs(dz))
      throw GridMismatch("trajectory samples are not uniformly spaced");
  std::vector<cplx> res;
  res.reserve(traj.size() - 2);
  for (std::size_t i = 1; i + 1 < traj.size(); ++i) {
    const cplx f = traj[i].f;
    const cplx fpp = (traj[i + 1].f - 2.0 * f + traj[i - 1].f) / (dz * dz);
    const cplx rhs = 2.0 * f * f * f - 4.0 * traj[i].z * f - static_cast<double>(s) * alpha * hbar * f;
    res.push_back(fpp - rhs);
  }
  return res;
}

WaveField pde_residual_fd(const WaveField& before, const WaveField& now, const WaveField& after,
                          std::span<const cplx> potential, const PhysicalParams& p) {
  check_params(p);
  const GridSpec& g = now.grid;
  g.validate();
  if (!same_grid(before.grid, g) || !same_grid(after.grid, g))
    throw GridMismatch("wave fields live on different grids");
  const auto n = static_cast<std::size_t>(g.n);
  if (before.values.size() != n || now.values.size() != n || after.values.size() != n ||
      potential.size() != n)
    throw GridMismatch("sample count does not match the grid");
  const double dt = now.t - before.t;
  if (!(dt > 0.0) || std::abs((after.t - now.t) - dt) > 1e-12 * std::max(1.0, std::abs(now.t)))
    throw GridMismatch("wave fields are not equally spaced in time");

  const double dx = g.dx();
  const double kin = p.hbar * p.hbar / (2.0 * p.mass * dx * dx);
  const cplx lhs_coef = static_cast<double>(time_sign(p.convention)) * kI * p.hbar / (2.0 * dt);
  WaveField out{g, now.t, std::vector<cplx>(n)};
  for (std::size_t j = 1; j + 1 < n; ++j) {
    const cplx lap = now.values[j + 1] - 2.0 * now.values[j] + now.values[j - 1];
    const cplx h_psi = -kin * lap + potential[j] * now.values[j];
    out.values[j] = lhs_coef * (after.values[j] - before.values[j]) - h_psi;
  }
  return out;
}

WaveField propagate_cn(const WaveField& initial, std::span<const cplx> potential, double dt,
                       int steps, const PhysicalParams& p, const Boundary& boundary) {
  check_params(p);
  const GridSpec& g = initial.grid;
  g.validate();
  if (!(dt > 0.0)) throw InvalidArgument("dt must be positive");
  if (steps < 0) throw InvalidArgument("steps must be non-negative");
  const auto n = static_cast<std::size_t>(g.n);
  if (initial.values.size() != n || potential.size() != n)
    throw GridMismatch("sample count does not match the grid");

  const double dx = g.dx();
  const double kin = p.hbar * p.hbar / (2.0 * p.mass * dx * dx);
  const cplx beta = static_cast<double>(time_sign(p.convention)) * kI * dt / (2.0 * p.hbar);
  const std::size_t m = n - 2;

  std::vector<cplx> lower(m, -beta * kin);
  std::vector<cplx> upper(m, -beta * kin);
  std::vector<cplx> diag(m);
  for (std::size_t j = 0; j < m; ++j) diag[j] = 1.0 + beta * (2.0 * kin + potential[j + 1]);

  WaveField w = initial;
  std::vector<cplx> rhs(m);
  for (int step = 0; step < steps; ++step) {
    const double t_new = initial.t + (step + 1) * dt;
    const cplx left_new = boundary.left ? boundary.left(t_new) : cplx{};
    const cplx right_new = boundary.right ? boundary.right(t_new) : cplx{};
    const auto& psi = w.values;
    for (std::size_t j = 1; j + 1 < n; ++j) {
      const cplx h_psi =
          -kin * (psi[j + 1] - 2.0 * psi[j] + psi[j - 1]) + potential[j] * psi[j];
      rhs[j - 1] = psi[j] - beta * h_psi;
    }
    rhs[0] += beta * kin * left_new;
    rhs[m - 1] += beta * kin * right_new;
    tridiag::solve(lower, diag, upper, rhs);
    w.values[0] = left_new;
    w.values[n - 1] = right_new;
    for (std::size_t j = 0; j < m; ++j) w.values[j + 1] = rhs[j];
    w.t = t_new;
  }
  return w;
}

double l2_norm(const WaveField& w) {
  double s = 0.0;
  for (const auto& v : w.values) s += std::norm(v);
  return std::sqrt(s * w.grid.dx());
}

double relative_l2(const WaveField& a, const WaveField& b) {
  if (!same_grid(a.grid, b.grid) || a.values.size() != b.values.size())
    throw GridMismatch("fields live on different grids");
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    num += std::norm(a.values[i] - b.values[i]);
    den += std::norm(b.values[i]);
  }
  return std::sqrt(num / den);
}

}  // namespace painlab::schrodinger
