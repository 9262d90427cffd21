#include "painlab/radial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "painlab/tridiag.hpp"
#include "painlab/yukawa.hpp"

namespace painlab::radial {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void check_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw InvalidArgument(std::string(what) + " must be positive");
}

void validate_grid(const RadialGrid& g) {
  check_positive(g.r_max, "r_max");
  if (g.n < 1000) throw InvalidArgument("radial grid needs n >= 1000");
}

std::string grid_meta(const char* tag, const RadialGrid& g) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s r_max=%.6g n=%d h=%.6g", tag, g.r_max, g.n, g.r_max / g.n);
  return buf;
}

// V(r) + centrifugal(r) at r_i = i h for i = 0..n; index 0 is unused.
std::vector<double> effective_potential(const RadialSpec& spec, const RadialGrid& g) {
  const double h = g.r_max / g.n;
  std::vector<double> w(static_cast<std::size_t>(g.n) + 1, 0.0);
  for (int i = 1; i <= g.n; ++i) {
    const double r = i * h;
    w[static_cast<std::size_t>(i)] = potential_value(spec.potential, r) + centrifugal_term(spec, r);
  }
  return w;
}

// lim_{r->0} g(r) u(r) for u ~ r^{l+1} normalized so that u(h) = h^{l+1}.
double origin_source(const RadialSpec& spec) {
  if (spec.l == 0) return coulomb_strength(spec.potential);
  if (spec.l == 1) return -2.0;
  return 0.0;
}

int count_nodes(const RadialSpec& spec, const std::vector<double>& w, double energy,
                const RadialGrid& g) {
  const double h = g.r_max / g.n;
  const double h12 = h * h / 12.0;
  double u_prev = 0.0;
  double u = std::pow(h, spec.l + 1);
  double t_prev = h12 * origin_source(spec);  // (h^2/12) g_0 u_0
  double g_cur = energy - w[1];
  int nodes = 0;
  for (int i = 1; i < g.n; ++i) {
    const double g_next = energy - w[static_cast<std::size_t>(i) + 1];
    const double lhs = 2.0 * (1.0 - 5.0 * h12 * g_cur) * u - (u_prev + t_prev);
    const double u_next = lhs / (1.0 + h12 * g_next);
    // Interior nodes are sign changes among u_1..u_{n-1}.
    if (i + 1 < g.n && ((u_next < 0.0 && u > 0.0) || (u_next > 0.0 && u < 0.0))) ++nodes;
    t_prev = h12 * g_cur * u;
    u_prev = u;
    u = u_next;
    g_cur = g_next;
    if (std::abs(u) > 1e200) {
      u *= 1e-200;
      u_prev *= 1e-200;
      t_prev *= 1e-200;
    }
  }
  return nodes;
}

double shoot(const RadialSpec& spec, int n_target, const RadialGrid& g, int* nodes_out) {
  const std::vector<double> w = effective_potential(spec, g);
  double lo = energy_floor(spec);
  for (int tries = 0; count_nodes(spec, w, lo, g) > n_target; ++tries) {
    if (tries > 20) throw NumericalError("could not bracket the eigenvalue from below");
    lo *= 4.0;
  }
  double hi = -1e-12;
  if (count_nodes(spec, w, hi, g) <= n_target)
    throw NoBoundState("no bound state with " + std::to_string(n_target) + " nodes for " +
                       potential_name(spec.potential) + " l=" + std::to_string(spec.l));
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (count_nodes(spec, w, mid, g) > n_target)
      hi = mid;
    else
      lo = mid;
  }
  if (nodes_out) *nodes_out = count_nodes(spec, w, lo, g);
  return 0.5 * (lo + hi);
}

tridiag::SymTridiag fd_matrix(const RadialSpec& spec, const RadialGrid& g) {
  const double h = g.r_max / g.n;
  const std::vector<double> w = effective_potential(spec, g);
  tridiag::SymTridiag t;
  t.d.resize(static_cast<std::size_t>(g.n) - 1);
  t.e.assign(static_cast<std::size_t>(g.n) - 2, -1.0 / (h * h));
  for (std::size_t i = 0; i < t.d.size(); ++i) t.d[i] = 2.0 / (h * h) + w[i + 1];
  return t;
}

std::vector<double> fd_levels(const tridiag::SymTridiag& t, int k) {
  const auto bound = static_cast<int>(tridiag::count_below(t, 0.0));
  const int m = std::min(k, bound);
  const double lo = tridiag::gershgorin(t).first;
  std::vector<double> e;
  for (int i = 0; i < m; ++i) {
    double a = lo;
    double b = 0.0;
    while (b - a > 1e-13 * std::max(1.0, std::abs(a))) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (static_cast<int>(tridiag::count_below(t, mid)) > i)
        b = mid;
      else
        a = mid;
    }
    e.push_back(0.5 * (a + b));
  }
  return e;
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::numerov: return "numerov";
    case Method::fd_matrix: return "fd_matrix";
    case Method::analytic_hulthen: return "analytic_hulthen";
    case Method::analytic_coulomb: return "analytic_coulomb";
  }
  return "unknown";
}

std::string potential_name(const Potential& p) {
  return std::visit(overloaded{[](const Yukawa&) { return std::string("yukawa"); },
                               [](const HulthenApprox&) { return std::string("hulthen-approx"); },
                               [](const HulthenConsistent&) { return std::string("hulthen-consistent"); },
                               [](const Coulomb&) { return std::string("coulomb"); },
                               [](const Hulthen&) { return std::string("hulthen"); }},
                    p);
}

void validate(const RadialSpec& spec) {
  std::visit(overloaded{[](const Yukawa& y) {
                          check_positive(y.V0, "V0");
                          check_positive(y.a, "a");
                        },
                        [](const HulthenApprox& h) {
                          check_positive(h.V0, "V0");
                          check_positive(h.lambda, "lambda");
                        },
                        [](const HulthenConsistent& h) {
                          check_positive(h.V0, "V0");
                          check_positive(h.lambda, "lambda");
                        },
                        [](const Coulomb& c) { check_positive(c.V0, "V0"); },
                        [](const Hulthen& h) {
                          check_positive(h.W, "W");
                          check_positive(h.delta, "delta");
                        }},
             spec.potential);
  if (spec.l < 0) throw InvalidArgument("l must be >= 0");
  if (spec.centrifugal == Centrifugal::greene_aldrich && spec.l > 0 && !screening(spec.potential))
    throw InvalidArgument("Greene-Aldrich centrifugal term needs a screened potential");
}

double potential_value(const Potential& p, double r) {
  return std::visit(
      overloaded{[r](const Yukawa& y) { return -y.V0 * std::exp(-2.0 * y.a * r) / r; },
                 [r](const HulthenApprox& h) { return yukawa::yukawa_approx_z(r, h.lambda, h.V0); },
                 [r](const HulthenConsistent& h) {
                   return yukawa::yukawa_approx_consistent(r, h.lambda, h.V0);
                 },
                 [r](const Coulomb& c) { return -c.V0 / r; },
                 [r](const Hulthen& h) {
                   return -h.W * std::exp(-h.delta * r) / -std::expm1(-h.delta * r);
                 }},
      p);
}

double coulomb_strength(const Potential& p) {
  return std::visit(
      overloaded{[](const Yukawa& y) { return y.V0; },
                 [](const HulthenApprox& h) { return h.V0 * yukawa::beta_abs(h.lambda) / (8.0 * h.lambda); },
                 [](const HulthenConsistent& h) {
                   return h.V0 * yukawa::beta_abs(h.lambda) / (8.0 * h.lambda);
                 },
                 [](const Coulomb& c) { return c.V0; },
                 [](const Hulthen& h) { return h.W / h.delta; }},
      p);
}

std::optional<double> screening(const Potential& p) {
  return std::visit(overloaded{[](const Yukawa& y) -> std::optional<double> { return y.a; },
                               [](const HulthenApprox& h) -> std::optional<double> { return 4.0 * h.lambda; },
                               [](const HulthenConsistent& h) -> std::optional<double> {
                                 return 4.0 * h.lambda;
                               },
                               [](const Coulomb&) -> std::optional<double> { return std::nullopt; },
                               [](const Hulthen& h) -> std::optional<double> { return 0.5 * h.delta; }},
                    p);
}

double centrifugal_term(const RadialSpec& spec, double r) {
  if (spec.l == 0) return 0.0;
  const double ll = spec.l * (spec.l + 1.0);
  if (spec.centrifugal == Centrifugal::greene_aldrich)
    return ll * yukawa::centrifugal_approx(r, *screening(spec.potential));
  return ll / (r * r);
}

double energy_floor(const RadialSpec& spec) {
  const double wc = coulomb_strength(spec.potential);
  return -10.0 * wc * wc;
}

RadialGrid default_grid(const RadialSpec& spec, int n_target) {
  validate(spec);
  const double wc = coulomb_strength(spec.potential);
  const int n_principal = n_target + spec.l + 1;
  const double k = wc / (2.0 * n_principal);
  const double a = screening(spec.potential).value_or(INFINITY);
  RadialGrid g;
  g.r_max = std::min(40.0 / std::min(a, k), 2000.0);
  const double h = 2e-3 * (1.0 / std::max(wc, 1e-3));
  g.n = static_cast<int>(std::clamp(std::ceil(g.r_max / h), 1000.0, 2000000.0));
  return g;
}

int numerov_nodes(const RadialSpec& spec, double energy, const RadialGrid& grid) {
  validate(spec);
  validate_grid(grid);
  return count_nodes(spec, effective_potential(spec, grid), energy, grid);
}

EigenResult solve_numerov(const RadialSpec& spec, int n_target, const RadialGrid& grid) {
  validate(spec);
  validate_grid(grid);
  if (n_target < 0) throw InvalidArgument("n_target must be >= 0");
  EigenResult res;
  res.n_radial = n_target;
  res.l = spec.l;
  res.method = Method::numerov;
  res.energy = shoot(spec, n_target, grid, &res.nodes);
  res.grid_meta = grid_meta("numerov", grid);
  if (grid.check_refinement) {
    RadialGrid fine = grid;
    fine.n = 2 * grid.n;
    const double e_fine = shoot(spec, n_target, fine, &res.nodes);
    const double shift = std::abs(e_fine - res.energy);
    if (shift > grid.refine_tol * std::max(1.0, std::abs(e_fine))) throw GridTooCoarse(shift);
    res.energy = e_fine;
    res.grid_meta = grid_meta("numerov", fine);
  }
  return res;
}

std::vector<EigenResult> solve_fd_matrix(const RadialSpec& spec, int k, const RadialGrid& grid) {
  validate(spec);
  validate_grid(grid);
  if (k < 0) throw InvalidArgument("k must be >= 0");
  std::vector<EigenResult> out;
  if (k == 0) return out;

  tridiag::SymTridiag t = fd_matrix(spec, grid);
  std::vector<double> levels = fd_levels(t, k);
  RadialGrid used = grid;
  std::vector<double> energies = levels;
  const char* tag = "fd_matrix";
  if (grid.check_refinement) {
    // The 3-point scheme is O(h^2): levels on n and 2n points are combined
    // by Richardson extrapolation.
    used.n = 2 * grid.n;
    tridiag::SymTridiag fine = fd_matrix(spec, used);
    std::vector<double> fine_levels = fd_levels(fine, static_cast<int>(levels.size()));
    fine_levels.resize(std::min(levels.size(), fine_levels.size()));
    energies.resize(fine_levels.size());
    for (std::size_t i = 0; i < fine_levels.size(); ++i) {
      const double shift = std::abs(fine_levels[i] - levels[i]);
      if (shift > grid.refine_tol * std::max(1.0, std::abs(fine_levels[i])))
        throw GridTooCoarse(shift);
      energies[i] = (4.0 * fine_levels[i] - levels[i]) / 3.0;
    }
    t = std::move(fine);
    levels = std::move(fine_levels);
    tag = "fd_matrix+richardson";
  }
  for (std::size_t i = 0; i < levels.size(); ++i) {
    EigenResult r;
    r.n_radial = static_cast<int>(i);
    r.l = spec.l;
    r.energy = energies[i];
    r.method = Method::fd_matrix;
    const std::vector<double> vec = tridiag::eigenvector(t, levels[i]);
    r.nodes = tridiag::count_sign_changes(vec, 1e-9);
    r.grid_meta = grid_meta(tag, used);
    out.push_back(std::move(r));
  }
  return out;
}

double hulthen_analytic_s(double W, double delta, int n) {
  check_positive(W, "W");
  check_positive(delta, "delta");
  if (n < 1) throw InvalidArgument("principal quantum number must be >= 1");
  const double n2d2 = n * n * delta * delta;
  if (!(W > n2d2))
    throw NoBoundState("Hulthen level n=" + std::to_string(n) + " needs W > n^2 delta^2");
  const double k = (W - n2d2) / (2.0 * n * delta);
  return -k * k;
}

double coulomb_analytic(double V0, int n) {
  check_positive(V0, "V0");
  if (n < 1) throw InvalidArgument("principal quantum number must be >= 1");
  return -V0 * V0 / (4.0 * n * n);
}

std::vector<ComparisonRow> compare_spectra(const Potential& a, const Potential& b,
                                           std::vector<Level> levels, const RadialGrid& grid,
                                           Centrifugal centrifugal) {
  std::sort(levels.begin(), levels.end(), [](const Level& x, const Level& y) {
    return x.l != y.l ? x.l < y.l : x.n_radial < y.n_radial;
  });
  auto energy = [&](const Potential& p, const Level& lv) -> std::optional<double> {
    try {
      return solve_numerov({p, lv.l, centrifugal}, lv.n_radial, grid).energy;
    } catch (const NoBoundState&) {
      return std::nullopt;
    }
  };
  std::vector<ComparisonRow> rows;
  for (const Level& lv : levels) {
    ComparisonRow row{lv.n_radial, lv.l, energy(a, lv), energy(b, lv), {}, {}};
    if (row.energy_a && row.energy_b) {
      row.abs_diff = std::abs(*row.energy_a - *row.energy_b);
      row.rel_diff = *row.abs_diff / std::abs(*row.energy_a);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace painlab::radial
