#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "painlab/lax.hpp"
#include "painlab/painleve2.hpp"
#include "painlab/radial.hpp"
#include "painlab/riccati.hpp"
#include "painlab/schrodinger.hpp"
#include "painlab/yukawa.hpp"

namespace painlab::cli {

namespace {

constexpr cplx kI{0.0, 1.0};

std::string cell(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

}  // namespace

std::string Table::to_csv() const {
  std::ostringstream os;
  for (std::size_t j = 0; j < columns.size(); ++j) os << (j ? "," : "") << columns[j];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << cell(row[j]);
    os << '\n';
  }
  return os.str();
}

std::string Table::to_json() const {
  json arr = json::array();
  for (const auto& row : rows) {
    json obj = json::object();
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (row[j])
        obj[columns[j]] = *row[j];
      else
        obj[columns[j]] = nullptr;
    }
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

json complex_json(cplx z) { return json{{"re", z.real() + 0.0}, {"im", z.imag() + 0.0}}; }

Artifact table_artifact(const std::string& stem, const Table& t, Format f) {
  if (f == Format::json) return {stem + ".json", t.to_json(), false};
  return {stem + ".csv", t.to_csv(), true};
}

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json optional_json(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

// lax-residual ---------------------------------------------------------------

Command add_lax_residual(CLI::App& root) {
  auto* app = root.add_subcommand(
      "lax-residual",
      "Zero-curvature residual dA/dz - dB/dlambda + [A, B] of the quantum Painleve II Lax "
      "pair, sampled over a rectangle of z and a list of spectral parameters");
  struct Opts {
    std::string z_min = "-1,-1";
    std::string z_max = "1,1";
    int nz_re = 11;
    int nz_im = 11;
    std::vector<std::string> lambdas{"1,0"};
    std::string c = "0,0";
    double hbar = 1.0;
    std::string jet = "random";
  };
  auto o = std::make_shared<Opts>();
  app->add_option("--z-min", o->z_min, "lower-left corner of the z rectangle (re,im)");
  app->add_option("--z-max", o->z_max, "upper-right corner of the z rectangle (re,im)");
  app->add_option("--nz-re", o->nz_re, "samples along Re z")->check(CLI::PositiveNumber);
  app->add_option("--nz-im", o->nz_im, "samples along Im z")->check(CLI::PositiveNumber);
  app->add_option("--lambda", o->lambdas, "spectral parameter(s) (re,im), repeatable");
  app->add_option("--c", o->c, "constant c (re,im)");
  app->add_option("--hbar", o->hbar, "Planck constant");
  app->add_option("--jet", o->jet,
                  "jet source: random (seeded f, f', f'') or closed-form (Riccati solution)")
      ->check(CLI::IsMember({"random", "closed-form"}));

  Handler h = [o](const RunContext& ctx) {
    const cplx z0 = parse_complex(o->z_min);
    const cplx z1 = parse_complex(o->z_max);
    lax::SpectralParams sp;
    sp.c = parse_complex(o->c);
    sp.hbar = o->hbar;
    std::mt19937_64 rng(ctx.seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto draw = [&] {
      const double re = u(rng);
      return cplx{re, u(rng)};
    };
    auto axis = [](double a, double b, int n, int i) {
      return n == 1 ? a : a + (b - a) * i / (n - 1.0);
    };
    Table t;
    t.columns = {"z_re", "z_im",  "lambda_re", "lambda_im", "r1_re",   "r1_im",
                 "r2_re", "r2_im", "r3_re",     "r3_im",     "fro_norm"};
    for (const auto& ls : o->lambdas) {
      sp.lambda = parse_complex(ls);
      for (int i = 0; i < o->nz_re; ++i) {
        for (int k = 0; k < o->nz_im; ++k) {
          const cplx z{axis(z0.real(), z1.real(), o->nz_re, i),
                       axis(z0.imag(), z1.imag(), o->nz_im, k)};
          lax::JetPoint jp{z, {}, {}, {}};
          if (o->jet == "random") {
            jp.f = draw();
            jp.fp = draw();
            jp.fpp = draw();
          } else {
            try {
              const auto cj = riccati::closed_form_jet(z, sp.lambda, riccati::beta_for(sp.lambda));
              jp.f = cj.f;
              jp.fp = cj.fp;
              jp.fpp = cj.fpp;
            } catch (const NearPole&) {
              continue;
            }
          }
          const auto r = lax::zero_curvature_residual(jp, sp);
          t.rows.push_back({z.real(), z.imag(), sp.lambda.real(), sp.lambda.imag(),
                            r.c[1].real(), r.c[1].imag(), r.c[2].real(), r.c[2].imag(),
                            r.c[3].real(), r.c[3].imag(), pauli::fro_norm(r)});
        }
      }
    }
    return std::vector<Artifact>{table_artifact("lax_residual", t, ctx.format)};
  };
  return {app, h};
}

// pii-integrate --------------------------------------------------------------

Command add_pii_integrate(CLI::App& root) {
  auto* app = root.add_subcommand(
      "pii-integrate",
      "Integrate f'' = 2f^3 - 4zf - 2i hbar f + c along a straight complex ray (fixed-step RK4 "
      "with --steps, adaptive Dormand-Prince with --tol)");
  struct Opts {
    std::string z0 = "0,0";
    std::string dir = "1,0";
    double len = 1.0;
    int steps = 0;
    double tol = 1e-10;
    std::string c = "0,0";
    double hbar = 1.0;
    std::string f0 = "0,0";
    std::string fp0 = "0,0";
  };
  auto o = std::make_shared<Opts>();
  app->add_option("--z0", o->z0, "start point (re,im)");
  app->add_option("--dir", o->dir, "ray direction (re,im), normalized internally");
  app->add_option("--len", o->len, "ray length")->check(CLI::PositiveNumber);
  auto* steps = app->add_option("--steps", o->steps, "fixed RK4 step count")
                    ->check(CLI::PositiveNumber);
  auto* tol = app->add_option("--tol", o->tol, "adaptive tolerance")->check(CLI::PositiveNumber);
  steps->excludes(tol);
  app->add_option("--c", o->c, "constant c (re,im)");
  app->add_option("--hbar", o->hbar, "Planck constant");
  app->add_option("--f0", o->f0, "f at z0 (re,im)");
  app->add_option("--fp0", o->fp0, "f' at z0 (re,im)");

  Handler h = [o, steps](const RunContext& ctx) {
    lax::SpectralParams sp;
    sp.c = parse_complex(o->c);
    sp.hbar = o->hbar;
    pii::RaySpec ray;
    ray.z0 = parse_complex(o->z0);
    const cplx d = parse_complex(o->dir);
    if (std::abs(d) == 0.0) throw InvalidArgument("ray direction must be non-zero");
    ray.direction = d / std::abs(d);
    ray.length = o->len;
    ray.steps = steps->count() ? o->steps : 0;
    ray.tolerance = o->tol;
    const auto traj =
        pii::integrate({ray.z0, parse_complex(o->f0), parse_complex(o->fp0)}, ray, sp);
    Table t;
    t.columns = {"z_re", "z_im", "f_re", "f_im", "fp_re", "fp_im"};
    for (const auto& s : traj)
      t.rows.push_back({s.z.real(), s.z.imag(), s.f.real(), s.f.imag(), s.fp.real(), s.fp.imag()});
    return std::vector<Artifact>{table_artifact("pii_trajectory", t, ctx.format)};
  };
  return {app, h};
}

// riccati-verify -------------------------------------------------------------

Command add_riccati_verify(CLI::App& root) {
  auto* app = root.add_subcommand(
      "riccati-verify",
      "Check the Riccati equation for Delta = exp(4 lambda z) with the closed-form f at "
      "random points (uses --seed)");
  struct Opts {
    std::string lambda = "1,0";
    int samples = 200;
    double guard = 1e-6;
    double margin = 0.0;
    double beta_scale = 1.0;
    std::vector<double> window{-1.0, 1.0, -1.0, 1.0};
  };
  auto o = std::make_shared<Opts>();
  app->add_option("--lambda", o->lambda, "spectral parameter (re,im)");
  app->add_option("--samples", o->samples, "number of sample points")
      ->check(CLI::PositiveNumber);
  app->add_option("--guard", o->guard, "minimum |1 - exp(-8 lambda z)|")
      ->check(CLI::NonNegativeNumber);
  app->add_option("--margin", o->margin, "reject points closer than this to the pole lattice")
      ->check(CLI::NonNegativeNumber);
  app->add_option("--beta-scale", o->beta_scale,
                  "multiply the balancing beta by this factor (1 = exact)");
  app->add_option("--window", o->window, "sampling rectangle re_min re_max im_min im_max")
      ->expected(4);

  Handler h = [o](const RunContext& ctx) {
    const cplx lambda = parse_complex(o->lambda);
    const riccati::Rect win{o->window[0], o->window[1], o->window[2], o->window[3]};
    if (win.empty()) throw InvalidArgument("sampling window is empty");
    const auto rep = riccati::verify_identity(lambda, o->samples, ctx.seed, {o->guard}, win,
                                              o->margin, o->beta_scale);
    json j;
    j["max_residual"] = rep.max_residual;
    j["samples"] = rep.samples;
    j["beta"] = complex_json(rep.beta);
    j["pole_count_in_window"] = rep.pole_count_in_window;
    j["lambda"] = complex_json(lambda);
    j["window"] = {rep.window.re_min, rep.window.re_max, rep.window.im_min, rep.window.im_max};
    return std::vector<Artifact>{{"riccati_report.json", dump(j), false}};
  };
  return {app, h};
}

// schrodinger-evolve ---------------------------------------------------------

Command add_schrodinger_evolve(CLI::App& root) {
  auto* app = root.add_subcommand(
      "schrodinger-evolve",
      "Separable ansatz psi = f(z) exp(i alpha t), z = i kappa x, for the Schrodinger equation "
      "with potential 4z - 2f^2: finite-difference residual check or Crank-Nicolson propagation");
  struct Opts {
    std::string lambda = "1,0";
    std::string alpha_sign = "auto";
    std::string convention = "printed";
    double x_min = -1.0;
    double x_max = 1.0;
    int nx = 201;
    double dt = 1e-4;
    int steps = 500;
    std::string mode = "ansatz-check";
    std::string profile = "qpii";
    std::string f0 = "0.1,0";
    std::string fp0 = "0,0";
    double mass = 0.5;
    double hbar = 1.0;
    int snapshot_every = 0;
    bool no_refine = false;
  };
  auto o = std::make_shared<Opts>();
  app->add_option("--lambda", o->lambda, "spectral parameter of the closed-form profile (re,im)");
  app->add_option("--alpha-sign", o->alpha_sign,
                  "alpha = sign * 2i; 'auto' picks the sign that reduces to quantum Painleve II")
      ->check(CLI::IsMember({"auto", "1", "+1", "-1"}));
  app->add_option("--convention", o->convention,
                  "time derivative orientation: printed (-i hbar psi_t = H psi) or standard")
      ->check(CLI::IsMember({"printed", "standard"}));
  app->add_option("--xmin", o->x_min, "left end of the x window");
  app->add_option("--xmax", o->x_max, "right end of the x window");
  app->add_option("--nx", o->nx, "grid points")->check(CLI::Range(16, 10000000));
  app->add_option("--dt", o->dt, "time step")->check(CLI::PositiveNumber);
  app->add_option("--steps", o->steps, "time steps (propagate mode)")
      ->check(CLI::NonNegativeNumber);
  app->add_option("--mode", o->mode, "ansatz-check or propagate")
      ->check(CLI::IsMember({"ansatz-check", "propagate"}));
  app->add_option("--profile", o->profile,
                  "f(z): qpii (integrated from --f0/--fp0) or closed-form (Riccati solution)")
      ->check(CLI::IsMember({"qpii", "closed-form"}));
  app->add_option("--f0", o->f0, "f at z(xmin) for the qpii profile (re,im)");
  app->add_option("--fp0", o->fp0, "df/dz at z(xmin) for the qpii profile (re,im)");
  app->add_option("--mass", o->mass, "particle mass")->check(CLI::PositiveNumber);
  app->add_option("--hbar", o->hbar, "Planck constant")->check(CLI::PositiveNumber);
  app->add_option("--snapshot-every", o->snapshot_every,
                  "write a snapshot every k steps (0: final state only)")
      ->check(CLI::NonNegativeNumber);
  app->add_flag("--no-refine", o->no_refine, "skip the refined run used for convergence_slope");

  Handler h = [o](const RunContext& ctx) {
    using namespace schrodinger;
    PhysicalParams p;
    p.mass = o->mass;
    p.hbar = o->hbar;
    p.lambda = parse_complex(o->lambda);
    p.convention = o->convention == "standard" ? TimeConvention::standard : TimeConvention::printed;
    if (o->alpha_sign == "auto")
      p.alpha = matched_alpha(p.convention);
    else
      p.alpha = (o->alpha_sign == "-1" ? -2.0 : 2.0) * kI;

    const cplx f0 = parse_complex(o->f0);
    const cplx fp0 = parse_complex(o->fp0);
    auto make_profile = [&](const GridSpec& g) {
      if (o->profile == "closed-form")
        return closed_form_profile(g, p, riccati::beta_for(p.lambda));
      return qpii_profile(g, p, f0, fp0);
    };
    auto max_residual = [&](const GridSpec& g, double dt) {
      const auto prof = make_profile(g);
      const auto v = sample_potential(prof, p);
      const auto res = pde_residual_fd(ansatz_field(prof, -dt, p), ansatz_field(prof, 0.0, p),
                                       ansatz_field(prof, dt, p), v, p);
      double m = 0.0;
      for (const auto& r : res.values) m = std::max(m, std::abs(r));
      return std::make_pair(m, res);
    };
    auto snapshot = [&](const WaveField& psi, const WaveField& ansatz,
                        const std::vector<cplx>* err) {
      Table t;
      t.columns = {"x", "psi_re", "psi_im", "ansatz_re", "ansatz_im", "abs_err"};
      for (int i = 0; i < psi.grid.n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        const double e = err ? std::abs((*err)[k]) : std::abs(psi.values[k] - ansatz.values[k]);
        t.rows.push_back({psi.grid.x(i), psi.values[k].real(), psi.values[k].imag(),
                          ansatz.values[k].real(), ansatz.values[k].imag(), e});
      }
      return t;
    };
    auto refined = [](const GridSpec& g) {
      GridSpec r = g;
      r.n = 2 * (g.n - 1) + 1;
      return r;
    };
    // Runs CN to t = steps * dt; calls `on_snapshot` on the requested steps.
    auto propagate = [&](const GridSpec& g, double dt, int steps, int every, auto&& on_snapshot) {
      const auto prof = make_profile(g);
      const auto v = sample_potential(prof, p);
      const auto src = profile_source(prof);
      Boundary b{[&, src](double t) { return ansatz_psi(g.x_min, t, p, src); },
                 [&, src](double t) { return ansatz_psi(g.x_max, t, p, src); }};
      WaveField w = ansatz_field(prof, 0.0, p);
      int done = 0;
      while (done < steps) {
        const int chunk = every > 0 ? std::min(every, steps - done) : steps - done;
        w = propagate_cn(w, v, dt, chunk, p, b);
        done += chunk;
        w.t = done * dt;
        if (every > 0 || done == steps) on_snapshot(done, w, ansatz_field(prof, w.t, p));
      }
      if (steps == 0) on_snapshot(0, w, ansatz_field(prof, 0.0, p));
      return relative_l2(w, ansatz_field(prof, w.t, p));
    };

    GridSpec g{o->x_min, o->x_max, o->nx};
    g.validate();
    std::vector<Artifact> out;
    json summary;
    const auto [res_max, res_field] = max_residual(g, o->dt);
    summary["mode"] = o->mode;
    summary["max_residual"] = res_max;

    if (o->mode == "ansatz-check") {
      const auto prof = make_profile(g);
      out.push_back(table_artifact(
          "snapshot_00000", snapshot(ansatz_field(prof, 0.0, p), ansatz_field(prof, 0.0, p),
                                     &res_field.values),
          ctx.format));
      summary["l2_dev"] = nullptr;
      if (o->no_refine) {
        summary["convergence_slope"] = nullptr;
      } else {
        const double fine = max_residual(refined(g), 0.5 * o->dt).first;
        summary["convergence_slope"] = std::log2(res_max / fine);
      }
    } else {
      const double dev = propagate(g, o->dt, o->steps, o->snapshot_every,
                                   [&](int step, const WaveField& w, const WaveField& a) {
                                     char stem[32];
                                     std::snprintf(stem, sizeof stem, "snapshot_%05d", step);
                                     out.push_back(
                                         table_artifact(stem, snapshot(w, a, nullptr), ctx.format));
                                   });
      summary["l2_dev"] = dev;
      if (o->no_refine) {
        summary["convergence_slope"] = nullptr;
      } else {
        const double fine = propagate(refined(g), 0.5 * o->dt, 2 * o->steps, 0,
                                      [](int, const WaveField&, const WaveField&) {});
        summary["convergence_slope"] = std::log2(dev / fine);
      }
      summary["t_final"] = o->steps * o->dt;
    }

    // The x-space potential written as gamma x - 2 psi* psi uses
    // gamma = 4i sqrt(2m / hbar); mapping 4z through z = i kappa x gives 4i kappa.
    const auto prof = make_profile(g);
    double density_gap = 0.0;
    for (const cplx& f : prof.f)
      density_gap = std::max(density_gap, std::abs(2.0 * std::norm(f) - 2.0 * f * f));
    summary["alpha"] = complex_json(p.alpha);
    summary["convention"] = o->convention;
    summary["gamma_as_printed"] = complex_json(4.0 * kI * std::sqrt(2.0 * p.mass / p.hbar));
    summary["gamma_from_z_map"] = complex_json(4.0 * kI * kappa(p));
    summary["density_vs_f2_gap"] = density_gap;
    out.push_back({"schrodinger_summary.json", dump(summary), false});
    return out;
  };
  return {app, h};
}

// yukawa-error ---------------------------------------------------------------

Command add_yukawa_error(CLI::App& root) {
  auto* app = root.add_subcommand(
      "yukawa-error",
      "Exact Yukawa potential against its exponential (Hulthen-type) approximation built from "
      "the closed-form solution, with r and z identified and a = 4 lambda");
  struct Opts {
    double V0 = 1.0;
    int Z = 0;
    double a = 0.4;
    double lambda = 0.1;
    double r_min = 0.01;
    double r_max = 10.0;
    int n = 200;
    bool log_grid = false;
  };
  auto o = std::make_shared<Opts>();
  auto* v0 = app->add_option("--V0", o->V0, "potential strength")->check(CLI::PositiveNumber);
  auto* z = app->add_option("--Z", o->Z, "atomic number, V0 = Z / 137.037")
                ->check(CLI::PositiveNumber);
  v0->excludes(z);
  auto* a = app->add_option("--a", o->a, "screening parameter")->check(CLI::PositiveNumber);
  auto* lam = app->add_option("--lambda", o->lambda, "spectral parameter, a = 4 lambda")
                  ->check(CLI::PositiveNumber);
  a->excludes(lam);
  app->add_option("--rmin", o->r_min, "smallest radius")->check(CLI::PositiveNumber);
  app->add_option("--rmax", o->r_max, "largest radius")->check(CLI::PositiveNumber);
  app->add_option("--n", o->n, "number of radii")->check(CLI::NonNegativeNumber);
  app->add_flag("--log-grid", o->log_grid, "logarithmic spacing");

  Handler h = [o, z, a](const RunContext& ctx) {
    yukawa::YukawaParams p;
    if (z->count())
      p = yukawa::YukawaParams::from_Z(o->Z, 1.0);
    else
      p.V0 = o->V0;
    // --a wins when given explicitly; otherwise a follows lambda.
    const double lambda = a->count() ? o->a / 4.0 : o->lambda;
    p.a = 4.0 * lambda;
    p.validate();
    if (!(o->r_max > o->r_min)) throw InvalidArgument("rmax must exceed rmin");
    std::vector<double> r(static_cast<std::size_t>(o->n));
    for (int i = 0; i < o->n; ++i) {
      const double s = o->n == 1 ? 0.0 : i / (o->n - 1.0);
      r[static_cast<std::size_t>(i)] =
          o->log_grid ? o->r_min * std::pow(o->r_max / o->r_min, s)
                      : o->r_min + s * (o->r_max - o->r_min);
    }
    const auto rows = yukawa::error_profile(r, p, lambda);
    Table t;
    t.columns = {"r", "V_exact", "V_approx", "V_approx_consistent", "abs_err", "rel_err"};
    for (const auto& row : rows)
      t.rows.push_back({row.r, row.v_exact, row.v_approx, row.v_approx_consistent, row.abs_err,
                        row.rel_err});
    return std::vector<Artifact>{table_artifact("yukawa_error", t, ctx.format)};
  };
  return {app, h};
}

// bound-states ---------------------------------------------------------------

radial::Centrifugal parse_centrifugal(const std::string& s) {
  return s == "greene-aldrich" ? radial::Centrifugal::greene_aldrich : radial::Centrifugal::exact;
}

json eigen_json(const radial::EigenResult& r) {
  return json{{"n_radial", r.n_radial}, {"l", r.l},         {"energy", r.energy},
              {"method", radial::to_string(r.method)},     {"nodes", r.nodes},
              {"grid", r.grid_meta}};
}

Command add_bound_states(CLI::App& root) {
  auto* app = root.add_subcommand(
      "bound-states",
      "Radial bound states (hbar = 2m = 1) of the Yukawa potential, its Hulthen-type "
      "approximations, Coulomb and plain Hulthen, by Numerov shooting and finite differences");
  struct Opts {
    std::string mode = "solve";
    std::string potential = "yukawa";
    std::string against = "hulthen-approx";
    double V0 = 1.0;
    int Z = 0;
    double a = 0.0;
    double lambda = 0.0;
    double W = 0.0;
    double delta = 0.0;
    int l = 0;
    int levels = 1;
    std::string centrifugal = "exact";
    std::string method = "numerov";
    double r_max = 0.0;
    int n = 0;
    bool allow_unbound = false;
    bool no_refine_check = false;
  };
  auto o = std::make_shared<Opts>();
  const std::vector<std::string> families{"yukawa", "hulthen-approx", "hulthen-consistent",
                                          "coulomb", "hulthen"};
  app->add_option("--mode", o->mode, "solve (JSON energies) or compare (CSV against --against)")
      ->check(CLI::IsMember({"solve", "compare"}));
  app->add_option("--potential", o->potential, "potential family")->check(CLI::IsMember(families));
  app->add_option("--against", o->against, "second family for compare mode")
      ->check(CLI::IsMember(families));
  auto* v0 = app->add_option("--V0", o->V0, "potential strength")->check(CLI::PositiveNumber);
  auto* z = app->add_option("--Z", o->Z, "atomic number, V0 = Z / 137.037")
                ->check(CLI::PositiveNumber);
  v0->excludes(z);
  auto* a = app->add_option("--a", o->a, "Yukawa screening (lambda = a / 4 for the approximations)")
                ->check(CLI::PositiveNumber);
  auto* lam = app->add_option("--lambda", o->lambda, "spectral parameter (a = 4 lambda for Yukawa)")
                  ->check(CLI::PositiveNumber);
  a->excludes(lam);
  auto* w = app->add_option("--W", o->W, "plain Hulthen strength (the effective V0 |beta|)")
                ->check(CLI::PositiveNumber);
  auto* d = app->add_option("--delta", o->delta, "plain Hulthen range parameter")
                ->check(CLI::PositiveNumber);
  app->add_option("--l", o->l, "angular momentum")->check(CLI::NonNegativeNumber);
  app->add_option("--levels", o->levels, "number of radial levels from the ground state")
      ->check(CLI::PositiveNumber);
  app->add_option("--centrifugal", o->centrifugal, "exact or greene-aldrich")
      ->check(CLI::IsMember({"exact", "greene-aldrich"}));
  app->add_option("--method", o->method, "numerov, fd or both")
      ->check(CLI::IsMember({"numerov", "fd", "both"}));
  app->add_option("--rmax", o->r_max, "grid extent (default: from the potential scale)")
      ->check(CLI::NonNegativeNumber);
  app->add_option("--n", o->n, "grid intervals (default: from the potential scale)")
      ->check(CLI::NonNegativeNumber);
  app->add_flag("--allow-unbound", o->allow_unbound, "report missing levels instead of failing");
  app->add_flag("--no-refine-check", o->no_refine_check, "skip the grid-doubling check");

  Handler h = [o, z, a, lam, w, d](const RunContext& ctx) {
    const double V0 = z->count() ? yukawa::YukawaParams::from_Z(o->Z, 1.0).V0 : o->V0;
    auto make = [&](const std::string& fam) -> radial::Potential {
      if (fam == "coulomb") return radial::Coulomb{V0};
      if (fam == "hulthen") {
        if (!w->count() || !d->count())
          throw InvalidArgument("hulthen needs --W and --delta");
        return radial::Hulthen{o->W, o->delta};
      }
      if (!a->count() && !lam->count()) throw InvalidArgument(fam + " needs --a or --lambda");
      const double lambda = lam->count() ? o->lambda : o->a / 4.0;
      if (fam == "yukawa") return radial::Yukawa{V0, 4.0 * lambda};
      if (fam == "hulthen-approx") return radial::HulthenApprox{V0, lambda};
      return radial::HulthenConsistent{V0, lambda};
    };
    const auto cent = parse_centrifugal(o->centrifugal);
    auto grid_for = [&](const std::vector<radial::Potential>& pots) {
      radial::RadialGrid g;
      g.r_max = 0.0;
      double h = INFINITY;
      for (const auto& p : pots) {
        const auto dg = radial::default_grid({p, o->l, cent}, o->levels - 1);
        g.r_max = std::max(g.r_max, dg.r_max);
        h = std::min(h, dg.r_max / dg.n);
      }
      g.n = static_cast<int>(std::min(std::ceil(g.r_max / h), 2000000.0));
      if (o->r_max > 0.0) g.r_max = o->r_max;
      if (o->n > 0) g.n = o->n;
      g.check_refinement = !o->no_refine_check;
      return g;
    };

    const auto pa = make(o->potential);
    if (o->mode == "compare") {
      const auto pb = make(o->against);
      const auto g = grid_for({pa, pb});
      std::vector<radial::Level> levels;
      for (int n = 0; n < o->levels; ++n) levels.push_back({n, o->l});
      const auto rows = radial::compare_spectra(pa, pb, levels, g, cent);
      Table t;
      t.columns = {"n_radial", "l", "energy_a", "energy_b", "abs_diff", "rel_diff"};
      for (const auto& r : rows) {
        if (!o->allow_unbound && (!r.energy_a || !r.energy_b))
          throw NoBoundState("level n_radial = " + std::to_string(r.n_radial) +
                             " is unbound for one of the potentials");
        t.rows.push_back({double(r.n_radial), double(r.l), r.energy_a, r.energy_b, r.abs_diff,
                          r.rel_diff});
      }
      return std::vector<Artifact>{table_artifact("spectrum_comparison", t, ctx.format)};
    }

    const radial::RadialSpec spec{pa, o->l, cent};
    const auto g = grid_for({pa});
    json j;
    j["potential"] = radial::potential_name(pa);
    j["l"] = o->l;
    j["centrifugal"] = o->centrifugal;
    j["grid"] = {{"r_max", g.r_max}, {"n", g.n}};
    json results = json::array();
    json unbound = json::array();
    std::vector<std::optional<double>> numerov_e(static_cast<std::size_t>(o->levels));
    if (o->method != "fd") {
      for (int n = 0; n < o->levels; ++n) {
        try {
          const auto r = radial::solve_numerov(spec, n, g);
          numerov_e[static_cast<std::size_t>(n)] = r.energy;
          results.push_back(eigen_json(r));
        } catch (const NoBoundState&) {
          if (!o->allow_unbound) throw;
          unbound.push_back(json{{"n_radial", n}, {"method", "numerov"}});
        }
      }
    }
    if (o->method != "numerov") {
      const auto fd = radial::solve_fd_matrix(spec, o->levels, g);
      if (static_cast<int>(fd.size()) < o->levels && !o->allow_unbound)
        throw NoBoundState("only " + std::to_string(fd.size()) + " bound level(s) found");
      for (int n = static_cast<int>(fd.size()); n < o->levels; ++n)
        unbound.push_back(json{{"n_radial", n}, {"method", "fd_matrix"}});
      std::optional<double> gap;
      for (const auto& r : fd) {
        results.push_back(eigen_json(r));
        const auto& ne = numerov_e[static_cast<std::size_t>(r.n_radial)];
        if (ne) gap = std::max(gap.value_or(0.0), std::abs(*ne - r.energy));
      }
      if (o->method == "both") j["max_method_gap"] = optional_json(gap);
    }
    j["results"] = results;
    j["unbound"] = unbound;
    return std::vector<Artifact>{{"bound_states.json", dump(j), false}};
  };
  return {app, h};
}

}  // namespace

std::vector<Command> register_commands(CLI::App& root) {
  return {add_lax_residual(root),   add_pii_integrate(root), add_riccati_verify(root),
          add_schrodinger_evolve(root), add_yukawa_error(root), add_bound_states(root)};
}

}  // namespace painlab::cli
