#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "painlab/lax.hpp"
#include "painlab/painleve2.hpp"
#include "painlab/radial.hpp"
#include "painlab/riccati.hpp"
#include "painlab/schrodinger.hpp"
#include "painlab/yukawa.hpp"

namespace py = pybind11;
using namespace painlab;

namespace {

// (kind, strength, screening); screening is a, lambda or delta depending on kind.
radial::Potential make_potential(const std::string& kind, double strength, double screening) {
  if (kind == "yukawa") return radial::Yukawa{strength, screening};
  if (kind == "hulthen-approx") return radial::HulthenApprox{strength, screening};
  if (kind == "hulthen-consistent") return radial::HulthenConsistent{strength, screening};
  if (kind == "coulomb") return radial::Coulomb{strength};
  if (kind == "hulthen") return radial::Hulthen{strength, screening};
  throw InvalidArgument("unknown potential '" + kind + "'");
}

radial::Centrifugal make_centrifugal(const std::string& name) {
  if (name == "exact") return radial::Centrifugal::exact;
  if (name == "greene-aldrich") return radial::Centrifugal::greene_aldrich;
  throw InvalidArgument("unknown centrifugal term '" + name + "'");
}

schrodinger::TimeConvention make_convention(const std::string& name) {
  if (name == "printed") return schrodinger::TimeConvention::printed;
  if (name == "standard") return schrodinger::TimeConvention::standard;
  throw InvalidArgument("unknown convention '" + name + "'");
}

radial::RadialGrid grid_or_default(const radial::RadialSpec& s, int levels, std::optional<double> r_max,
                                   std::optional<int> n) {
  radial::RadialGrid g = radial::default_grid(s, levels - 1);
  if (r_max) g.r_max = *r_max;
  if (n) g.n = *n;
  return g;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "painlab core bindings";
  m.attr("__version__") = PAINLAB_VERSION;

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

  m.def(
      "lax_residual",
      [](cplx z, cplx f, cplx fp, cplx fpp, cplx lambda, cplx c, double hbar) {
        const auto r = lax::zero_curvature_residual({z, f, fp, fpp}, {lambda, c, hbar});
        return std::vector<cplx>{r[0], r[1], r[2], r[3]};
      },
      py::arg("z"), py::arg("f"), py::arg("fp"), py::arg("fpp"), py::arg("lam") = cplx{1.0, 0.0},
      py::arg("c") = cplx{}, py::arg("hbar") = 1.0,
      "Pauli coefficients (c0, c1, c2, c3) of the zero-curvature residual.");

  m.def(
      "integrate_pii",
      [](cplx f0, cplx fp0, cplx z0, cplx direction, double length, int steps, double tol, cplx lambda,
         cplx c, double hbar) {
        const pii::RaySpec ray{z0, direction / std::abs(direction), length, steps, tol};
        py::list out;
        for (const auto& s : pii::integrate({z0, f0, fp0}, ray, {lambda, c, hbar}))
          out.append(py::make_tuple(s.z, s.f, s.fp));
        return out;
      },
      py::arg("f0"), py::arg("fp0"), py::arg("z0") = cplx{}, py::arg("direction") = cplx{1.0, 0.0},
      py::arg("length") = 1.0, py::arg("steps") = 0, py::arg("tol") = 1e-10,
      py::arg("lam") = cplx{1.0, 0.0}, py::arg("c") = cplx{}, py::arg("hbar") = 1.0,
      "Integrate quantum Painleve II along a ray; returns [(z, f, f'), ...]. "
      "steps > 0 selects fixed-step RK4, otherwise adaptive Dormand-Prince.");

  m.def(
      "riccati_residual",
      [](cplx z, cplx lambda, std::optional<cplx> beta) {
        const auto t = riccati::riccati_terms(z, lambda, beta.value_or(riccati::beta_for(lambda)));
        return py::dict(py::arg("residual") = t.residual, py::arg("relative") = t.relative());
      },
      py::arg("z"), py::arg("lam"), py::arg("beta") = py::none(),
      "Residual of the Riccati identity for the closed form; beta defaults to -4(lambda + i).");

  m.def(
      "verify_riccati",
      [](cplx lambda, int samples, std::uint64_t seed, double margin) {
        const auto r = riccati::verify_identity(lambda, samples, seed, {}, {-1.0, 1.0, -1.0, 1.0}, margin);
        return py::dict(py::arg("max_residual") = r.max_residual, py::arg("samples") = r.samples,
                        py::arg("beta") = r.beta, py::arg("pole_count_in_window") = r.pole_count_in_window);
      },
      py::arg("lam"), py::arg("samples") = 200, py::arg("seed") = 0, py::arg("margin") = 0.0);

  m.def(
      "schrodinger_ansatz_check",
      [](cplx lambda, cplx f0, cplx fp0, double x_min, double x_max, int nx, double dt, int steps,
         const std::string& convention) {
        using namespace schrodinger;
        PhysicalParams p;
        p.lambda = lambda;
        p.convention = make_convention(convention);
        p.alpha = matched_alpha(p.convention);
        const GridSpec g{x_min, x_max, nx};
        const auto prof = qpii_profile(g, p, f0, fp0);
        const auto src = profile_source(prof);
        const Boundary b{[&](double t) { return ansatz_psi(g.x_min, t, p, src); },
                         [&](double t) { return ansatz_psi(g.x_max, t, p, src); }};
        const auto out = propagate_cn(ansatz_field(prof, 0.0, p), sample_potential(prof, p), dt, steps, p, b);
        return py::dict(py::arg("l2_dev") = relative_l2(out, ansatz_field(prof, out.t, p)),
                        py::arg("t_final") = out.t, py::arg("alpha") = p.alpha);
      },
      py::arg("lam") = cplx{1.0, 0.0}, py::arg("f0") = cplx{0.1, 0.0}, py::arg("fp0") = cplx{},
      py::arg("x_min") = -1.0, py::arg("x_max") = 1.0, py::arg("nx") = 201, py::arg("dt") = 1e-4,
      py::arg("steps") = 500, py::arg("convention") = "printed",
      "Crank-Nicolson evolution of f(z(x)) exp(i alpha t) against the ansatz; relative L2 deviation.");

  m.def("centrifugal_approx", &yukawa::centrifugal_approx, py::arg("r"), py::arg("a"));

  m.def(
      "parameter_map",
      [](double lambda) {
        const auto r = yukawa::parameter_map(lambda);
        return py::dict(py::arg("lambda") = r.lambda, py::arg("a") = r.a_from_lambda,
                        py::arg("beta_sq_map") = r.beta_sq_map, py::arg("beta_abs") = r.beta_abs_paper,
                        py::arg("beta_riccati") = r.beta_riccati, py::arg("consistent") = r.consistent,
                        py::arg("gap") = r.gap());
      },
      py::arg("lam"));

  m.def("find_consistent_lambda", [] { return yukawa::find_consistent_lambda(); });

  m.def(
      "yukawa_error",
      [](const std::vector<double>& r, double V0, double a, double lambda) {
        py::list out;
        for (const auto& row : yukawa::error_profile(r, {V0, a, {}}, lambda))
          out.append(py::dict(py::arg("r") = row.r, py::arg("V_exact") = row.v_exact,
                              py::arg("V_approx") = row.v_approx,
                              py::arg("V_approx_consistent") = row.v_approx_consistent,
                              py::arg("abs_err") = row.abs_err, py::arg("rel_err") = row.rel_err));
        return out;
      },
      py::arg("r"), py::arg("V0"), py::arg("a"), py::arg("lam"));

  m.def(
      "bound_states",
      [](const std::string& kind, double strength, double screening, int l, int levels,
         const std::string& method, const std::string& centrifugal, std::optional<double> r_max,
         std::optional<int> n) {
        const radial::RadialSpec s{make_potential(kind, strength, screening), l, make_centrifugal(centrifugal)};
        const auto g = grid_or_default(s, levels, r_max, n);
        std::vector<radial::EigenResult> res;
        if (method == "fd") {
          res = radial::solve_fd_matrix(s, levels, g);
        } else if (method == "numerov") {
          for (int k = 0; k < levels; ++k) {
            try {
              res.push_back(radial::solve_numerov(s, k, g));
            } catch (const NoBoundState&) {
              break;
            }
          }
        } else {
          throw InvalidArgument("method must be 'numerov' or 'fd'");
        }
        std::vector<double> energies;
        for (const auto& e : res) energies.push_back(e.energy);
        return energies;
      },
      py::arg("kind"), py::arg("strength"), py::arg("screening") = 0.0, py::arg("l") = 0,
      py::arg("levels") = 1, py::arg("method") = "numerov", py::arg("centrifugal") = "exact",
      py::arg("r_max") = py::none(), py::arg("n") = py::none(),
      "Bound energies (units hbar = 2m = 1) in order of radial quantum number; stops at the first unbound level.");

  m.def(
      "compare_spectra",
      [](const std::string& kind_a, double strength_a, double screening_a, const std::string& kind_b,
         double strength_b, double screening_b, int l, int levels, double r_max, int n) {
        std::vector<radial::Level> lv;
        for (int k = 0; k < levels; ++k) lv.push_back({k, l});
        py::list out;
        for (const auto& row : radial::compare_spectra(make_potential(kind_a, strength_a, screening_a),
                                                       make_potential(kind_b, strength_b, screening_b), lv,
                                                       {r_max, n, true, 1e-6}))
          out.append(py::dict(py::arg("n_radial") = row.n_radial, py::arg("l") = row.l,
                              py::arg("energy_a") = row.energy_a, py::arg("energy_b") = row.energy_b,
                              py::arg("abs_diff") = row.abs_diff, py::arg("rel_diff") = row.rel_diff));
        return out;
      },
      py::arg("kind_a"), py::arg("strength_a"), py::arg("screening_a"), py::arg("kind_b"),
      py::arg("strength_b"), py::arg("screening_b"), py::arg("l") = 0, py::arg("levels") = 1,
      py::arg("r_max") = 200.0, py::arg("n") = 100000);

  m.def("hulthen_analytic_s", &radial::hulthen_analytic_s, py::arg("W"), py::arg("delta"), py::arg("n"));
}
