#include "painlab/yukawa.hpp"

#include <cmath>

namespace painlab::yukawa {

namespace {

void check_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw InvalidArgument(std::string(what) + " must be positive");
}

// sinh(x) - x, accurate for small x.
double sinh_minus_x(double x) {
  if (std::abs(x) > 0.5) return std::sinh(x) - x;
  const double x2 = x * x;
  double term = x * x2 / 6.0;
  double sum = 0.0;
  for (int k = 3; std::abs(term) > 1e-18 * std::abs(sum) || sum == 0.0; k += 2) {
    sum += term;
    term *= x2 / ((k + 1.0) * (k + 2.0));
    if (term == 0.0) break;
  }
  return sum;
}

}  // namespace

YukawaParams YukawaParams::from_Z(int Z, double a) {
  if (Z <= 0) throw InvalidArgument("atomic number must be positive");
  YukawaParams p;
  p.V0 = Z * kFineStructure;
  p.a = a;
  p.Z = Z;
  p.validate();
  return p;
}

void YukawaParams::validate() const {
  check_positive(V0, "V0");
  check_positive(a, "screening parameter a");
  if (Z && std::abs(V0 - *Z * kFineStructure) > 1e-15 * V0)
    throw InvalidArgument("V0 inconsistent with Z / 137.037");
}

double inv_r_approx(double r, double a) {
  check_positive(r, "r");
  check_positive(a, "a");
  return a / std::sinh(a * r);
}

double centrifugal_approx(double r, double a) {
  const double s = inv_r_approx(r, a);
  return s * s;
}

// |x^2/sinh^2 x - 1| = (sinh x - x)(sinh x + x) / sinh^2 x
double centrifugal_rel_error(double r, double a) {
  check_positive(r, "r");
  check_positive(a, "a");
  const double x = a * r;
  const double sh = std::sinh(x);
  return sinh_minus_x(x) * (sh + x) / (sh * sh);
}

double yukawa_exact(double r, const YukawaParams& p) {
  check_positive(r, "r");
  return -p.V0 * std::exp(-2.0 * p.a * r) / r;
}

double beta_abs(double lambda) { return 4.0 * std::sqrt(lambda * lambda + 1.0); }

double yukawa_approx_z(double z, double lambda, double V0) {
  check_positive(z, "z");
  check_positive(lambda, "lambda");
  const double e = std::exp(-8.0 * lambda * z);
  return -V0 * beta_abs(lambda) * e / -std::expm1(-8.0 * lambda * z);
}

double yukawa_approx_consistent(double z, double lambda, double V0) {
  check_positive(z, "z");
  check_positive(lambda, "lambda");
  const double f_abs =
      beta_abs(lambda) * std::exp(-4.0 * lambda * z) / std::abs(std::expm1(-8.0 * lambda * z));
  return -V0 * std::exp(-8.0 * lambda * z) * f_abs;
}

MapReport parameter_map(double lambda) {
  check_positive(lambda, "lambda");
  MapReport m;
  m.lambda = lambda;
  m.a_from_lambda = 4.0 * lambda;
  m.beta_sq_map = 4.0 * m.a_from_lambda * m.a_from_lambda;
  m.beta_abs_paper = beta_abs(lambda);
  m.beta_riccati = -4.0 * cplx{lambda, 1.0};
  const double b2 = m.beta_abs_paper * m.beta_abs_paper;
  m.consistent = std::abs(m.beta_sq_map - b2) <= 1e-12 * std::max(m.beta_sq_map, b2);
  return m;
}

double find_consistent_lambda(double lo, double hi, double tol) {
  double g_lo = parameter_map(lo).gap();
  const double g_hi = parameter_map(hi).gap();
  if (g_lo * g_hi > 0.0) throw NumericalError("no sign change of the beta constraint gap");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double g = parameter_map(mid).gap();
    if ((g < 0.0) == (g_lo < 0.0)) {
      lo = mid;
      g_lo = g;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<ErrorRow> error_profile(std::span<const double> r_grid, const YukawaParams& p,
                                    double lambda) {
  if (r_grid.empty()) throw EmptyGrid();
  p.validate();
  std::vector<ErrorRow> rows;
  rows.reserve(r_grid.size());
  double prev = 0.0;
  for (double r : r_grid) {
    if (!(r > prev)) throw InvalidArgument("radial grid must be positive and ascending");
    prev = r;
    ErrorRow row;
    row.r = r;
    row.v_exact = yukawa_exact(r, p);
    row.v_approx = yukawa_approx_z(r, lambda, p.V0);
    row.v_approx_consistent = yukawa_approx_consistent(r, lambda, p.V0);
    row.abs_err = std::abs(row.v_approx - row.v_exact);
    row.rel_err = row.abs_err / std::abs(row.v_exact);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace painlab::yukawa
