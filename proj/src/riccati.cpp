#include "painlab/riccati.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace painlab::riccati {

namespace {

constexpr cplx kI{0.0, 1.0};
constexpr double kPi = 3.14159265358979323846;

// exp(w) - 1 without cancellation for small |w|.
cplx cexpm1(cplx w) {
  const double x = w.real();
  const double y = w.imag();
  const double em1 = std::expm1(x);
  const double s = std::sin(0.5 * y);
  return {em1 * std::cos(y) - 2.0 * s * s, (em1 + 1.0) * std::sin(y)};
}

// 1 - exp(-8 lambda z)
cplx pole_denominator(cplx z, cplx lambda) { return -cexpm1(-8.0 * lambda * z); }

void guard_check(cplx z, cplx lambda, PoleGuard guard) {
  if (!(guard.min_denominator > 0.0)) throw InvalidArgument("pole guard must be positive");
  if (std::abs(pole_denominator(z, lambda)) < guard.min_denominator) throw NearPole(z);
}

// With u = exp(-4 lambda z):
//   g  = u / (1 - u^2)                       (odd under u -> 1/u)
//   h1 = u (1 + u^2) / (1 - u^2)^2           (even)
//   h2 = u (1 + 6u^2 + u^4) / (1 - u^2)^3    (odd)
// f = beta g, f' = -4 lambda beta h1, f'' = 16 lambda^2 beta h2.
// Evaluating with whichever of u, 1/u has modulus <= 1 avoids overflow.
struct Shape {
  cplx g, h1, h2;
};

Shape shape(cplx z, cplx lambda) {
  const cplx e = -4.0 * lambda * z;
  const bool inside = e.real() <= 0.0;
  const cplx w = std::exp(inside ? e : -e);
  const cplx one_minus_w2 = -cexpm1(inside ? 2.0 * e : -2.0 * e);
  const cplx w2 = w * w;
  const cplx d = one_minus_w2;
  Shape s{w / d, w * (1.0 + w2) / (d * d), w * (1.0 + 6.0 * w2 + w2 * w2) / (d * d * d)};
  if (!inside) {
    s.g = -s.g;
    s.h2 = -s.h2;
  }
  return s;
}

}  // namespace

cplx beta_for(cplx lambda) { return -4.0 * (lambda + kI); }

cplx closed_form_delta(cplx z, cplx lambda) { return std::exp(4.0 * lambda * z); }

cplx closed_form_f(cplx z, cplx lambda, cplx beta, PoleGuard guard) {
  guard_check(z, lambda, guard);
  return beta * shape(z, lambda).g;
}

ClosedFormJet closed_form_jet(cplx z, cplx lambda, cplx beta, PoleGuard guard) {
  guard_check(z, lambda, guard);
  const Shape s = shape(z, lambda);
  return {beta * s.g, -4.0 * lambda * beta * s.h1, 16.0 * lambda * lambda * beta * s.h2};
}

double RiccatiTerms::scale() const {
  return std::max({std::abs(delta_prime), std::abs(linear), std::abs(f), std::abs(sandwich)});
}

RiccatiTerms riccati_terms(cplx z, cplx lambda, cplx beta, PoleGuard guard) {
  RiccatiTerms t;
  const cplx delta = closed_form_delta(z, lambda);
  t.f = closed_form_f(z, lambda, beta, guard);
  t.delta_prime = 4.0 * lambda * delta;
  t.linear = -4.0 * kI * delta;
  t.sandwich = delta * t.f * delta;
  // [f, Delta] vanishes for commuting scalars.
  t.residual = t.delta_prime - (t.linear + t.f - t.sandwich);
  return t;
}

cplx riccati_residual(cplx z, cplx lambda, cplx beta, PoleGuard guard) {
  return riccati_terms(z, lambda, beta, guard).residual;
}

std::vector<cplx> pole_lattice(cplx lambda, const Rect& region) {
  if (lambda == cplx{}) throw DegenerateLambda();
  std::vector<cplx> poles;
  if (region.empty()) return poles;
  const cplx step = -kI * kPi / (4.0 * lambda);
  const double step2 = std::norm(step);
  double t_lo = INFINITY;
  double t_hi = -INFINITY;
  for (double re : {region.re_min, region.re_max})
    for (double im : {region.im_min, region.im_max}) {
      const double t = (cplx{re, im} * std::conj(step)).real() / step2;
      t_lo = std::min(t_lo, t);
      t_hi = std::max(t_hi, t);
    }
  const auto k_lo = static_cast<long long>(std::floor(t_lo)) - 1;
  const auto k_hi = static_cast<long long>(std::ceil(t_hi)) + 1;
  const double tol = 1e-12 * (1.0 + std::abs(step) * static_cast<double>(std::max(-k_lo, k_hi)));
  const Rect padded{region.re_min - tol, region.re_max + tol, region.im_min - tol,
                    region.im_max + tol};
  for (long long k = k_lo; k <= k_hi; ++k) {
    const cplx z = static_cast<double>(k) * step;
    if (padded.contains(z)) poles.push_back(z);
  }
  return poles;
}

cplx qpii_residual_of_closed_form(cplx z, cplx beta, const SpectralParams& sp, PoleGuard guard) {
  const ClosedFormJet jet = closed_form_jet(z, sp.lambda, beta, guard);
  return lax::qpii_rhs_residual({z, jet.f, jet.fp, jet.fpp}, sp);
}

double pole_margin(cplx z, cplx lambda) {
  return std::min(std::abs(cexpm1(-8.0 * lambda * z)), std::abs(cexpm1(8.0 * lambda * z)));
}

VerifyReport verify_identity(cplx lambda, int samples, std::uint64_t seed, PoleGuard guard,
                             const Rect& window, double margin, double beta_scale) {
  if (samples <= 0) throw InvalidArgument("samples must be positive");
  if (window.empty()) throw InvalidArgument("empty sampling window");
  VerifyReport rep;
  rep.beta = beta_for(lambda) * beta_scale;
  rep.window = window;
  rep.pole_count_in_window = static_cast<int>(pole_lattice(lambda, window).size());

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(window.re_min, window.re_max);
  std::uniform_real_distribution<double> im(window.im_min, window.im_max);
  const long long max_attempts = 1000LL * samples;
  long long attempts = 0;
  while (rep.samples < samples) {
    if (++attempts > max_attempts)
      throw NumericalError("could not find enough pole-free sample points");
    const cplx z{re(rng), im(rng)};
    if (pole_margin(z, lambda) < margin) continue;
    if (std::abs(pole_denominator(z, lambda)) < guard.min_denominator) continue;
    const RiccatiTerms t = riccati_terms(z, lambda, rep.beta, guard);
    rep.max_residual = std::max(rep.max_residual, t.relative());
    ++rep.samples;
  }
  return rep;
}

}  // namespace painlab::riccati
