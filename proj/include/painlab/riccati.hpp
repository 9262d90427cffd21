#pragma once

#include <cstdint>
#include <vector>

#include "painlab/lax.hpp"

namespace painlab::riccati {

using lax::SpectralParams;

struct ClosedFormParams {
  cplx lambda;
  cplx beta;
};

struct PoleGuard {
  double min_denominator = 1e-6;
};

/// Axis-aligned rectangle in the complex plane. Empty when a bound is inverted.
struct Rect {
  double re_min = 0.0;
  double re_max = 0.0;
  double im_min = 0.0;
  double im_max = 0.0;
  bool empty() const { return re_min > re_max || im_min > im_max; }
  bool contains(cplx z) const {
    return z.real() >= re_min && z.real() <= re_max && z.imag() >= im_min && z.imag() <= im_max;
  }
};

/// -4 (lambda + i): the value that balances the Riccati equation.
cplx beta_for(cplx lambda);

/// Delta = exp(4 lambda z).
cplx closed_form_delta(cplx z, cplx lambda);

/// f = beta exp(-4 lambda z) / (1 - exp(-8 lambda z)).
/// Throws NearPole when |1 - exp(-8 lambda z)| < guard.min_denominator.
cplx closed_form_f(cplx z, cplx lambda, cplx beta, PoleGuard guard = {});

/// f, f', f'' of the closed form, differentiated exactly in u = exp(-4 lambda z).
struct ClosedFormJet {
  cplx f;
  cplx fp;
  cplx fpp;
};
ClosedFormJet closed_form_jet(cplx z, cplx lambda, cplx beta, PoleGuard guard = {});

/// The individual terms of Delta' = -4i Delta + f + [f, Delta] - Delta f Delta.
struct RiccatiTerms {
  cplx delta_prime;  // 4 lambda Delta
  cplx linear;       // -4i Delta
  cplx f;
  cplx sandwich;     // Delta f Delta
  cplx residual;     // delta_prime - (linear + f - sandwich)
  double scale() const;  // largest term magnitude
  double relative() const { return std::abs(residual) / scale(); }
};
RiccatiTerms riccati_terms(cplx z, cplx lambda, cplx beta, PoleGuard guard = {});

/// Delta' - (-4i Delta + f - Delta f Delta). The scalar commutator is zero.
cplx riccati_residual(cplx z, cplx lambda, cplx beta, PoleGuard guard = {});

/// Zeros of 1 - exp(-8 lambda z), i.e. z_k = -i pi k / (4 lambda), inside the
/// region, ordered by k. Throws DegenerateLambda for lambda = 0.
std::vector<cplx> pole_lattice(cplx lambda, const Rect& region);

/// f'' - (2f^3 - 4zf - 2i hbar f + c) on the closed-form jet. This is a
/// measurement; the closed form is not expected to solve the equation.
cplx qpii_residual_of_closed_form(cplx z, cplx beta, const SpectralParams& sp,
                                  PoleGuard guard = {});
inline cplx qpii_residual_of_closed_form(cplx z, const SpectralParams& sp, PoleGuard guard = {}) {
  return qpii_residual_of_closed_form(z, beta_for(sp.lambda), sp, guard);
}

/// min(|1 - exp(-8 lambda z)|, |1 - exp(8 lambda z)|). Large values keep
/// every Riccati term of comparable size.
double pole_margin(cplx z, cplx lambda);

/// Randomized check of the Riccati identity at fixed lambda.
struct VerifyReport {
  double max_residual = 0.0;  // relative to the largest term
  int samples = 0;
  cplx beta;
  int pole_count_in_window = 0;
  Rect window;
};

/// Samples z uniformly in `window`, rejecting points with pole_margin below
/// `margin` or failing the pole guard, and evaluates the relative residual.
VerifyReport verify_identity(cplx lambda, int samples, std::uint64_t seed, PoleGuard guard,
                             const Rect& window = {-1.0, 1.0, -1.0, 1.0}, double margin = 0.0,
                             double beta_scale = 1.0);

}  // namespace painlab::riccati
