#include "painlab/lax.hpp"

#include <cmath>

namespace painlab::lax {

namespace {

constexpr cplx kI{0.0, 1.0};

bool finite(cplx x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); }

void check_jet(const JetPoint& p, const SpectralParams& sp) {
  if (!finite(p.z) || !finite(p.f) || !finite(p.fp) || !finite(p.fpp) || !finite(sp.lambda) ||
      !finite(sp.c) || !std::isfinite(sp.hbar))
    throw InvalidArgument("non-finite jet or spectral parameter");
}

cplx c_over_4lambda(const SpectralParams& sp) {
  if (sp.c == cplx{}) return {};
  if (sp.lambda == cplx{}) throw SingularSpectralParam();
  return sp.c / (4.0 * sp.lambda);
}

}  // namespace

PauliMatrix2 build_A(const JetPoint& p, const SpectralParams& sp) {
  check_jet(p, sp);
  const cplx lam = sp.lambda;
  PauliMatrix2 a;
  a[1] = c_over_4lambda(sp) - 4.0 * lam * p.f;
  a[2] = p.fp + kI * sp.hbar;
  a[3] = kI * (8.0 * lam * lam + p.f * p.f - 2.0 * p.z);
  return a;
}

PauliMatrix2 build_B(cplx z, cplx f, const SpectralParams& sp) {
  check_jet({z, f, {}, {}}, sp);
  PauliMatrix2 b;
  b[0] = f;
  b[1] = f;
  b[3] = -2.0 * kI * sp.lambda;
  return b;
}

PauliMatrix2 dz_A(const JetPoint& p, const SpectralParams& sp) {
  check_jet(p, sp);
  PauliMatrix2 d;
  d[1] = -4.0 * sp.lambda * p.fp;
  d[2] = p.fpp;
  d[3] = kI * (2.0 * p.f * p.fp - 2.0);
  return d;
}

PauliMatrix2 dlambda_B(const SpectralParams&) {
  PauliMatrix2 d;
  d[3] = -2.0 * kI;
  return d;
}

PauliMatrix2 zero_curvature_residual(const JetPoint& p, const SpectralParams& sp) {
  const PauliMatrix2 a = build_A(p, sp);
  const PauliMatrix2 b = build_B(p.z, p.f, sp);
  return dz_A(p, sp) - dlambda_B(sp) + pauli::comm(a, b);
}

ResidualSplit split_residual(const PauliMatrix2& r) { return {r[2], r[1], r[3], r[0]}; }

cplx qpii_rhs(cplx z, cplx f, const SpectralParams& sp) {
  check_jet({z, f, {}, {}}, sp);
  return 2.0 * f * f * f - 4.0 * z * f - 2.0 * kI * sp.hbar * f + sp.c;
}

cplx qpii_rhs_residual(const JetPoint& p, const SpectralParams& sp) {
  return p.fpp - qpii_rhs(p.z, p.f, sp);
}

}  // namespace painlab::lax
