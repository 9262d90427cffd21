#pragma once

#include "painlab/pauli.hpp"

namespace painlab::lax {

using pauli::PauliMatrix2;

/// Parameters of the quantum Painleve II system.
struct SpectralParams {
  cplx lambda{1.0, 0.0};
  cplx c{0.0, 0.0};
  double hbar = 1.0;
};

/// Point of a solution together with its first two z-derivatives.
struct JetPoint {
  cplx z;
  cplx f;
  cplx fp;
  cplx fpp;
};

/// A = (8i lambda^2 + i f^2 - 2i z) s3 + (f' + i hbar) s2 + (c/(4 lambda) - 4 lambda f) s1.
/// Throws SingularSpectralParam when lambda = 0 and c != 0.
PauliMatrix2 build_A(const JetPoint& p, const SpectralParams& sp);

/// B = -2i lambda s3 + f s1 + f I.
PauliMatrix2 build_B(cplx z, cplx f, const SpectralParams& sp);

/// Total z-derivative of A along the jet (f' and f'' enter through the chain rule).
PauliMatrix2 dz_A(const JetPoint& p, const SpectralParams& sp);

/// Partial lambda-derivative of B; it does not depend on the jet.
PauliMatrix2 dlambda_B(const SpectralParams& sp);

/// R = dA/dz - dB/dlambda + [A, B], the compatibility residual of
/// Psi_lambda = A Psi, Psi_z = B Psi.
///
/// For commuting scalars the coefficients reduce to
///   R = (0, 4i lambda hbar, f'' - 2f^3 + 4zf - c, 2 hbar f).
/// The sigma1 and sigma3 parts are proportional to hbar and survive at the
/// scalar level; see split_residual().
PauliMatrix2 zero_curvature_residual(const JetPoint& p, const SpectralParams& sp);

/// Separates R into the part that encodes the classical equation and the
/// hbar-proportional leftovers.
struct ResidualSplit {
  cplx classical;        // sigma2 coefficient
  cplx quantum_sigma1;   // 4i lambda hbar
  cplx quantum_sigma3;   // 2 hbar f
  cplx identity;         // always zero for scalar jets
};
ResidualSplit split_residual(const PauliMatrix2& r);

/// 2 f^3 - 4 z f - 2i hbar f + c.
cplx qpii_rhs(cplx z, cplx f, const SpectralParams& sp);

/// f'' - (2 f^3 - 4 z f - 2i hbar f + c); zero iff the jet satisfies the scalar equation.
cplx qpii_rhs_residual(const JetPoint& p, const SpectralParams& sp);

}  // namespace painlab::lax
