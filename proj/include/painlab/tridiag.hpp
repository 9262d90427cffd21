#pragma once

#include <span>
#include <vector>

#include "painlab/errors.hpp"

namespace painlab::tridiag {

/// Solves a tridiagonal system in place (Thomas algorithm, no pivoting).
/// lower[0] and upper[n-1] are ignored. Throws SingularStep on a zero pivot.
void solve(std::span<const cplx> lower, std::span<const cplx> diag, std::span<const cplx> upper,
           std::span<cplx> rhs);

/// Symmetric real tridiagonal matrix: diagonal d[0..n), off-diagonal e[0..n-1).
struct SymTridiag {
  std::vector<double> d;
  std::vector<double> e;
  std::size_t size() const { return d.size(); }
};

/// Number of eigenvalues strictly below x (Sturm sequence count).
std::size_t count_below(const SymTridiag& t, double x);

/// Gershgorin interval containing the spectrum.
std::pair<double, double> gershgorin(const SymTridiag& t);

/// The index-th smallest eigenvalue (0-based) by bisection on the Sturm
/// count, to absolute width `tol`.
double eigenvalue(const SymTridiag& t, std::size_t index, double tol = 1e-13);

/// Eigenvector for a known eigenvalue by inverse iteration, unit 2-norm.
std::vector<double> eigenvector(const SymTridiag& t, double eigenvalue, int iterations = 3);

/// Sign changes of a sampled function, ignoring samples below `floor` times
/// the maximum magnitude.
int count_sign_changes(std::span<const double> values, double floor = 1e-12);

}  // namespace painlab::tridiag
