#include "painlab/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace painlab::tridiag {

void solve(std::span<const cplx> lower, std::span<const cplx> diag, std::span<const cplx> upper,
           std::span<cplx> rhs) {
  const std::size_t n = diag.size();
  if (lower.size() != n || upper.size() != n || rhs.size() != n)
    throw InvalidArgument("tridiagonal bands must have equal length");
  if (n == 0) return;
  std::vector<cplx> c(n);
  cplx piv = diag[0];
  if (std::abs(piv) == 0.0) throw SingularStep();
  c[0] = upper[0] / piv;
  rhs[0] /= piv;
  for (std::size_t i = 1; i < n; ++i) {
    piv = diag[i] - lower[i] * c[i - 1];
    if (std::abs(piv) == 0.0 || !std::isfinite(std::abs(piv))) throw SingularStep();
    c[i] = upper[i] / piv;
    rhs[i] = (rhs[i] - lower[i] * rhs[i - 1]) / piv;
  }
  for (std::size_t i = n - 1; i-- > 0;) rhs[i] -= c[i] * rhs[i + 1];
}

std::size_t count_below(const SymTridiag& t, double x) {
  const std::size_t n = t.size();
  constexpr double kTiny = std::numeric_limits<double>::min() * 1e10;
  std::size_t count = 0;
  double q = t.d[0] - x;
  if (q == 0.0) q = -kTiny;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < n; ++i) {
    q = t.d[i] - x - t.e[i - 1] * t.e[i - 1] / q;
    if (q == 0.0) q = -kTiny;
    if (q < 0.0) ++count;
  }
  return count;
}

std::pair<double, double> gershgorin(const SymTridiag& t) {
  const std::size_t n = t.size();
  double lo = INFINITY;
  double hi = -INFINITY;
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(t.e[i - 1]);
    if (i + 1 < n) r += std::abs(t.e[i]);
    lo = std::min(lo, t.d[i] - r);
    hi = std::max(hi, t.d[i] + r);
  }
  return {lo, hi};
}

double eigenvalue(const SymTridiag& t, std::size_t index, double tol) {
  if (index >= t.size()) throw InvalidArgument("eigenvalue index out of range");
  auto [lo, hi] = gershgorin(t);
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (count_below(t, mid) > index)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> eigenvector(const SymTridiag& t, double eigenvalue, int iterations) {
  const std::size_t n = t.size();
  // Nudge the shift off the eigenvalue so the factorization stays regular.
  const double shift = eigenvalue + 1e-10 * std::max(1.0, std::abs(eigenvalue));
  std::vector<double> x(n, 1.0);
  std::vector<double> c(n);
  std::vector<double> y(n);
  for (int it = 0; it < iterations; ++it) {
    double piv = t.d[0] - shift;
    if (piv == 0.0) piv = 1e-300;
    c[0] = (n > 1 ? t.e[0] : 0.0) / piv;
    y[0] = x[0] / piv;
    for (std::size_t i = 1; i < n; ++i) {
      piv = t.d[i] - shift - t.e[i - 1] * c[i - 1];
      if (piv == 0.0) piv = 1e-300;
      c[i] = (i + 1 < n ? t.e[i] : 0.0) / piv;
      y[i] = (x[i] - t.e[i - 1] * y[i - 1]) / piv;
    }
    for (std::size_t i = n - 1; i-- > 0;) y[i] -= c[i] * y[i + 1];
    double norm = 0.0;
    for (double v : y) norm += v * v;
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  return x;
}

int count_sign_changes(std::span<const double> values, double floor) {
  double mx = 0.0;
  for (double v : values) mx = std::max(mx, std::abs(v));
  const double cut = floor * mx;
  int changes = 0;
  int last = 0;
  for (double v : values) {
    if (std::abs(v) <= cut) continue;
    const int s = v > 0.0 ? 1 : -1;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace painlab::tridiag
