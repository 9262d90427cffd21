#pragma once

#include <array>

#include "painlab/errors.hpp"

namespace painlab::pauli {

/// Dense row-major 2x2 complex matrix.
using Dense2 = std::array<std::array<cplx, 2>, 2>;

/// 2x2 complex matrix held as coefficients of (I, sigma1, sigma2, sigma3).
///
/// Convention: sigma1 = [[0,1],[1,0]], sigma2 = [[0,-i],[i,0]],
/// sigma3 = [[1,0],[0,-1]]. Products and commutators are evaluated in
/// coefficient form; dense matrices are only produced on request.
struct PauliMatrix2 {
  std::array<cplx, 4> c{};

  static PauliMatrix2 identity() { return {{1.0, 0.0, 0.0, 0.0}}; }
  static PauliMatrix2 sigma(int k);

  cplx& operator[](int k) { return c[static_cast<std::size_t>(k)]; }
  const cplx& operator[](int k) const { return c[static_cast<std::size_t>(k)]; }

  PauliMatrix2& operator+=(const PauliMatrix2& o);
  PauliMatrix2& operator-=(const PauliMatrix2& o);
  PauliMatrix2& operator*=(cplx s);

  friend PauliMatrix2 operator+(PauliMatrix2 a, const PauliMatrix2& b) { return a += b; }
  friend PauliMatrix2 operator-(PauliMatrix2 a, const PauliMatrix2& b) { return a -= b; }
  friend PauliMatrix2 operator*(cplx s, PauliMatrix2 a) { return a *= s; }
  friend PauliMatrix2 operator*(PauliMatrix2 a, cplx s) { return a *= s; }
  friend PauliMatrix2 operator*(const PauliMatrix2& a, const PauliMatrix2& b);
  friend bool operator==(const PauliMatrix2&, const PauliMatrix2&) = default;
};

Dense2 compose(cplx c0, cplx c1, cplx c2, cplx c3);
Dense2 compose(const PauliMatrix2& m);

/// c0 = tr(M)/2, ck = tr(sigma_k M)/2.
PauliMatrix2 decompose(const Dense2& m);

PauliMatrix2 comm(const PauliMatrix2& a, const PauliMatrix2& b);
PauliMatrix2 acomm(const PauliMatrix2& a, const PauliMatrix2& b);

Dense2 multiply(const Dense2& a, const Dense2& b);
Dense2 add(const Dense2& a, const Dense2& b);
Dense2 subtract(const Dense2& a, const Dense2& b);
Dense2 comm(const Dense2& a, const Dense2& b);
Dense2 acomm(const Dense2& a, const Dense2& b);

double fro_norm(const PauliMatrix2& m);
double fro_norm(const Dense2& m);

bool is_finite(const PauliMatrix2& m);

}  // namespace painlab::pauli
