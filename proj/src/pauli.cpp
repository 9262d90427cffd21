#include "painlab/pauli.hpp"

#include <cmath>

namespace painlab::pauli {

namespace {
constexpr cplx kI{0.0, 1.0};
}

PauliMatrix2 PauliMatrix2::sigma(int k) {
  if (k < 0 || k > 3) throw InvalidArgument("Pauli index must be in 0..3");
  PauliMatrix2 m;
  m[k] = 1.0;
  return m;
}

PauliMatrix2& PauliMatrix2::operator+=(const PauliMatrix2& o) {
  for (int k = 0; k < 4; ++k) (*this)[k] += o[k];
  return *this;
}

PauliMatrix2& PauliMatrix2::operator-=(const PauliMatrix2& o) {
  for (int k = 0; k < 4; ++k) (*this)[k] -= o[k];
  return *this;
}

PauliMatrix2& PauliMatrix2::operator*=(cplx s) {
  for (auto& x : c) x *= s;
  return *this;
}

// (a0 + a.s)(b0 + b.s) = a0 b0 + a.b + (a0 b + b0 a + i a x b).s
PauliMatrix2 operator*(const PauliMatrix2& a, const PauliMatrix2& b) {
  PauliMatrix2 r;
  r[0] = a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
  r[1] = a[0] * b[1] + b[0] * a[1] + kI * (a[2] * b[3] - a[3] * b[2]);
  r[2] = a[0] * b[2] + b[0] * a[2] + kI * (a[3] * b[1] - a[1] * b[3]);
  r[3] = a[0] * b[3] + b[0] * a[3] + kI * (a[1] * b[2] - a[2] * b[1]);
  return r;
}

Dense2 compose(cplx c0, cplx c1, cplx c2, cplx c3) {
  Dense2 m;
  m[0][0] = c0 + c3;
  m[0][1] = c1 - kI * c2;
  m[1][0] = c1 + kI * c2;
  m[1][1] = c0 - c3;
  return m;
}

Dense2 compose(const PauliMatrix2& m) { return compose(m[0], m[1], m[2], m[3]); }

PauliMatrix2 decompose(const Dense2& m) {
  PauliMatrix2 r;
  r[0] = 0.5 * (m[0][0] + m[1][1]);
  r[1] = 0.5 * (m[0][1] + m[1][0]);
  r[2] = 0.5 * kI * (m[0][1] - m[1][0]);
  r[3] = 0.5 * (m[0][0] - m[1][1]);
  return r;
}

// [a, b] = 2i (a x b).s; the identity parts drop out.
PauliMatrix2 comm(const PauliMatrix2& a, const PauliMatrix2& b) {
  PauliMatrix2 r;
  r[1] = 2.0 * kI * (a[2] * b[3] - a[3] * b[2]);
  r[2] = 2.0 * kI * (a[3] * b[1] - a[1] * b[3]);
  r[3] = 2.0 * kI * (a[1] * b[2] - a[2] * b[1]);
  return r;
}

PauliMatrix2 acomm(const PauliMatrix2& a, const PauliMatrix2& b) {
  PauliMatrix2 r;
  r[0] = 2.0 * (a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]);
  for (int k = 1; k < 4; ++k) r[k] = 2.0 * (a[0] * b[k] + b[0] * a[k]);
  return r;
}

Dense2 multiply(const Dense2& a, const Dense2& b) {
  Dense2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

Dense2 add(const Dense2& a, const Dense2& b) {
  Dense2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][j] + b[i][j];
  return r;
}

Dense2 subtract(const Dense2& a, const Dense2& b) {
  Dense2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][j] - b[i][j];
  return r;
}

Dense2 comm(const Dense2& a, const Dense2& b) { return subtract(multiply(a, b), multiply(b, a)); }

Dense2 acomm(const Dense2& a, const Dense2& b) { return add(multiply(a, b), multiply(b, a)); }

// tr(M^H M) = 2 sum |c_k|^2 in the Pauli basis.
double fro_norm(const PauliMatrix2& m) {
  double s = 0.0;
  for (const auto& x : m.c) s += std::norm(x);
  return std::sqrt(2.0 * s);
}

double fro_norm(const Dense2& m) {
  double s = 0.0;
  for (const auto& row : m)
    for (const auto& x : row) s += std::norm(x);
  return std::sqrt(s);
}

bool is_finite(const PauliMatrix2& m) {
  for (const auto& x : m.c)
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
  return true;
}

}  // namespace painlab::pauli
