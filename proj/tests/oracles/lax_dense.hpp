#pragma once

#include <array>
#include <complex>

#include "oracles/dual.hpp"

// Dense-matrix evaluation of the zero-curvature residual
//   R = dA/dz - dB/dlambda + AB - BA
// with the derivatives taken by forward-mode dual numbers instead of by hand.
namespace oracle {

using cplx = std::complex<double>;

template <class T>
using Mat = std::array<std::array<T, 2>, 2>;

// a0 I + a1 s1 + a2 s2 + a3 s3 with s2 = [[0,-i],[i,0]].
template <class T>
Mat<T> from_pauli(T a0, T a1, T a2, T a3) {
  const T i{cplx{0.0, 1.0}};
  return {{{a0 + a3, a1 - i * a2}, {a1 + i * a2, a0 - a3}}};
}

template <class T>
Mat<T> lax_A(T z, T f, T fp, T lambda, cplx c, double hbar) {
  const T i{cplx{0.0, 1.0}};
  const T a3 = i * (T{8.0} * lambda * lambda + f * f - T{2.0} * z);
  const T a2 = fp + i * T{hbar};
  const T a1 = T{c} / (T{4.0} * lambda) - T{4.0} * lambda * f;
  return from_pauli(T{}, a1, a2, a3);
}

template <class T>
Mat<T> lax_B(T f, T lambda) {
  const T i{cplx{0.0, 1.0}};
  return from_pauli(f, f, T{}, T{-2.0} * i * lambda);
}

inline Mat<cplx> mat_mul(const Mat<cplx>& a, const Mat<cplx>& b) {
  Mat<cplx> r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

inline Mat<cplx> dense_residual(cplx z, cplx f, cplx fp, cplx fpp, cplx lambda, cplx c,
                                double hbar) {
  using D = Dual<cplx>;
  // d/dz: z carries 1, f carries f', f' carries f''.
  const auto Az = lax_A<D>(D{z, 1.0}, D{f, fp}, D{fp, fpp}, D{lambda}, c, hbar);
  const auto Bl = lax_B<D>(D{f}, D{lambda, 1.0});
  Mat<cplx> A{}, B{}, R{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      A[i][j] = Az[i][j].v;
      B[i][j] = Bl[i][j].v;
    }
  const auto AB = mat_mul(A, B);
  const auto BA = mat_mul(B, A);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) R[i][j] = Az[i][j].d - Bl[i][j].d + AB[i][j] - BA[i][j];
  return R;
}

// Pauli coefficients (c0, c1, c2, c3) of a dense matrix.
inline std::array<cplx, 4> to_pauli(const Mat<cplx>& m) {
  const cplx i{0.0, 1.0};
  return {0.5 * (m[0][0] + m[1][1]), 0.5 * (m[0][1] + m[1][0]), 0.5 * i * (m[0][1] - m[1][0]),
          0.5 * (m[0][0] - m[1][1])};
}

}  // namespace oracle
