#pragma once

#include <complex>

// Exact solution of psi_t = k psi_xx (complex k) for the initial packet
// exp(-a y^2 + b y), y = x - x0:
//   psi = (1 + 4 a k t)^{-1/2} exp((-a y^2 + b y + b^2 k t) / (1 + 4 a k t)).
namespace oracle {

using cplx = std::complex<double>;

struct FreeGaussian {
  double a;
  cplx b;
  double x0;
  cplx k;

  cplx operator()(double x, double t) const {
    const double y = x - x0;
    const cplx s = 1.0 + 4.0 * a * k * t;
    return std::exp((-a * y * y + b * y + b * b * k * t) / s) / std::sqrt(s);
  }
};

}  // namespace oracle
