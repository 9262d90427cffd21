#pragma once

#include <cmath>

// Maclaurin series of the Airy function, Ai = c1 f - c2 g with
//   f = sum 3^k (1/3)_k x^{3k} / (3k)!,  g = sum 3^k (2/3)_k x^{3k+1} / (3k+1)!.
// Accurate to near machine precision for |x| <= 4.
namespace oracle {

inline constexpr double kAiryC1 = 0.355028053887817239;
inline constexpr double kAiryC2 = 0.258819403792806798;

struct AiryValue {
  double ai;
  double aip;
};

inline AiryValue airy_series(double x) {
  const double x3 = x * x * x;
  // f, g and their derivatives term by term.
  double tf = 1.0, tg = x;         // current terms of f and g
  double dtf = 0.0, dtg = 1.0;     // current terms of f' and g'
  double f = 0.0, g = 0.0, fp = 0.0, gp = 0.0;
  for (int k = 0; k < 200; ++k) {
    f += tf;
    g += tg;
    fp += dtf;
    gp += dtg;
    const double kf = 3.0 * k;
    // f: x^{3k} -> x^{3k+3} picks up x^3 / ((3k+2)(3k+3)); derivatives follow.
    tf *= x3 / ((kf + 2.0) * (kf + 3.0));
    tg *= x3 / ((kf + 3.0) * (kf + 4.0));
    dtf = tf * (kf + 3.0) / (x == 0.0 ? 1.0 : x);
    dtg = tg * (kf + 4.0) / (x == 0.0 ? 1.0 : x);
    if (x == 0.0) dtf = dtg = 0.0;
    if (std::abs(tf) + std::abs(tg) < 1e-19 * (std::abs(f) + std::abs(g))) break;
  }
  return {kAiryC1 * f - kAiryC2 * g, kAiryC1 * fp - kAiryC2 * gp};
}

}  // namespace oracle
