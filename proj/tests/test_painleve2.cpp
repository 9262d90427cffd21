#include <gtest/gtest.h>

#include <boost/math/special_functions/airy.hpp>
#include <cmath>

#include "oracles/airy.hpp"
#include "painlab/painleve2.hpp"

using namespace painlab;
using namespace painlab::pii;

namespace {

const double kCbrt4 = std::cbrt(4.0);

// Linearized equation f'' = -4 z f is solved by Ai(-4^{1/3} z).
PIIState airy_state(double z, double eps) {
  const auto a = oracle::airy_series(-kCbrt4 * z);
  return {{z, 0.0}, {eps * a.ai, 0.0}, {-eps * kCbrt4 * a.aip, 0.0}};
}

cplx endpoint(const PIIState& init, RaySpec ray, const SpectralParams& sp) {
  return integrate(init, ray, sp).back().f;
}

}  // namespace

TEST(AiryOracle, SeriesAgreesWithBoost) {
  for (double x = -4.0; x <= 4.0; x += 0.01) {
    const auto a = oracle::airy_series(x);
    EXPECT_NEAR(a.ai, boost::math::airy_ai(x), 1e-13);
    EXPECT_NEAR(a.aip, boost::math::airy_ai_prime(x), 1e-13);
  }
}

TEST(Painleve2, Rk4IsFourthOrder) {
  const SpectralParams sp{{1.0, 0.0}, {0.3, 0.1}, 1.0};
  const PIIState init{{}, {0.5, 0.0}, {0.2, -0.1}};
  RaySpec ray{{0.0, 0.0}, std::polar(1.0, 0.3), 1.0, 0, 1e-13};
  const cplx ref = endpoint(init, ray, sp);
  double prev = 0.0;
  for (int n : {20, 40, 80, 160}) {
    ray.steps = n;
    const double err = std::abs(endpoint(init, ray, sp) - ref);
    if (prev > 0.0) EXPECT_NEAR(std::log2(prev / err), 4.0, 0.2) << "steps " << n;
    prev = err;
  }
}

TEST(Painleve2, AdaptiveMeetsTolerance) {
  const SpectralParams sp{{1.0, 0.0}, {0.0, 0.0}, 0.5};
  const PIIState init{{}, {0.3, 0.2}, {0.1, 0.0}};
  RaySpec ray{{0.0, 0.0}, {1.0, 0.0}, 1.5, 4000, 0.0};
  const cplx ref = endpoint(init, ray, sp);  // RK4, error ~1e-14
  ray.steps = 0;
  ray.tolerance = 1e-10;
  EXPECT_LT(std::abs(endpoint(init, ray, sp) - ref), 1e-8);
}

TEST(Painleve2, SmallAmplitudeFollowsAiry) {
  const double eps = 1e-4;
  const SpectralParams sp{{1.0, 0.0}, {0.0, 0.0}, 0.0};
  const RaySpec ray{{-2.0, 0.0}, {1.0, 0.0}, 2.0, 400, 0.0};
  const auto traj = integrate(airy_state(-2.0, eps), ray, sp);
  for (const auto& s : traj) {
    const double want = airy_state(s.z.real(), eps).f.real();
    EXPECT_LT(std::abs(s.f - want) / std::abs(want), 1e-4) << "z = " << s.z.real();
  }
}

TEST(Painleve2, ZeroSolutionIsExact) {
  const SpectralParams sp{{1.0, 0.0}, {0.0, 0.0}, 1.0};
  for (int steps : {0, 50}) {
    const RaySpec ray{{-1.0, 0.5}, {0.6, 0.8}, 3.0, steps, 1e-10};
    for (const auto& s : integrate({{}, {}, {}}, ray, sp)) {
      EXPECT_EQ(s.f, cplx{});
      EXPECT_EQ(s.fp, cplx{});
    }
  }
}

TEST(Painleve2Property, OddSymmetryForVanishingConstant) {
  // With c = 0 the right-hand side is odd in f, so f -> -f maps solutions
  // to solutions; negation is exact in floating point.
  const SpectralParams sp{{1.0, 0.0}, {0.0, 0.0}, 0.8};
  const RaySpec ray{{0.0, 0.0}, {0.0, 1.0}, 1.0, 100, 0.0};
  const auto a = integrate({{}, {0.4, 0.1}, {0.2, -0.3}}, ray, sp);
  const auto b = integrate({{}, {-0.4, -0.1}, {-0.2, 0.3}}, ray, sp);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a[k].f, -b[k].f);
}

TEST(Painleve2Property, IntegratingBackRecoversStart) {
  const SpectralParams sp{{1.0, 0.0}, {0.2, 0.0}, 1.0};
  const PIIState init{{}, {0.3, -0.1}, {0.5, 0.2}};
  const RaySpec fwd{{0.2, 0.1}, {1.0, 0.0}, 1.0, 0, 1e-12};
  const auto end = integrate(init, fwd, sp).back();
  const RaySpec back{end.z, {-1.0, 0.0}, 1.0, 0, 1e-12};
  const auto start = integrate(end, back, sp).back();
  EXPECT_LT(std::abs(start.f - init.f), 1e-9);
  EXPECT_LT(std::abs(start.fp - init.fp), 1e-9);
  EXPECT_LT(std::abs(start.z - fwd.z0), 1e-12);
}

TEST(Painleve2, TrajectoryHitsEndpoints) {
  const SpectralParams sp{};
  const RaySpec ray{{0.5, -0.5}, {0.0, 1.0}, 1.0, 0, 1e-9};
  const auto traj = integrate({{}, {0.1, 0.0}, {0.0, 0.0}}, ray, sp);
  EXPECT_EQ(traj.front().z, ray.z0);
  EXPECT_LT(std::abs(traj.back().z - cplx{0.5, 0.5}), 1e-14);
  EXPECT_THROW(integrate({{}, {0.1, 0.0}, {}}, {{}, {0.0, 2.0}, 1.0, 0, 1e-9}, sp), InvalidArgument);
}

TEST(Painleve2, PoleIsReportedAsBlowUp) {
  // Real classical solution with large data reaches a pole near z = 0.39.
  const SpectralParams sp{{1.0, 0.0}, {0.0, 0.0}, 0.0};
  for (int steps : {0, 1000}) {
    const RaySpec ray{{0.0, 0.0}, {1.0, 0.0}, 5.0, steps, 1e-10};
    try {
      integrate({{}, {3.0, 0.0}, {3.0, 0.0}}, ray, sp);
      FAIL() << "expected BlowUp";
    } catch (const BlowUp& e) {
      EXPECT_GT(e.z_at().real(), 0.3);
      EXPECT_LT(e.z_at().real(), 0.45);
    }
  }
}

TEST(Painleve2, FixedStepResidualIsSmallAndShrinks) {
  const SpectralParams sp{{1.0, 0.0}, {0.1, 0.0}, 1.0};
  const PIIState init{{}, {0.2, 0.1}, {0.1, 0.0}};
  double prev = 0.0;
  for (int n : {100, 200, 400}) {
    const RaySpec ray{{0.0, 0.0}, {0.0, 1.0}, 1.0, n, 0.0};
    const double r = max_abs(trajectory_residual(integrate(init, ray, sp), sp));
    if (prev > 0.0) EXPECT_NEAR(std::log2(prev / r), 2.0, 0.3);
    prev = r;
  }
  EXPECT_LT(prev, 1e-4);
}

TEST(Painleve2, ResidualInputChecks) {
  const SpectralParams sp{};
  const RaySpec fixed{{0.0, 0.0}, {1.0, 0.0}, 1.0, 3, 0.0};
  EXPECT_THROW(trajectory_residual(integrate({{}, {0.1, 0.0}, {}}, fixed, sp), sp), TooFewSamples);
  Trajectory uneven{{{0.0, 0.0}, {}, {}}, {{0.1, 0.0}, {}, {}}, {{0.3, 0.0}, {}, {}},
                    {{0.4, 0.0}, {}, {}}, {{0.5, 0.0}, {}, {}}};
  EXPECT_THROW(trajectory_residual(uneven, sp), GridMismatch);
}
