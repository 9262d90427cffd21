#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "painlab/yukawa.hpp"

using namespace painlab;
using namespace painlab::yukawa;

TEST(Yukawa, GreeneAldrichErrorLaw) {
  for (double a : {0.1, 1.0, 3.0})
    for (double x = 1e-4; x <= 0.05; x += 1e-3) {
      const double ratio = centrifugal_rel_error(x / a, a) / (x * x / 3.0);
      EXPECT_GE(ratio, 0.9);
      EXPECT_LE(ratio, 1.1);
    }
}

TEST(Yukawa, GreeneAldrichErrorAgreesWithDirectEvaluation) {
  for (double x : {0.3, 1.0, 2.5}) {
    const double direct = std::abs(centrifugal_approx(x, 1.0) - 1.0 / (x * x)) * x * x;
    EXPECT_NEAR(centrifugal_rel_error(x, 1.0), direct, 1e-14);
  }
}

TEST(Yukawa, CentrifugalValueAtUnitArguments) {
  EXPECT_NEAR(centrifugal_approx(1.0, 1.0), 0.724062, 1e-6);
  // 4a^2 e^{-2ar} / (1 - e^{-2ar})^2 written out.
  const double e = std::exp(-2.0);
  EXPECT_NEAR(centrifugal_approx(1.0, 1.0), 4.0 * e / ((1.0 - e) * (1.0 - e)), 1e-15);
}

TEST(YukawaProperty, PositiveBranch) {
  for (double a : {0.01, 0.5, 2.0})
    for (double r = 0.01; r < 50.0; r *= 1.7) {
      const double s = inv_r_approx(r, a);
      EXPECT_GT(s, 0.0);
      EXPECT_NEAR(s * s, centrifugal_approx(r, a), 1e-12 * s * s);
    }
}

TEST(YukawaProperty, ApproximationIsPlainHulthenForm) {
  for (double lambda : {0.05, 0.3, 1.0})
    for (double z = 0.05; z < 10.0; z *= 1.5) {
      const double W = 1.3 * beta_abs(lambda), delta = 8.0 * lambda;
      const double hulthen = -W * std::exp(-delta * z) / (1.0 - std::exp(-delta * z));
      EXPECT_NEAR(yukawa_approx_z(z, lambda, 1.3), hulthen, 1e-13 * std::abs(hulthen));
    }
}

TEST(Yukawa, ConsistentVariantCarriesExtraFactor) {
  for (double lambda : {0.1, 0.5})
    for (double z : {0.1, 1.0, 3.0})
      EXPECT_NEAR(yukawa_approx_consistent(z, lambda, 1.0),
                  yukawa_approx_z(z, lambda, 1.0) * std::exp(-4.0 * lambda * z),
                  1e-13 * std::abs(yukawa_approx_z(z, lambda, 1.0)));
}

TEST(Yukawa, ParameterMapAtUnitLambda) {
  const auto m = parameter_map(1.0);
  EXPECT_DOUBLE_EQ(m.a_from_lambda, 4.0);
  EXPECT_DOUBLE_EQ(m.beta_sq_map, 64.0);
  EXPECT_NEAR(m.beta_abs_paper * m.beta_abs_paper, 32.0, 1e-13);
  EXPECT_EQ(m.beta_riccati, cplx(-4.0, -4.0));
  EXPECT_FALSE(m.consistent);
}

TEST(YukawaProperty, ParameterMapConsistentOnlyAtOneLambda) {
  const double root = find_consistent_lambda();
  EXPECT_NEAR(root, 1.0 / std::sqrt(3.0), 1e-9);
  EXPECT_TRUE(parameter_map(1.0 / std::sqrt(3.0)).consistent);
  for (double l = 0.01; l < 5.0; l *= 1.1)
    if (std::abs(l - root) > 1e-6) EXPECT_FALSE(parameter_map(l).consistent) << l;
}

TEST(Yukawa, ParameterMapCoulombLimit) {
  EXPECT_LT(parameter_map(1e-9).a_from_lambda, 1e-8);
  EXPECT_THROW(parameter_map(0.0), InvalidArgument);
}

TEST(Yukawa, ErrorProfileColumns) {
  const YukawaParams p{1.0, 0.4, {}};
  const std::vector<double> r{0.1, 0.5, 1.0, 2.0};
  const auto rows = error_profile(r, p, 0.1);
  ASSERT_EQ(rows.size(), r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    EXPECT_EQ(rows[i].v_exact, yukawa_exact(r[i], p));
    EXPECT_EQ(rows[i].v_approx, yukawa_approx_z(r[i], 0.1, 1.0));
    EXPECT_EQ(rows[i].abs_err, std::abs(rows[i].v_approx - rows[i].v_exact));
    EXPECT_EQ(rows[i].rel_err, rows[i].abs_err / std::abs(rows[i].v_exact));
  }
}

TEST(Yukawa, ErrorProfileSmallRadiusLimit) {
  // Near the origin V_approx ~ -V0 |beta| / (8 lambda r) while V_exact ~ -V0 / r,
  // so rel_err tends to |sqrt(lambda^2 + 1) / (2 lambda) - 1|, which vanishes
  // only at lambda = 1/sqrt(3).
  for (double lambda : {0.05, 0.2, 1.0 / std::sqrt(3.0), 1.0}) {
    const YukawaParams p{1.0, 4.0 * lambda, {}};
    const std::vector<double> r{1e-7};
    const double limit = std::abs(std::sqrt(lambda * lambda + 1.0) / (2.0 * lambda) - 1.0);
    EXPECT_NEAR(error_profile(r, p, lambda)[0].rel_err, limit, 1e-5) << lambda;
  }
}

TEST(Yukawa, ErrorProfileMonotoneBelowConsistentLambda) {
  for (double lambda : {0.025, 0.1, 0.5}) {
    const double a = 4.0 * lambda;
    const YukawaParams p{1.0, a, {}};
    std::vector<double> r;
    for (int i = 1; i <= 400; ++i) r.push_back(i / (400.0 * a));
    const auto rows = error_profile(r, p, lambda);
    for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_GT(rows[i].rel_err, rows[i - 1].rel_err);
  }
}

TEST(Yukawa, InputChecks) {
  const YukawaParams p{1.0, 0.4, {}};
  EXPECT_THROW(error_profile(std::vector<double>{}, p, 0.1), EmptyGrid);
  EXPECT_THROW(error_profile(std::vector<double>{1.0, 0.5}, p, 0.1), InvalidArgument);
  EXPECT_THROW(error_profile(std::vector<double>{-1.0}, p, 0.1), InvalidArgument);
  EXPECT_THROW(centrifugal_approx(0.0, 1.0), InvalidArgument);
  EXPECT_THROW((YukawaParams{-1.0, 0.1, {}}.validate()), InvalidArgument);
}

TEST(Yukawa, AtomicNumberSetsStrength) {
  const auto p = YukawaParams::from_Z(6, 0.2);
  EXPECT_DOUBLE_EQ(p.V0, 6.0 / 137.037);
  EXPECT_THROW(YukawaParams::from_Z(0, 0.2), InvalidArgument);
}
