#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles/dual.hpp"
#include "painlab/riccati.hpp"

using namespace painlab;
using namespace painlab::riccati;

namespace {

constexpr cplx I{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

// f and its first two derivatives straight from the defining formula,
// differentiated with nested dual numbers.
struct Jet {
  cplx f, fp, fpp;
};

Jet dual_jet(cplx z, cplx lambda, cplx beta) {
  using D1 = oracle::Dual<cplx>;
  using D2 = oracle::Dual<D1>;
  const D2 zz{D1{z, 1.0}, D1{1.0, 0.0}};
  const D2 l{D1{lambda}}, b{D1{beta}};
  const D2 f = b * exp(D2{D1{-4.0}} * l * zz) / (D2{D1{1.0}} - exp(D2{D1{-8.0}} * l * zz));
  return {f.v.v, f.v.d, f.d.d};
}

}  // namespace

TEST(Riccati, BalancingBeta) {
  EXPECT_EQ(beta_for({0.3, 0.0}), cplx(-1.2, -4.0));
  EXPECT_EQ(beta_for({1.0, 0.5}), cplx(-4.0, -6.0));
}

TEST(Riccati, ClosedFormMatchesDefinition) {
  const cplx l{0.7, 0.2}, b{-1.0, 0.5};
  for (cplx z : {cplx{0.3, 0.1}, cplx{-0.8, 0.4}, cplx{2.0, -1.0}, cplx{-3.0, 0.2}}) {
    const cplx want = b * std::exp(-4.0 * l * z) / (1.0 - std::exp(-8.0 * l * z));
    EXPECT_LT(std::abs(closed_form_f(z, l, b) - want), 1e-13 * std::abs(want));
    EXPECT_EQ(closed_form_delta(z, l), std::exp(4.0 * l * z));
  }
}

TEST(Riccati, JetMatchesDualNumbers) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  int checked = 0;
  while (checked < 200) {
    const cplx z{u(gen), u(gen)}, l{0.2 + std::abs(u(gen)), 0.3 * u(gen)};
    const cplx b = beta_for(l);
    if (pole_margin(z, l) < 0.2) continue;
    const auto want = dual_jet(z, l, b);
    const auto got = closed_form_jet(z, l, b);
    const double s = std::abs(want.f) + std::abs(want.fp) + std::abs(want.fpp);
    EXPECT_LT(std::abs(got.f - want.f), 1e-12 * s);
    EXPECT_LT(std::abs(got.fp - want.fp), 1e-12 * s);
    EXPECT_LT(std::abs(got.fpp - want.fpp), 1e-12 * s);
    ++checked;
  }
}

TEST(Riccati, IdentityHoldsForBalancingBeta) {
  for (cplx l : {cplx{0.3, 0.0}, cplx{1.0, 0.0}, cplx{0.5, 0.4}, cplx{0.9, -0.5}}) {
    const auto rep = verify_identity(l, 200, 7, {}, {-1.0, 1.0, -1.0, 1.0}, 0.5);
    EXPECT_EQ(rep.samples, 200);
    EXPECT_LE(rep.max_residual, 1e-12) << l;
    EXPECT_EQ(rep.beta, beta_for(l));
  }
}

TEST(Riccati, IdentityFailsForPerturbedBeta) {
  for (cplx l : {cplx{0.3, 0.0}, cplx{1.0, 0.0}, cplx{0.5, 0.4}}) {
    const auto rep = verify_identity(l, 200, 7, {}, {-1.0, 1.0, -1.0, 1.0}, 0.5, 1.0 + 1e-3);
    EXPECT_GE(rep.max_residual, 1e-4) << l;
  }
}

TEST(RiccatiProperty, ResidualIsLinearInBetaMismatch) {
  // f - Delta f Delta = -beta exp(4 lambda z) for the closed form, so the
  // residual equals (4 lambda + 4i + beta) Delta.
  const cplx l{0.6, 0.1};
  for (cplx b : {beta_for(l), cplx{1.0, 2.0}, cplx{-3.0, 0.0}})
    for (cplx z : {cplx{0.2, 0.3}, cplx{-0.5, 0.1}, cplx{0.7, -0.6}}) {
      const cplx want = (4.0 * l + 4.0 * I + b) * closed_form_delta(z, l);
      const auto t = riccati_terms(z, l, b);
      EXPECT_LT(std::abs(t.residual - want), 1e-12 * t.scale());
      EXPECT_LT(std::abs(t.f - t.sandwich + b * std::exp(4.0 * l * z)), 1e-12 * t.scale());
    }
}

TEST(Riccati, TermsAreConsistent) {
  const cplx l{0.4, 0.0}, z{0.3, 0.2};
  const auto t = riccati_terms(z, l, beta_for(l));
  const cplx d = closed_form_delta(z, l);
  EXPECT_LT(std::abs(t.delta_prime - 4.0 * l * d), 1e-14);
  EXPECT_LT(std::abs(t.linear + 4.0 * I * d), 1e-14);
  EXPECT_NEAR(t.relative(), std::abs(t.residual) / t.scale(), 0.0);
  EXPECT_LT(std::abs(riccati_residual(z, l, beta_for(l))), 1e-13);
}

TEST(Riccati, SameSeedSameReport) {
  const auto a = verify_identity({0.3, 0.0}, 50, 9, {});
  const auto b = verify_identity({0.3, 0.0}, 50, 9, {});
  EXPECT_EQ(a.max_residual, b.max_residual);
  EXPECT_EQ(a.pole_count_in_window, b.pole_count_in_window);
}

TEST(Riccati, PoleLattice) {
  const cplx l{1.0, 0.0};
  const auto poles = pole_lattice(l, {-1.0, 1.0, -2.0, 2.0});
  ASSERT_EQ(poles.size(), 5u);  // k = -2..2, |pi k / 4| <= 2
  for (std::size_t i = 0; i < poles.size(); ++i) {
    const int k = static_cast<int>(i) - 2;
    EXPECT_LT(std::abs(poles[i] - (-I * kPi * double(k) / 4.0)), 1e-14);
    EXPECT_LT(std::abs(1.0 - std::exp(-8.0 * l * poles[i])), 1e-14);
  }
  // Complex lambda tilts the lattice line.
  const cplx lc{0.5, 0.5};
  for (const cplx& p : pole_lattice(lc, {-3.0, 3.0, -3.0, 3.0}))
    EXPECT_LT(std::abs(1.0 - std::exp(-8.0 * lc * p)), 1e-13);
  EXPECT_THROW(pole_lattice({0.0, 0.0}, {-1.0, 1.0, -1.0, 1.0}), DegenerateLambda);
  EXPECT_TRUE(pole_lattice(l, {1.0, -1.0, 0.0, 0.0}).empty());
}

TEST(Riccati, GuardRejectsPoles) {
  const cplx l{1.0, 0.0};
  const cplx pole = -I * kPi / 4.0;
  EXPECT_THROW(closed_form_f(pole + 1e-9, l, beta_for(l)), NearPole);
  EXPECT_THROW(closed_form_f({0.0, 0.0}, l, beta_for(l)), NearPole);
  EXPECT_NO_THROW(closed_form_f(pole + 1e-3, l, beta_for(l)));
  EXPECT_THROW(closed_form_f(pole + 1e-3, l, beta_for(l), {1e-1}), NearPole);
}

TEST(RiccatiProperty, ClosedFormResidualShiftsLinearlyAlongLattice) {
  // f is periodic with period P = i pi / (2 lambda); the only explicit z in
  // the equation is -4zf, so residual(z + P) - residual(z) = 4 P f(z).
  const lax::SpectralParams sp{{0.8, 0.0}, {0.0, 0.0}, 1.0};
  const cplx P = I * kPi / (2.0 * sp.lambda);
  for (cplx z : {cplx{0.3, 0.1}, cplx{-0.4, 0.25}, cplx{0.9, -0.3}}) {
    const cplx r0 = qpii_residual_of_closed_form(z, sp);
    const cplx r1 = qpii_residual_of_closed_form(z + P, sp);
    const cplx f = closed_form_f(z, sp.lambda, beta_for(sp.lambda));
    EXPECT_LT(std::abs(r1 - r0 - 4.0 * P * f), 1e-11 * std::max(1.0, std::abs(r0)));
  }
}

TEST(Riccati, ClosedFormIsNotAQpiiSolution) {
  const lax::SpectralParams sp{{0.8, 0.0}, {0.0, 0.0}, 1.0};
  EXPECT_GT(std::abs(qpii_residual_of_closed_form({0.3, 0.1}, sp)), 1e-2);
}

TEST(Riccati, PoleMarginIsSymmetric) {
  const cplx l{0.5, 0.1};
  for (cplx z : {cplx{0.3, 0.2}, cplx{-1.0, 0.4}})
    EXPECT_NEAR(pole_margin(z, l), pole_margin(-z, l), 1e-14);
}
