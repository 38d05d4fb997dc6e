#include <gtest/gtest.h>

#include <cmath>

#include "symplecto/errors.hpp"
#include "symplecto/trig/trig_polynomial.hpp"
#include "symplecto/validation/oracles.hpp"
#include "symplecto/verify/generators.hpp"

using namespace symplecto;
using trig::Phase;
using trig::TrigMode;
using trig::TrigPolynomial;

namespace {

const double kTwoPi = 2.0 * M_PI;

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double r = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) r = std::max(r, std::abs(a[i] - b[i]));
  return r;
}

}  // namespace

TEST(TrigCanonical, NegatedWavevectorFlipsSineOnly) {
  auto [cmode, csign] = trig::canonicalize(TrigMode{{-1}, {2}, Phase::Cos});
  EXPECT_EQ(cmode, (TrigMode{{1}, {-2}, Phase::Cos}));
  EXPECT_EQ(csign, 1.0);
  auto [smode, ssign] = trig::canonicalize(TrigMode{{0}, {-3}, Phase::Sin});
  EXPECT_EQ(smode, (TrigMode{{0}, {3}, Phase::Sin}));
  EXPECT_EQ(ssign, -1.0);
}

TEST(TrigCanonical, EquivalentSpellingsCompareEqual) {
  TrigPolynomial a(1);
  a.add(TrigMode{{-1}, {-1}, Phase::Sin}, 2.0);
  a.add(TrigMode{{-2}, {0}, Phase::Cos}, 1.0);
  const TrigPolynomial b = TrigPolynomial::sin1(1, 1, -2.0) + TrigPolynomial::cos1(2, 0);
  EXPECT_EQ(a, b);
}

TEST(TrigCanonical, SineOfZeroVanishesCosineIsConstant) {
  TrigPolynomial p(1);
  p.add(TrigMode{{0}, {0}, Phase::Sin}, 3.0);
  EXPECT_TRUE(p.empty());
  p.add(TrigMode{{0}, {0}, Phase::Cos}, 3.0);
  EXPECT_TRUE(p.has_constant());
}

TEST(TrigCanonical, CancellationPrunesTerm) {
  const TrigPolynomial a = TrigPolynomial::cos1(1, 2, 0.25);
  EXPECT_TRUE((a - a).empty());
}

TEST(TrigCanonical, CanonicalFormPreservesPointValues) {
  verify::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    TrigPolynomial raw(2);
    std::vector<std::pair<TrigMode, double>> modes;
    for (int t = 0; t < 4; ++t) {
      TrigMode mode{{verify::uniform_int(rng, -3, 3), verify::uniform_int(rng, -3, 3)},
                    {verify::uniform_int(rng, -3, 3), verify::uniform_int(rng, -3, 3)},
                    verify::uniform_int(rng, 0, 1) == 0 ? Phase::Cos : Phase::Sin};
      const double c = verify::uniform_real(rng, -1, 1);
      modes.emplace_back(mode, c);
      raw.add(mode, c);
    }
    const double x[2] = {verify::uniform_real(rng, 0, kTwoPi), verify::uniform_real(rng, 0, kTwoPi)};
    const double y[2] = {verify::uniform_real(rng, 0, kTwoPi), verify::uniform_real(rng, 0, kTwoPi)};
    double direct = 0.0;
    for (const auto& [mode, c] : modes) {
      const double arg = mode.n[0] * x[0] + mode.n[1] * x[1] + mode.m[0] * y[0] + mode.m[1] * y[1];
      direct += c * (mode.phase == Phase::Cos ? std::cos(arg) : std::sin(arg));
    }
    EXPECT_NEAR(raw.evaluate(x, y), direct, 1e-12);
  }
}

TEST(TrigBracket, CosXCosY) {
  const auto b = trig::poisson_bracket(TrigPolynomial::cos1(1, 0), TrigPolynomial::cos1(0, 1));
  const TrigPolynomial expected = TrigPolynomial::cos1(1, -1, -0.5) + TrigPolynomial::cos1(1, 1, 0.5);
  EXPECT_EQ(b, expected);
}

TEST(TrigBracket, CommutingPairsVanish) {
  const auto f = TrigPolynomial::cos1(2, 1) + TrigPolynomial::sin1(1, 3, 0.5);
  EXPECT_TRUE(trig::poisson_bracket(f, f).empty());
  EXPECT_TRUE(
      trig::poisson_bracket(TrigPolynomial::cos1(1, 0), TrigPolynomial::sin1(1, 0)).empty());
}

TEST(TrigBracket, ConstantIsCentral) {
  TrigPolynomial c(1);
  c.add(TrigMode{{0}, {0}, Phase::Cos}, 2.0);
  EXPECT_TRUE(trig::poisson_bracket(c, TrigPolynomial::cos1(1, 2)).empty());
}

TEST(TrigBracket, SinSinSignPattern) {
  // {sin x, sin y} = F_y H_x - F_x H_y = -cos x cos y
  const auto b = trig::poisson_bracket(TrigPolynomial::sin1(1, 0), TrigPolynomial::sin1(0, 1));
  const TrigPolynomial expected =
      TrigPolynomial::cos1(1, -1, -0.5) + TrigPolynomial::cos1(1, 1, -0.5);
  EXPECT_EQ(b, expected);
}

TEST(TrigBracket, DimensionMismatchThrows) {
  EXPECT_THROW(
      trig::poisson_bracket(TrigPolynomial::cos1(1, 0), TrigPolynomial::mode({1, 0}, {0, 0}, Phase::Cos)),
      DimensionMismatch);
  EXPECT_THROW(trig::l2_inner(TrigPolynomial(1), TrigPolynomial(2)), DimensionMismatch);
}

TEST(TrigBracket, MatchesFiniteDifferenceOracleAt256) {
  verify::Rng rng(3);
  for (int trial = 0; trial < 3; ++trial) {
    const auto f = verify::random_trig(rng, 1, 4, 4);
    const auto h = verify::random_trig(rng, 1, 4, 4);
    const auto exact = validation::sample_grid(trig::poisson_bracket(f, h), 256);
    const auto fd = validation::fd_bracket(f, h, 256);
    EXPECT_LT(max_abs_diff(exact, fd), 1e-8);
  }
}

TEST(TrigBracketProperty, AntisymmetryAndJacobi) {
  verify::Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int q = 1 + trial % 2;
    const auto f = verify::random_trig(rng, q, 3, 3, verify::Coefficients::Dyadic);
    const auto g = verify::random_trig(rng, q, 3, 3, verify::Coefficients::Dyadic);
    const auto h = verify::random_trig(rng, q, 3, 3, verify::Coefficients::Dyadic);
    EXPECT_TRUE((trig::poisson_bracket(f, g) + trig::poisson_bracket(g, f)).empty());
    const auto jacobi = trig::poisson_bracket(f, trig::poisson_bracket(g, h)) +
                        trig::poisson_bracket(g, trig::poisson_bracket(h, f)) +
                        trig::poisson_bracket(h, trig::poisson_bracket(f, g));
    EXPECT_TRUE(jacobi.empty()) << "max coeff " << jacobi.max_abs_coeff();
  }
}

TEST(TrigBracketProperty, Bilinear) {
  verify::Rng rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = verify::random_trig(rng, 1, 3, 4, verify::Coefficients::Dyadic);
    const auto g = verify::random_trig(rng, 1, 3, 4, verify::Coefficients::Dyadic);
    const auto h = verify::random_trig(rng, 1, 3, 4, verify::Coefficients::Dyadic);
    const auto lhs = trig::poisson_bracket(f + 2.0 * g, h);
    const auto rhs = trig::poisson_bracket(f, h) + 2.0 * trig::poisson_bracket(g, h);
    EXPECT_TRUE((lhs - rhs).empty());
  }
}

TEST(TrigLaplacian, ModeEigenvalues) {
  EXPECT_EQ(trig::laplacian(TrigPolynomial::cos1(2, 1)), TrigPolynomial::cos1(2, 1, 5.0));
  EXPECT_EQ(trig::laplacian(TrigPolynomial::mode({1, 1}, {0, 2}, Phase::Sin)),
            TrigPolynomial::mode({1, 1}, {0, 2}, Phase::Sin, 6.0));
}

TEST(TrigLaplacian, InverseRoundTripAndConstantError) {
  verify::Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = verify::random_trig(rng, 1 + trial % 3, 4, 3);
    EXPECT_LT(trig::max_coeff_distance(trig::inverse_laplacian(trig::laplacian(f)), f), 1e-15);
  }
  TrigPolynomial c(1);
  c.add(TrigMode{{0}, {0}, Phase::Cos}, 1.0);
  EXPECT_THROW(trig::inverse_laplacian(c + TrigPolynomial::cos1(1, 0)), DomainError);
}

TEST(TrigLaplacian, MatchesFiniteDifferenceOracle) {
  const auto f = TrigPolynomial::cos1(1, 0) + TrigPolynomial::sin1(0, 3, 0.5) +
                 TrigPolynomial::cos1(2, -1, 0.25);
  const auto exact = validation::sample_grid(trig::laplacian(f), 128);
  EXPECT_LT(max_abs_diff(exact, validation::fd_laplacian(f, 128)), 1e-8);
}

TEST(TrigInner, CosineNormAndOrthogonality) {
  EXPECT_NEAR(trig::l2_inner(TrigPolynomial::cos1(1, 0), TrigPolynomial::cos1(1, 0)),
              0.5 * kTwoPi * kTwoPi, 1e-12);
  EXPECT_EQ(trig::l2_inner(TrigPolynomial::cos1(1, 0), TrigPolynomial::sin1(1, 0)), 0.0);
  EXPECT_EQ(trig::l2_inner(TrigPolynomial::cos1(1, 0), TrigPolynomial::cos1(0, 1)), 0.0);
  EXPECT_NEAR(trig::right_inner(TrigPolynomial::cos1(1, 2), TrigPolynomial::cos1(1, 2)),
              2.5 * kTwoPi * kTwoPi, 1e-11);
  EXPECT_NEAR(trig::torus_volume(2), std::pow(kTwoPi, 4), 1e-9);
}

TEST(TrigInner, MatchesGridQuadrature) {
  verify::Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = verify::random_trig(rng, 1, 4, 5);
    const auto h = verify::random_trig(rng, 1, 4, 5);
    std::vector<double> prod = validation::sample_grid(f, 64);
    const auto hs = validation::sample_grid(h, 64);
    for (std::size_t i = 0; i < prod.size(); ++i) prod[i] *= hs[i];
    EXPECT_NEAR(trig::l2_inner(f, h), validation::grid_integral(prod, 64), 1e-10);
    EXPECT_NEAR(trig::right_inner(f, h), validation::grid_metric(f, h, 64), 1e-9);
  }
}

TEST(TrigInnerProperty, AdInvariance) {
  verify::Rng rng(10);
  for (int trial = 0; trial < 100; ++trial) {
    const int q = 1 + trial % 2;
    const auto f = verify::random_trig(rng, q, 3, 3);
    const auto h = verify::random_trig(rng, q, 3, 3);
    const auto g = verify::random_trig(rng, q, 3, 3);
    EXPECT_LT(std::abs(trig::ad_invariance_defect(f, h, g)), 1e-10 * trig::torus_volume(q));
  }
}

TEST(TrigInnerProperty, RightInnerSymmetricAndPositive) {
  verify::Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = verify::random_trig(rng, 1 + trial % 3, 4, 3);
    const auto h = verify::random_trig(rng, 1 + trial % 3, 4, 3);
    EXPECT_NEAR(trig::right_inner(f, h), trig::right_inner(h, f),
                1e-12 * trig::torus_volume(f.q()) * (1 + std::abs(trig::right_inner(f, h))));
    EXPECT_GT(trig::right_inner(f, f), 0.0);
  }
}
