#include <gtest/gtest.h>

#include <cmath>

#include "symplecto/euler/euler_solver.hpp"
#include "symplecto/validation/oracles.hpp"
#include "symplecto/verify/generators.hpp"

using namespace symplecto;
using spectral::Dealias;
using spectral::GridSpec;
using spectral::SpectralField;
using trig::TrigPolynomial;

namespace {

euler::SolverConfig small_config(int n, double dt, long steps) {
  euler::SolverConfig cfg;
  cfg.grid = GridSpec(n, Dealias::TwoThirds);
  cfg.dt = dt;
  cfg.steps = steps;
  cfg.on_warning = [](const std::string&) {};
  return cfg;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(EulerRhs, EigenfunctionsAreStationary) {
  const GridSpec grid(32, Dealias::TwoThirds);
  for (const auto& f0 : {TrigPolynomial::cos1(1, 0), TrigPolynomial::cos1(1, 0) + TrigPolynomial::cos1(0, 1),
                         TrigPolynomial::cos1(2, 1) + TrigPolynomial::sin1(1, -2, 0.5)}) {
    EXPECT_LT(euler::rhs(euler::initial_vorticity(f0, grid)).max_abs_coeff(), 1e-14);
  }
}

TEST(EulerRhs, MatchesSymbolicBracket) {
  const GridSpec grid(64, Dealias::TwoThirds);
  verify::Rng rng(1);
  for (int trial = 0; trial < 5; ++trial) {
    const auto f0 = verify::random_trig(rng, 1, 5, 8);
    const auto expected = trig::poisson_bracket(trig::laplacian(f0), f0);
    const auto got = euler::rhs(euler::initial_vorticity(f0, grid)).to_trig(0.0);
    EXPECT_LT(trig::max_coeff_distance(got, expected), 1e-10 * (1 + expected.max_abs_coeff()));
  }
}

TEST(EulerRhs, TwoModeExample) {
  // F = cos x + cos 2y, w = cos x + 4 cos 2y:
  // {w, F} = {cos x, cos 2y} + 4 {cos 2y, cos x} = -3 {cos x, cos 2y}
  //        = -3 * (1/2)(-2)(cos(x-2y) - cos(x+2y)) = 3 cos(x-2y) - 3 cos(x+2y)
  const GridSpec grid(32, Dealias::TwoThirds);
  const auto w = euler::initial_vorticity(TrigPolynomial::cos1(1, 0) + TrigPolynomial::cos1(0, 2), grid);
  const TrigPolynomial expected = TrigPolynomial::cos1(1, -2, 3.0) + TrigPolynomial::cos1(1, 2, -3.0);
  EXPECT_LT(trig::max_coeff_distance(euler::rhs(w).to_trig(), expected), 1e-13);
}

TEST(EulerStep, ZeroStepIsIdentity) {
  const GridSpec grid(32, Dealias::TwoThirds);
  const auto w = euler::initial_vorticity(TrigPolynomial::cos1(1, 0) + TrigPolynomial::cos1(0, 2), grid);
  const auto same = euler::step(w, 0.0);
  for (std::size_t i = 0; i < w.raw().size(); ++i) EXPECT_EQ(same.raw()[i], w.raw()[i]);
}

TEST(EulerStep, NonFiniteStateRaisesDivergence) {
  const GridSpec grid(32, Dealias::TwoThirds);
  auto w = euler::initial_vorticity(TrigPolynomial::cos1(1, 0), grid);
  w.set_coeff(2, 1, {std::nan(""), 0.0});
  try {
    euler::step(w, 1e-3, 17);
    FAIL() << "expected DivergenceError";
  } catch (const euler::DivergenceError& e) {
    EXPECT_EQ(e.step(), 17);
  }
}

TEST(EulerInitial, OutOfBandInitialConditionRejected) {
  EXPECT_THROW(euler::initial_vorticity(TrigPolynomial::cos1(11, 0), GridSpec(32, Dealias::TwoThirds)),
               DomainError);
  EXPECT_NO_THROW(euler::initial_vorticity(TrigPolynomial::cos1(10, 0), GridSpec(32, Dealias::TwoThirds)));
}

TEST(EulerInvariants, EnergyAndCasimirsOfCosX) {
  const GridSpec grid(32, Dealias::TwoThirds);
  const auto w = euler::initial_vorticity(TrigPolynomial::cos1(1, 0), grid);
  EXPECT_NEAR(euler::energy(w), M_PI * M_PI, 1e-13);
  EXPECT_NEAR(euler::casimir(w, 2), 2 * M_PI * M_PI, 1e-12);
  EXPECT_NEAR(euler::casimir(w, 3), 0.0, 1e-12);
  // int cos^4 x over T^2 = (3/8) (2 pi)^2
  EXPECT_NEAR(euler::casimir(w, 4), 1.5 * M_PI * M_PI, 1e-12);
  EXPECT_NEAR(euler::max_vorticity(w), 1.0, 1e-14);
  EXPECT_THROW(euler::casimir(w, 1), DomainError);
}

TEST(EulerInvariants, ParsevalCasimirMatchesGridSum) {
  const GridSpec grid(64, Dealias::TwoThirds);
  verify::Rng rng(2);
  const auto f0 = verify::random_trig(rng, 1, 6, 10);
  const auto w = euler::initial_vorticity(f0, grid);
  auto sq = w.to_grid();
  for (auto& v : sq) v *= v;
  EXPECT_NEAR(euler::casimir(w, 2), validation::grid_integral(sq, 64), 1e-9 * euler::casimir(w, 2));
  EXPECT_NEAR(euler::energy(w), 0.5 * trig::right_inner(f0, f0), 1e-11 * euler::energy(w));
}

TEST(EulerSimulate, ZeroStepsGiveSingleRecord) {
  const auto records = euler::simulate(TrigPolynomial::cos1(1, 0), small_config(32, 1e-3, 0));
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].step, 0);
  EXPECT_EQ(records[0].t, 0.0);
}

TEST(EulerSimulate, StationaryFlowKeepsInvariantsExactly) {
  const auto records = euler::simulate(TrigPolynomial::cos1(1, 0), small_config(32, 1e-2, 100));
  ASSERT_EQ(records.size(), 101u);
  for (const auto& r : records) {
    EXPECT_NEAR(r.L, records[0].L, 1e-13);
    EXPECT_NEAR(r.I.at(2), records[0].I.at(2), 1e-13);
  }
  EXPECT_NEAR(records.back().t, 1.0, 1e-12);
}

TEST(EulerSimulate, StrideAndFinalRecord) {
  auto cfg = small_config(32, 1e-3, 25);
  cfg.invariant_stride = 10;
  const auto records = euler::simulate(TrigPolynomial::cos1(1, 0) + TrigPolynomial::cos1(0, 2), cfg, {});
  ASSERT_EQ(records.size(), 4u);
  EXPECT_EQ(records[1].step, 10);
  EXPECT_EQ(records[2].step, 20);
  EXPECT_EQ(records[3].step, 25);
  EXPECT_NEAR(records[3].t, 0.025, 1e-15);
}

TEST(EulerSimulate, TwoModeFlowConservesEnergyAndEnstrophy) {
  auto cfg = small_config(64, 1e-3, 1000);
  cfg.invariant_stride = 100;
  long sink_calls = 0;
  const auto records = euler::simulate(
      TrigPolynomial::cos1(1, 0) + TrigPolynomial::cos1(0, 2), cfg,
      [&](const euler::TrajectoryRecord&, const SpectralField& w) {
        ++sink_calls;
        EXPECT_TRUE(w.all_finite());
      });
  EXPECT_EQ(sink_calls, static_cast<long>(records.size()));
  const auto& first = records.front();
  const auto& last = records.back();
  EXPECT_EQ(last.step, 1000);
  EXPECT_LT(rel(last.L, first.L), 1e-6);
  EXPECT_LT(rel(last.I.at(2), first.I.at(2)), 1e-4);
}

TEST(EulerSimulate, CflWarningIsReported) {
  auto cfg = small_config(32, 0.5, 1);
  std::vector<std::string> warnings;
  cfg.on_warning = [&](const std::string& m) { warnings.push_back(m); };
  euler::simulate(TrigPolynomial::cos1(1, 0) * 4.0, cfg);
  ASSERT_FALSE(warnings.empty());
  EXPECT_NE(warnings[0].find("CFL"), std::string::npos);
}

TEST(EulerSimulate, BlowUpCarriesPartialTrajectory) {
  auto cfg = small_config(32, 10.0, 500);
  const auto f0 = 100.0 * (TrigPolynomial::cos1(1, 0) + TrigPolynomial::cos1(0, 2) +
                           TrigPolynomial::sin1(1, 1, 0.5));
  try {
    euler::simulate(f0, cfg);
    FAIL() << "expected DivergenceError";
  } catch (const euler::DivergenceError& e) {
    EXPECT_GT(e.step(), 0);
    ASSERT_FALSE(e.partial().empty());
    EXPECT_EQ(e.partial().front().step, 0);
    EXPECT_LT(e.partial().back().step, e.step());
  }
}
