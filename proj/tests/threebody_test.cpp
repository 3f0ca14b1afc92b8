#include "fgn/integrators/builders.hpp"
#include "fgn/lab/experiments.hpp"
#include "fgn/lab/three_body.hpp"

#include <cmath>

#include "gtest/gtest.h"

namespace fgn::lab {
namespace {

TEST(SunEarthMoon, InitialData) {
  const auto [s, m] = build_sun_earth_moon();
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_EQ(s.positions()(kSun, 0), 0.0);
  EXPECT_EQ(s.positions()(kSun, 1), 0.0);
  EXPECT_EQ(s.velocities()(kSun, 0), 0.0);
  EXPECT_EQ(s.velocities()(kSun, 1), 0.0);
  EXPECT_NEAR(s.positions()(kMoon, 1) - s.positions()(kEarth, 1), 0.0024, 1e-12);
  EXPECT_EQ(s.velocities()(kEarth, 0), 0.5160);
  EXPECT_EQ(s.velocities()(kMoon, 0), 0.5337);
}

TEST(SunEarthMoon, EarthMoonIsTheOnlyFastPair) {
  const auto [s, m] = build_sun_earth_moon();
  ASSERT_EQ(m.pairs().size(), 3u);
  for (const auto& p : m.pairs()) {
    const bool earth_moon = p.i == kEarth && p.j == kMoon;
    EXPECT_EQ(p.split, earth_moon ? Subset::Fast : Subset::Slow);
  }
  EXPECT_FALSE(m.has_external());
}

TEST(StepCount, RequiresIntegralRatio) {
  EXPECT_EQ(step_count(12.0, 0.04), 300);
  EXPECT_EQ(step_count(12.0, 0.01), 1200);
  EXPECT_EQ(step_count(0.0, 0.04), 0);
  EXPECT_THROW(step_count(12.0, 0.07), ConfigurationError);
  EXPECT_THROW(step_count(12.0, 0.0), ConfigurationError);
  EXPECT_THROW(step_count(-1.0, 0.1), ConfigurationError);
}

TEST(EnergyErrorSeries, ZeroDurationIsSingleExactSample) {
  const EnergyErrorSeries e = energy_error_series(schemes::leapfrog(), 0.04, 0.0);
  ASSERT_EQ(e.rel_errors.size(), 1u);
  EXPECT_EQ(e.rel_errors[0], 0.0);
  EXPECT_EQ(e.times[0], 0.0);
  EXPECT_EQ(e.max_error, 0.0);
}

TEST(EnergyErrorSeries, RunningMaxIsMonotone) {
  const EnergyErrorSeries e = energy_error_series(schemes::omelyan5(), 0.08, 12.0, 5);
  EXPECT_EQ(e.steps.back(), 150);
  for (std::size_t k = 1; k < e.running_max.size(); ++k) {
    EXPECT_GE(e.running_max[k], e.running_max[k - 1]);
    EXPECT_GE(e.running_max[k], e.rel_errors[k]);
  }
  EXPECT_EQ(e.running_max.back(), e.max_error);
}

TEST(EnergyErrorSeries, OmelyanBeatsLeapfrog) {
  EXPECT_LT(energy_error_series(schemes::omelyan5(), 0.04, 12.0).max_error,
            energy_error_series(schemes::leapfrog(), 0.04, 12.0).max_error);
}

TEST(EnergyErrorSeries, NestedForceGradientBeatsOmelyanTenfold) {
  EXPECT_LE(10 * energy_error_series(schemes::nested_force_gradient(30), 0.04, 12.0).max_error,
            energy_error_series(schemes::omelyan5(), 0.04, 12.0).max_error);
}

std::vector<double> power_law(const std::vector<double>& h, double c, double p) {
  std::vector<double> e;
  for (double x : h) e.push_back(c * std::pow(x, p));
  return e;
}

const std::vector<double> kGrid{0.16, 0.08, 0.04, 0.02, 0.01};

TEST(FitConvergence, ExactPowerLaw) {
  const ConvergenceReport r = fit_convergence("x", kGrid, power_law(kGrid, 3.0, 2.0));
  ASSERT_TRUE(r.slope);
  EXPECT_NEAR(*r.slope, 2.0, 1e-12);
  EXPECT_NEAR(std::exp(r.intercept), 3.0, 1e-10);
  EXPECT_LT(r.residual_rms, 1e-12);
  EXPECT_EQ(r.window_begin, 0u);
  EXPECT_EQ(r.window_end, kGrid.size());
}

TEST(FitConvergence, ScaleInvariant) {
  std::vector<double> e{6.1e-4, 1.2e-4, 2.8e-5, 6.9e-6, 1.7e-6};
  const ConvergenceReport a = fit_convergence("x", kGrid, e);
  for (double& x : e) x *= 1e5;
  const ConvergenceReport b = fit_convergence("x", kGrid, e);
  ASSERT_TRUE(a.slope && b.slope);
  EXPECT_NEAR(*a.slope, *b.slope, 1e-12);
  EXPECT_NEAR(b.intercept - a.intercept, std::log(1e5), 1e-10);
}

TEST(FitConvergence, StopsBeforeErrorFloor) {
  // Fourth order down to h = 0.04, then a floor.
  const std::vector<double> e{2.57e-8, 1.65e-9, 1.03e-10, 1.12e-11, 2.86e-12};
  const ConvergenceReport r = fit_convergence("x", kGrid, e);
  ASSERT_TRUE(r.slope);
  EXPECT_NEAR(*r.slope, 4.0, 0.1);
  EXPECT_EQ(r.window_begin, 0u);
  EXPECT_EQ(r.window_end, 3u);
}

TEST(FitConvergence, SkipsPreAsymptoticStart) {
  const std::vector<double> e{9.70e-8, 1.06e-8, 7.37e-10, 4.70e-11, 2.95e-12};
  const ConvergenceReport r = fit_convergence("x", kGrid, e);
  ASSERT_TRUE(r.slope);
  EXPECT_NEAR(*r.slope, 4.0, 0.1);
  EXPECT_GE(r.window_begin, 1u);
}

TEST(FitConvergence, FlagsBadInput) {
  EXPECT_FALSE(fit_convergence("x", {0.1, 0.05, 0.025}, {1, 0.5, 0.25}).slope);
  EXPECT_FALSE(fit_convergence("x", {0.1, 0.2, 0.05, 0.025}, {1, 2, 0.5, 0.25}).slope);
  const ConvergenceReport noisy =
      fit_convergence("x", {0.16, 0.08, 0.04, 0.02}, {1e-4, 2e-4, 1e-4, 2e-4});
  EXPECT_FALSE(noisy.slope);
  EXPECT_FALSE(noisy.note.empty());
}

TEST(ConvergenceOrder, LeapfrogOnSunEarthMoon) {
  const ConvergenceReport r = convergence_order(schemes::leapfrog(), {0.16, 0.08, 0.04, 0.02}, 12.0);
  ASSERT_TRUE(r.slope) << r.note;
  EXPECT_NEAR(*r.slope, 2.0, 0.3);
}

TEST(CostWeights, WeightsCountsPerSubset) {
  EvaluationCounts c;
  c.forces = {10, 100, 3};  // FULL, FAST, SLOW
  c.gradients = {2, 0, 1};
  c.drifts = 7;
  const CostWeights w;
  EXPECT_DOUBLE_EQ(w.cost(c), 10 * 1.001 + 100 * 0.001 + 3 * 1.0 + 2 * 2.002 + 1 * 2.0);
  CostWeights d;
  d.drift = 1.0;
  EXPECT_DOUBLE_EQ(d.cost(c) - w.cost(c), 7.0);
  d.fast_force = -1;
  EXPECT_THROW(d.validate(), ConfigurationError);
}

TEST(CostAccuracy, RowsAndCounts) {
  const auto rows = cost_accuracy({schemes::leapfrog(), schemes::nested_force_gradient(30)},
                                  {{0.04, 0.02}, {0.04}}, 12.0);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].scheme, "leapfrog");
  EXPECT_DOUBLE_EQ(rows[0].weighted_cost, 301 * 1.001);
  EXPECT_DOUBLE_EQ(rows[1].weighted_cost, 601 * 1.001);
  EXPECT_EQ(rows[2].scheme, "nested-fg");
  EXPECT_NEAR(rows[2].weighted_cost, 601 * 1.0 + 300 * 2.0 + 18001 * 0.001, 1e-9);
  EXPECT_THROW(cost_accuracy({schemes::leapfrog()}, {}, 12.0), ConfigurationError);
}

TEST(CostAtAccuracy, InterpolatesLogLog) {
  const std::vector<CostRow> rows{{"a", 0.1, 100, 1e-6, {}}, {"a", 0.05, 200, 1e-8, {}},
                                  {"b", 0.1, 10, 1e-9, {}}};
  const auto c = cost_at_accuracy(rows, "a", 1e-7);
  ASSERT_TRUE(c);
  EXPECT_NEAR(*c, std::sqrt(100.0 * 200.0), 1e-9);
  EXPECT_NEAR(*cost_at_accuracy(rows, "a", 1e-6), 100.0, 1e-9);
  EXPECT_FALSE(cost_at_accuracy(rows, "a", 1e-10));
  EXPECT_FALSE(cost_at_accuracy(rows, "b", 1e-8));
}

}  // namespace
}  // namespace fgn::lab
