#include "parimutuel/oracle.hpp"

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "parimutuel/equilibrium.hpp"
#include "parimutuel/error.hpp"

namespace parimutuel {
namespace {

TEST(Discretize, UniformQuartiles) {
  const auto pop = discretize(BeliefMeasure::uniform(), 4);
  ASSERT_EQ(pop.size(), 4u);
  const double expected[] = {0.125, 0.375, 0.625, 0.875};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(pop.beliefs[i], expected[i], 1e-12);
    EXPECT_DOUBLE_EQ(pop.wealths[i], 0.25);
  }
}

TEST(Discretize, TwoBettorsSplitMass) {
  const auto m = BeliefMeasure::wedge(3);
  const auto pop = discretize(m, 2);
  EXPECT_NEAR(m.mass(0.0, pop.beliefs[0]), 0.25 * m.total_mass(), 1e-12);
  EXPECT_NEAR(m.mass(0.0, pop.beliefs[1]), 0.75 * m.total_mass(), 1e-12);
  EXPECT_DOUBLE_EQ(pop.wealths[0] + pop.wealths[1], m.total_mass());
}

TEST(Discretize, ConcentratedWedge) {
  const auto pop = discretize(BeliefMeasure::wedge(10), 100);
  const auto below =
      std::count_if(pop.beliefs.begin(), pop.beliefs.end(), [](double b) { return b < 0.1; });
  EXPECT_GT(below, 90);
  EXPECT_TRUE(std::is_sorted(pop.beliefs.begin(), pop.beliefs.end()));
}

TEST(Discretize, RejectsSingleton) {
  EXPECT_THROW(discretize(BeliefMeasure::uniform(), 1), DomainError);
}

TEST(Oracle, SymmetricPopulation) {
  const auto r = iterate_best_response(discretize(BeliefMeasure::uniform(), 1000), {0.8, 0.5, 1.0});
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.p_approx, 0.5, 1e-6);
}

TEST(Oracle, OutcomeTwoBeliefsPinImpliedProbability) {
  const auto pop = discretize(BeliefMeasure::wedge(100), 2000);
  for (double k : {0.55, 0.75, 0.95}) {
    const auto r = iterate_best_response(pop, {k, 0.0, 1.0});
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.p_approx, 1.0 - k, 0.02) << "kappa=" << k;
  }
}

double gap_for(const BeliefMeasure& m, const MarketParams& params, std::size_t n) {
  const auto r = iterate_best_response(discretize(m, n), params);
  EXPECT_TRUE(r.converged);
  return std::abs(r.p_approx - solve(params, m).p_star);
}

TEST(Oracle, MatchesContinuumSolver) {
  const struct {
    BeliefMeasure m;
    MarketParams params;
  } cases[] = {
      {BeliefMeasure::wedge(1), {0.8, 0.9, 1.0}},
      {BeliefMeasure::wedge(10), {0.7, 0.95, 1.0}},
      {BeliefMeasure::symmetrized_wedge(5), {0.9, 0.3, 0.2}},
      {BeliefMeasure::gaussian_mixture({0.5, 0.5}, {0.3, 0.7}, {0.1, 0.1}), {0.85, 0.6, 0.5}},
  };
  for (const auto& c : cases) {
    EXPECT_LT(gap_for(c.m, c.params, 2000), 0.01);
  }
}

TEST(Oracle, GapShrinksWithPopulation) {
  const auto m = BeliefMeasure::wedge(2);
  const MarketParams params{0.75, 0.8, 0.5};
  const double g100 = gap_for(m, params, 100);
  const double g500 = gap_for(m, params, 500);
  const double g2000 = gap_for(m, params, 2000);
  EXPECT_LE(g500, g100 + 1e-3);
  EXPECT_LE(g2000, g500 + 1e-3);
  EXPECT_LT(g2000, 0.01);
}

TEST(Oracle, NoWagerWithNegativeEdge) {
  const auto pop = discretize(BeliefMeasure::wedge(3), 500);
  const MarketParams params{0.8, 0.7, 1.0};
  const auto r = iterate_best_response(pop, params);
  ASSERT_TRUE(r.converged);
  const double k = params.kappa, p = r.p_approx;
  if (r.atomic.a1 > 0.0) EXPECT_GE(k * params.q / p - 1.0, -1e-6);
  if (r.atomic.a2 > 0.0) EXPECT_GE(k * (1.0 - params.q) / (1.0 - p) - 1.0, -1e-6);
  const auto t = diffuse_best_response(p, k);
  for (double b : pop.beliefs) {
    const auto [f1, f2] = diffuse_bet(b, t);
    const auto [e1, e2] = diffuse_unit_edge(b, p, k);
    if (f1 > 0.0) EXPECT_GE(e1, -1e-6);
    if (f2 > 0.0) EXPECT_GE(e2, -1e-6);
  }
}

}  // namespace
}  // namespace parimutuel
