#include "parimutuel/stackelberg.hpp"

#include <random>

#include <gtest/gtest.h>

#include "parimutuel/error.hpp"

namespace parimutuel {
namespace {

TEST(OptimizeTake, ConcentratedBeliefsWithNegligibleAtomic) {
  const auto opt = optimize_take(BeliefMeasure::symmetrized_wedge(100), 1.0, 1e-10);
  EXPECT_NEAR(opt.kappa_star, 0.506, 0.005);
  EXPECT_EQ(opt.profile.size(), 256u);
}

TEST(OptimizeTake, ConcentratedBeliefsWithLargeAtomic) {
  const auto m = BeliefMeasure::wedge(100);
  const auto opt = optimize_take(m, 1.0, 1.0);
  EXPECT_NEAR(opt.kappa_star, 0.839, 0.005);
  EXPECT_NEAR(opt.revenue_star, revenue_at(opt.kappa_star, m, 1.0, 1.0), 1e-12);

  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> kappa(kKappaSearchLo, kKappaSearchHi);
  for (int i = 0; i < 64; ++i) {
    EXPECT_GE(opt.revenue_star, revenue_at(kappa(rng), m, 1.0, 1.0) - 1e-9);
  }
}

TEST(OptimizeTake, ScaleEquivariance) {
  const double c = 0.5;
  const auto base = BeliefMeasure::wedge(100);
  const auto scaled = BeliefMeasure::scaled(base, c);
  const TakeSearchOptions opts{.grid_points = 64};
  const auto a = optimize_take(base, 1.0, 1.0, opts);
  const auto b = optimize_take(scaled, 1.0, c, opts);
  EXPECT_NEAR(a.kappa_star, b.kappa_star, 1e-4);
  EXPECT_NEAR(b.revenue_star, c * a.revenue_star, 1e-8);
}

TEST(OptimizeTake, ProfileIsOrderedGrid) {
  const auto opt = optimize_take(BeliefMeasure::uniform(), 0.7, 0.4, {.grid_points = 16});
  ASSERT_EQ(opt.profile.size(), 16u);
  EXPECT_DOUBLE_EQ(opt.profile.front().kappa, kKappaSearchLo);
  EXPECT_DOUBLE_EQ(opt.profile.back().kappa, kKappaSearchHi);
  for (std::size_t i = 1; i < opt.profile.size(); ++i) {
    EXPECT_GT(opt.profile[i].kappa, opt.profile[i - 1].kappa);
  }
}

TEST(OptimizeTake, RejectsCoarseGrid) {
  EXPECT_THROW(optimize_take(BeliefMeasure::uniform(), 0.5, 1.0, {.grid_points = 8}), DomainError);
}

}  // namespace
}  // namespace parimutuel
