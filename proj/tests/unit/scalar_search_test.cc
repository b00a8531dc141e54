#include "parimutuel/scalar_search.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "parimutuel/quadrature.hpp"

namespace parimutuel {
namespace {

TEST(Bisection, FindsRootOfDecreasingFunction) {
  auto f = [](double x) { return std::cos(x) - x; };
  const auto r = bisect(f, 0.0, 1.0, 1e-12);
  EXPECT_NEAR(r.root, 0.7390851332151607, 1e-12);
}

TEST(Bisection, EitherBracketOrientationGivesSameRoot) {
  auto f = [](double x) { return 0.3 - x * x * x; };
  const double forward = bisect(f, 0.0, 1.0, 1e-13).root;
  const double reverse = bisect(f, 1.0, 0.0, 1e-13).root;
  EXPECT_NEAR(forward, std::cbrt(0.3), 1e-12);
  EXPECT_NEAR(forward, reverse, 1e-12);
}

TEST(Bisection, RejectsUnbracketedInterval) {
  EXPECT_THROW(bisect([](double x) { return x * x + 1.0; }, -1.0, 1.0, 1e-10), DomainError);
}

TEST(Bisection, KeepsHalvingUntilAcceptPasses) {
  // A steep function: bracket width alone is not enough for a small residual.
  auto f = [](double x) { return 1e6 * (0.4 - x); };
  const auto r = bisect(f, 0.0, 1.0, 1e-6, [&](double x) { return std::abs(f(x)) < 1e-6; });
  EXPECT_LT(std::abs(f(r.root)), 1e-6);
}

TEST(GoldenSection, MaximizesUnimodalFunction) {
  auto f = [](double x) { return -(x - 0.3) * (x - 0.3) + 2.0; };
  const auto r = golden_section_maximize(f, 0.0, 1.0, 1e-8);
  EXPECT_NEAR(r.argmax, 0.3, 1e-7);
  EXPECT_NEAR(r.value, 2.0, 1e-12);
}

TEST(GoldenSection, HandlesKinkedPeak) {
  auto f = [](double x) { return -std::abs(x - 0.61); };
  EXPECT_NEAR(golden_section_maximize(f, 0.5, 0.9, 1e-9).argmax, 0.61, 1e-8);
}

TEST(AdaptiveSimpson, IntegratesSmoothFunctionToTolerance) {
  const double v = quadrature::adaptive_simpson([](double x) { return std::exp(x); }, 0.0, 1.0);
  EXPECT_NEAR(v, std::numbers::e - 1.0, 1e-10);
}

TEST(AdaptiveSimpson, SplitHandlesKinks) {
  auto f = [](double x) { return std::abs(x - 1.0 / 3.0); };
  const std::vector<double> kinks{1.0 / 3.0};
  const double exact = 0.5 * (1.0 / 9.0 + 4.0 / 9.0);
  EXPECT_NEAR(quadrature::adaptive_simpson_split(f, 0.0, 1.0, kinks), exact, 1e-12);
  EXPECT_NEAR(quadrature::adaptive_simpson(f, 0.0, 1.0), exact, 1e-10);
}

TEST(AdaptiveSimpson, DegenerateAndReversedIntervals) {
  auto f = [](double) { return 1.0; };
  EXPECT_EQ(quadrature::adaptive_simpson(f, 0.3, 0.3), 0.0);
  EXPECT_THROW(quadrature::adaptive_simpson(f, 0.5, 0.2), DomainError);
}

TEST(AdaptiveSimpson, RejectsNonFiniteIntegrand) {
  EXPECT_THROW(quadrature::adaptive_simpson([](double x) { return 1.0 / x; }, 0.0, 1.0),
               NumericalError);
}

}  // namespace
}  // namespace parimutuel
