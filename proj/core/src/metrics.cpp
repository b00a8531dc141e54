#include "parimutuel/metrics.hpp"

#include <algorithm>

#include "parimutuel/error.hpp"

namespace parimutuel {
namespace {

void check_equilibrium(const Equilibrium& eq) {
  if (!(eq.p_star > 0.0 && eq.p_star < 1.0)) {
    throw DomainError("equilibrium implied probability must lie in (0, 1)");
  }
}

double weighted_edge(double on1, double on2, double p_star, double kappa, double p1) {
  return on1 * (kappa * p1 / p_star - 1.0) + on2 * (kappa * (1.0 - p1) / (1.0 - p_star) - 1.0);
}

}  // namespace

double house_revenue(const Equilibrium& eq, const MarketParams& params) {
  check_equilibrium(eq);
  return (1.0 - params.kappa) * eq.pool_total();
}

double diffuse_actual_profit(const Equilibrium& eq, const MarketParams& params, double p_actual) {
  check_equilibrium(eq);
  if (!(p_actual >= 0.0 && p_actual <= 1.0)) throw DomainError("p_actual must lie in [0, 1]");
  return weighted_edge(eq.diffuse.d1, eq.diffuse.d2, eq.p_star, params.kappa, p_actual);
}

double atomic_actual_profit(const Equilibrium& eq, const MarketParams& params, double p_actual) {
  check_equilibrium(eq);
  if (!(p_actual >= 0.0 && p_actual <= 1.0)) throw DomainError("p_actual must lie in [0, 1]");
  return weighted_edge(eq.atomic.a1, eq.atomic.a2, eq.p_star, params.kappa, p_actual);
}

double diffuse_subjective_profit(const Equilibrium& eq, const MarketParams& params,
                                 const BeliefMeasure& measure) {
  check_equilibrium(eq);
  const double k = params.kappa;
  const double p_star = eq.p_star;
  const double upper = std::clamp(eq.thresholds.bet1_above, 0.0, 1.0);
  const double lower = std::clamp(eq.thresholds.bet2_below, 0.0, 1.0);
  const double on1 = measure.integrate([&](double p) { return k * p / p_star - 1.0; }, upper, 1.0);
  const double on2 = measure.integrate(
      [&](double p) { return k * (1.0 - p) / (1.0 - p_star) - 1.0; }, 0.0, lower);
  return on1 + on2;
}

double atomic_subjective_profit(const Equilibrium& eq, const MarketParams& params) {
  check_equilibrium(eq);
  return weighted_edge(eq.atomic.a1, eq.atomic.a2, eq.p_star, params.kappa, params.q);
}

MarketReport make_report(const Equilibrium& eq, const MarketParams& params,
                         const BeliefMeasure& measure, std::optional<double> p_actual) {
  MarketReport r;
  r.pool_total = eq.pool_total();
  r.house_revenue = house_revenue(eq, params);
  if (p_actual) r.diffuse_actual_profit = diffuse_actual_profit(eq, params, *p_actual);
  r.diffuse_subjective_profit = diffuse_subjective_profit(eq, params, measure);
  r.atomic_subjective_profit = atomic_subjective_profit(eq, params);
  return r;
}

}  // namespace parimutuel
