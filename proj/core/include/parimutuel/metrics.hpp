#pragma once

#include <optional>

#include "parimutuel/equilibrium.hpp"

namespace parimutuel {

/// Equilibrium quantities reported per scenario. The actual-profit entry is
/// only present when an actual probability for Outcome 1 is supplied.
struct MarketReport {
  double house_revenue = 0.0;
  std::optional<double> diffuse_actual_profit;
  double diffuse_subjective_profit = 0.0;
  double atomic_subjective_profit = 0.0;
  double pool_total = 0.0;
};

/// Take times pool; independent of which outcome occurs.
double house_revenue(const Equilibrium& eq, const MarketParams& params);

/// Total diffuse expected profit when Outcome 1 actually has probability
/// p_actual.
double diffuse_actual_profit(const Equilibrium& eq, const MarketParams& params, double p_actual);

/// Atomic expected profit under p_actual.
double atomic_actual_profit(const Equilibrium& eq, const MarketParams& params, double p_actual);

/// Each diffuse bettor's expected profit under her own belief, aggregated
/// over the population by quadrature.
double diffuse_subjective_profit(const Equilibrium& eq, const MarketParams& params,
                                 const BeliefMeasure& measure);

double atomic_subjective_profit(const Equilibrium& eq, const MarketParams& params);

MarketReport make_report(const Equilibrium& eq, const MarketParams& params,
                         const BeliefMeasure& measure,
                         std::optional<double> p_actual = std::nullopt);

}  // namespace parimutuel
