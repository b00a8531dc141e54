#pragma once

#include <utility>

namespace parimutuel {

/// Market parameters seen by every player.
struct MarketParams {
  double kappa = 0.9;  ///< fraction of the pool paid out; the house keeps 1 - kappa
  double q = 0.5;      ///< atomic bettor's probability for Outcome 1
  double w = 1.0;      ///< atomic bettor's budget

  /// Throws DomainError unless 0 < kappa < 1, 0 <= q <= 1 and w > 0.
  void validate() const;
  friend bool operator==(const MarketParams&, const MarketParams&) = default;
};

/// Totals wagered by the diffuse population on each outcome.
struct DiffuseAggregate {
  double d1 = 0.0;
  double d2 = 0.0;
};

struct AtomicBet {
  double a1 = 0.0;
  double a2 = 0.0;
  friend bool operator==(const AtomicBet&, const AtomicBet&) = default;
};

/// A diffuse bettor with belief p stakes everything on Outcome 1 when
/// p > bet1_above, everything on Outcome 2 when p < bet2_below, and nothing
/// otherwise (including exactly at either threshold).
struct DiffuseThresholds {
  double bet1_above = 1.0;
  double bet2_below = 0.0;
};

inline constexpr double kFeasibilityTolerance = 1e-12;

/// Share of the pool on Outcome 1. Throws DomainError("empty pool") when
/// nothing is wagered.
double implied_probability(const DiffuseAggregate& d, const AtomicBet& a);

DiffuseThresholds diffuse_best_response(double implied_p, double kappa);

/// Fraction (f1, f2) of wealth a diffuse bettor with belief p stakes on each
/// outcome under the given thresholds.
std::pair<double, double> diffuse_bet(double belief, const DiffuseThresholds& t);

/// Expected profit per unit staked on Outcome 1 and Outcome 2 for a bettor
/// with belief p facing implied probability P.
std::pair<double, double> diffuse_unit_edge(double belief, double implied_p, double kappa);

/// Atomic bettor's subjective expected profit from staking b against the
/// diffuse totals d. Requires d1, d2 > 0.
double atomic_profit(const AtomicBet& b, const DiffuseAggregate& d, const MarketParams& params);

/// Which of the three best-response regimes applies.
enum class AtomicRegime { kBetOutcome1, kBetOutcome2, kAbstain };

AtomicRegime atomic_regime(const DiffuseAggregate& d, const MarketParams& params);

/// Profit-maximising feasible atomic wager against d: at most one outcome is
/// backed, with the unconstrained optimum capped by the budget.
AtomicBet atomic_best_response(const DiffuseAggregate& d, const MarketParams& params);

}  // namespace parimutuel
