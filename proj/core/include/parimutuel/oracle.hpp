#pragma once

#include <cstddef>
#include <vector>

#include "parimutuel/measure.hpp"
#include "parimutuel/response.hpp"

namespace parimutuel {

/// Finite stand-in for the diffuse continuum: N bettors of equal wealth,
/// one per equal-mass cell of the belief measure.
struct DiscretePopulation {
  std::vector<double> beliefs;  ///< strictly increasing
  std::vector<double> wealths;

  std::size_t size() const { return beliefs.size(); }
};

/// Splits [0, 1] into n equal-mass cells; each bettor sits at its cell's
/// mass-median and holds total_mass / n. Requires n >= 2.
DiscretePopulation discretize(const BeliefMeasure& measure, std::size_t n);

/// Totals staked by the population under the threshold rule. Bettors exactly
/// at a threshold abstain.
DiffuseAggregate discrete_totals(const DiscretePopulation& pop, const DiffuseThresholds& t);

struct OracleOptions {
  int max_iters = 10'000;
  double tol = 1e-8;
  double damping = 0.5;
};

struct OracleResult {
  double p_approx = 0.5;
  bool converged = false;
  int iterations = 0;
  double final_damping = 0.0;
  DiffuseAggregate diffuse;
  AtomicBet atomic;
};

/// Damped best-response iteration on the discrete game, started from
/// P = 0.5. Each round sets the bettors' wagers by the threshold rule, the
/// atomic wager by its closed-form best response, and moves P a fraction
/// `damping` toward the resulting implied probability. The damping factor
/// is halved whenever the update reverses direction, so the iteration
/// settles even where the discrete map jumps across the diagonal.
/// Requires kappa > 0.5.
OracleResult iterate_best_response(const DiscretePopulation& pop, const MarketParams& params,
                                   const OracleOptions& options = {});

}  // namespace parimutuel
