#pragma once

#include "parimutuel/measure.hpp"
#include "parimutuel/response.hpp"

namespace parimutuel {

inline constexpr double kDefaultFixedPointTolerance = 1e-10;

/// Everything needed to evaluate the implied-probability map for one
/// scenario. The two boundaries are computed once on construction:
/// the atomic bettor backs Outcome 1 exactly when p > pbar1 and Outcome 2
/// exactly when p < pbar2.
struct PhiContext {
  MarketParams params;
  BeliefMeasure measure;
  double pbar1 = 0.0;
  double pbar2 = 0.0;
};

/// Requires kappa > 0.5 (DomainError otherwise).
PhiContext make_phi_context(const MarketParams& params, const BeliefMeasure& measure,
                            double tol = kDefaultFixedPointTolerance);

/// Boundary in (1 - kappa, kappa] above which the atomic bettor backs
/// Outcome 1; equals kappa exactly when q = 0.
double compute_pbar1(const MarketParams& params, const BeliefMeasure& measure,
                     double tol = kDefaultFixedPointTolerance);
/// Boundary in [1 - kappa, kappa) below which the atomic bettor backs
/// Outcome 2; equals 1 - kappa exactly when q = 1.
double compute_pbar2(const MarketParams& params, const BeliefMeasure& measure,
                     double tol = kDefaultFixedPointTolerance);

/// Diffuse totals on each outcome when every diffuse bettor best-responds to
/// implied probability p in [1 - kappa, kappa].
double d1_of(double p, const PhiContext& ctx);
double d2_of(double p, const PhiContext& ctx);
DiffuseAggregate diffuse_totals(double p, const PhiContext& ctx);

/// Unconstrained optimal atomic stake on Outcome 1, for p in [pbar1, kappa].
double zeta1(double p, const PhiContext& ctx);
/// Unconstrained optimal atomic stake on Outcome 2, for p in [1 - kappa, pbar2].
double zeta2(double p, const PhiContext& ctx);

/// Implied probability produced when all players best-respond to p.
/// Continuous and decreasing on [1 - kappa, kappa], from 1 down to 0.
double phi(double p, const PhiContext& ctx);

struct Equilibrium {
  double p_star = 0.5;
  DiffuseAggregate diffuse;
  AtomicBet atomic;
  DiffuseThresholds thresholds;
  double residual = 0.0;  ///< |phi(p_star) - p_star|
  double pbar1 = 0.0;
  double pbar2 = 0.0;
  int iterations = 0;

  double pool_total() const { return diffuse.d1 + diffuse.d2 + atomic.a1 + atomic.a2; }
};

struct SolveOptions {
  double fp_tol = kDefaultFixedPointTolerance;
  /// Start the bisection from [kappa, 1 - kappa] instead of [1 - kappa, kappa].
  bool reverse_bracket = false;
};

/// Unique pure-strategy equilibrium, found by bisecting phi(p) - p.
/// Throws NoEquilibrium when kappa <= 0.5.
Equilibrium solve(const MarketParams& params, const BeliefMeasure& measure,
                  const SolveOptions& options = {});

}  // namespace parimutuel
