#pragma once

#include <utility>
#include <vector>

#include "parimutuel/equilibrium.hpp"

namespace parimutuel {

inline constexpr double kKappaSearchLo = 0.5 + 1e-4;
inline constexpr double kKappaSearchHi = 1.0 - 1e-4;

struct TakeSample {
  double kappa = 0.0;
  double revenue = 0.0;
};

/// Revenue-maximising payout fraction chosen by the house before play.
struct TakeOptimum {
  double kappa_star = 0.0;
  double revenue_star = 0.0;
  std::vector<TakeSample> profile;  ///< uniform grid samples, kappa ascending
};

struct TakeSearchOptions {
  int grid_points = 256;
  double refine_tol = 1e-5;
  double fp_tol = kDefaultFixedPointTolerance;
  unsigned workers = 0;  ///< 0 = hardware concurrency
};

/// House revenue at the equilibrium for the given kappa.
double revenue_at(double kappa, const BeliefMeasure& measure, double q, double w,
                  double fp_tol = kDefaultFixedPointTolerance);

/// Scans a uniform kappa grid over [0.5 + 1e-4, 1 - 1e-4], then refines the
/// best cell and its neighbours by golden-section search.
TakeOptimum optimize_take(const BeliefMeasure& measure, double q, double w,
                          const TakeSearchOptions& options = {});

}  // namespace parimutuel
