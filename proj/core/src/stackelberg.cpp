#include "parimutuel/stackelberg.hpp"

#include <algorithm>
#include <string>

#include "parimutuel/error.hpp"
#include "parimutuel/metrics.hpp"
#include "parimutuel/parallel.hpp"
#include "parimutuel/scalar_search.hpp"

namespace parimutuel {

double revenue_at(double kappa, const BeliefMeasure& measure, double q, double w, double fp_tol) {
  const MarketParams params{kappa, q, w};
  const Equilibrium eq = solve(params, measure, {.fp_tol = fp_tol});
  return house_revenue(eq, params);
}

TakeOptimum optimize_take(const BeliefMeasure& measure, double q, double w,
                          const TakeSearchOptions& options) {
  if (options.grid_points < 16) throw DomainError("optimize_take: grid_points must be at least 16");
  if (!(options.refine_tol > 0.0)) throw DomainError("optimize_take: refine_tol must be positive");
  MarketParams{0.75, q, w}.validate();

  const auto n = static_cast<std::size_t>(options.grid_points);
  const double step = (kKappaSearchHi - kKappaSearchLo) / static_cast<double>(n - 1);
  TakeOptimum out;
  out.profile.resize(n);
  parallel_for(
      n,
      [&](std::size_t i) {
        const double kappa = i + 1 == n ? kKappaSearchHi : kKappaSearchLo + step * i;
        out.profile[i] = {kappa, revenue_at(kappa, measure, q, w, options.fp_tol)};
      },
      options.workers);

  const auto best = std::max_element(
      out.profile.begin(), out.profile.end(),
      [](const TakeSample& a, const TakeSample& b) { return a.revenue < b.revenue; });
  const auto idx = static_cast<std::size_t>(best - out.profile.begin());
  const double lo = out.profile[idx == 0 ? 0 : idx - 1].kappa;
  const double hi = out.profile[std::min(idx + 1, n - 1)].kappa;

  out.kappa_star = best->kappa;
  out.revenue_star = best->revenue;
  const GoldenSectionResult refined = golden_section_maximize(
      [&](double kappa) { return revenue_at(kappa, measure, q, w, options.fp_tol); }, lo, hi,
      options.refine_tol);
  if (refined.value > out.revenue_star) {
    out.kappa_star = refined.argmax;
    out.revenue_star = refined.value;
  }
  return out;
}

}  // namespace parimutuel
