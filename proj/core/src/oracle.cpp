#include "parimutuel/oracle.hpp"

#include <cmath>

#include "parimutuel/error.hpp"
#include "parimutuel/scalar_search.hpp"

namespace parimutuel {

DiscretePopulation discretize(const BeliefMeasure& measure, std::size_t n) {
  if (n < 2) throw DomainError("discretize: need at least two bettors");
  const double total = measure.total_mass();
  const double share = total / static_cast<double>(n);

  DiscretePopulation pop;
  pop.beliefs.reserve(n);
  pop.wealths.assign(n, share);

  // Walk the quantiles left to right so each inversion only integrates the
  // gap from the previous belief.
  double prev_x = 0.0;
  double prev_cum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double target = (static_cast<double>(i) + 0.5) * share;
    auto gap = [&](double x) { return prev_cum + measure.mass(prev_x, x) - target; };
    const double x = bisect(gap, prev_x, 1.0, 1e-14).root;
    prev_cum += measure.mass(prev_x, x);
    prev_x = x;
    pop.beliefs.push_back(x);
  }
  return pop;
}

DiffuseAggregate discrete_totals(const DiscretePopulation& pop, const DiffuseThresholds& t) {
  DiffuseAggregate d;
  for (std::size_t i = 0; i < pop.size(); ++i) {
    const auto [f1, f2] = diffuse_bet(pop.beliefs[i], t);
    d.d1 += f1 * pop.wealths[i];
    d.d2 += f2 * pop.wealths[i];
  }
  return d;
}

OracleResult iterate_best_response(const DiscretePopulation& pop, const MarketParams& params,
                                   const OracleOptions& options) {
  params.validate();
  if (params.kappa <= 0.5) throw DomainError("iterate_best_response: kappa must exceed 0.5");
  if (!(options.damping > 0.0 && options.damping <= 1.0)) {
    throw DomainError("iterate_best_response: damping must lie in (0, 1]");
  }

  OracleResult out;
  double p = 0.5;
  double damping = options.damping;
  double last_step = 0.0;
  for (out.iterations = 1; out.iterations <= options.max_iters; ++out.iterations) {
    const DiffuseAggregate d = discrete_totals(pop, diffuse_best_response(p, params.kappa));
    const AtomicBet a = d.d1 > 0.0 && d.d2 > 0.0 ? atomic_best_response(d, params) : AtomicBet{};
    const double total = d.d1 + d.d2 + a.a1 + a.a2;
    const double target = total > 0.0 ? (d.d1 + a.a1) / total : 0.5;

    double step = damping * (target - p);
    if (step * last_step < 0.0) {
      damping *= 0.5;
      step = damping * (target - p);
    }
    p += step;
    last_step = step;
    out.diffuse = d;
    out.atomic = a;
    if (std::abs(step) < options.tol) {
      out.converged = true;
      break;
    }
  }
  if (!out.converged) out.iterations = options.max_iters;
  out.p_approx = p;
  out.final_damping = damping;
  return out;
}

}  // namespace parimutuel
