#include "parimutuel/equilibrium.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "parimutuel/error.hpp"
#include "parimutuel/scalar_search.hpp"

namespace parimutuel {
namespace {

void check_solvable_kappa(double kappa) {
  if (!(kappa > 0.5 && kappa < 1.0)) throw DomainError("kappa must lie in (0.5, 1)");
}

void check_in(double p, double lo, double hi, const char* what) {
  if (!(p >= lo && p <= hi)) throw DomainError(std::string(what) + ": argument outside its domain");
}

DiffuseAggregate totals(double p, double kappa, const BeliefMeasure& measure) {
  const double upper = std::min(1.0, p / kappa);
  const double lower = std::max(0.0, 1.0 - (1.0 - p) / kappa);
  return {measure.mass(upper, 1.0), measure.mass(0.0, lower)};
}

// Isaacs stake on Outcome 1 (belief b) against totals (own, other); clamped at 0
// to absorb rounding next to the regime boundary.
double isaacs_stake(double kappa, double belief, double own, double other) {
  const double radicand = kappa * belief / (1.0 - kappa * belief) * own * other;
  return std::max(0.0, std::sqrt(radicand) - own);
}

}  // namespace

double compute_pbar1(const MarketParams& params, const BeliefMeasure& measure, double tol) {
  params.validate();
  check_solvable_kappa(params.kappa);
  const double k = params.kappa;
  if (params.q == 0.0) return k;
  auto gap = [&](double p) {
    const auto d = totals(p, k, measure);
    return d.d1 / (k * (d.d1 + d.d2)) - params.q;
  };
  return bisect(gap, 1.0 - k, k, tol).root;
}

double compute_pbar2(const MarketParams& params, const BeliefMeasure& measure, double tol) {
  params.validate();
  check_solvable_kappa(params.kappa);
  const double k = params.kappa;
  if (params.q == 1.0) return 1.0 - k;
  auto gap = [&](double p) {
    const auto d = totals(p, k, measure);
    return d.d2 / (k * (d.d1 + d.d2)) - (1.0 - params.q);
  };
  return bisect(gap, 1.0 - k, k, tol).root;
}

PhiContext make_phi_context(const MarketParams& params, const BeliefMeasure& measure,
                            double tol) {
  return {params, measure, compute_pbar1(params, measure, tol),
          compute_pbar2(params, measure, tol)};
}

double d1_of(double p, const PhiContext& ctx) {
  const double k = ctx.params.kappa;
  check_in(p, 1.0 - k, k, "d1_of");
  return totals(p, k, ctx.measure).d1;
}

double d2_of(double p, const PhiContext& ctx) {
  const double k = ctx.params.kappa;
  check_in(p, 1.0 - k, k, "d2_of");
  return totals(p, k, ctx.measure).d2;
}

DiffuseAggregate diffuse_totals(double p, const PhiContext& ctx) {
  const double k = ctx.params.kappa;
  check_in(p, 1.0 - k, k, "diffuse_totals");
  return totals(p, k, ctx.measure);
}

double zeta1(double p, const PhiContext& ctx) {
  check_in(p, ctx.pbar1, ctx.params.kappa, "zeta1");
  const auto d = totals(p, ctx.params.kappa, ctx.measure);
  return isaacs_stake(ctx.params.kappa, ctx.params.q, d.d1, d.d2);
}

double zeta2(double p, const PhiContext& ctx) {
  check_in(p, 1.0 - ctx.params.kappa, ctx.pbar2, "zeta2");
  const auto d = totals(p, ctx.params.kappa, ctx.measure);
  return isaacs_stake(ctx.params.kappa, 1.0 - ctx.params.q, d.d2, d.d1);
}

double phi(double p, const PhiContext& ctx) {
  const double k = ctx.params.kappa;
  check_solvable_kappa(k);
  check_in(p, 1.0 - k, k, "phi");
  const auto d = totals(p, k, ctx.measure);
  const double w = ctx.params.w;
  if (p < ctx.pbar2) {
    const double a2 = std::min(w, isaacs_stake(k, 1.0 - ctx.params.q, d.d2, d.d1));
    return d.d1 / (a2 + d.d1 + d.d2);
  }
  if (p > ctx.pbar1) {
    const double a1 = std::min(w, isaacs_stake(k, ctx.params.q, d.d1, d.d2));
    return (a1 + d.d1) / (a1 + d.d1 + d.d2);
  }
  return d.d1 / (d.d1 + d.d2);
}

Equilibrium solve(const MarketParams& params, const BeliefMeasure& measure,
                  const SolveOptions& options) {
  params.validate();
  if (params.kappa <= 0.5) throw NoEquilibrium();
  if (!(options.fp_tol > 0.0)) throw DomainError("fp_tol must be positive");

  const PhiContext ctx = make_phi_context(params, measure, options.fp_tol);
  const double k = params.kappa;
  auto excess = [&](double p) { return phi(p, ctx) - p; };
  auto small_residual = [&](double p) { return std::abs(excess(p)) <= options.fp_tol; };

  const double a = options.reverse_bracket ? k : 1.0 - k;
  const double b = options.reverse_bracket ? 1.0 - k : k;
  const BisectionResult root = bisect(excess, a, b, options.fp_tol, small_residual);

  // When the bracket collapses before the residual test passes, keep the
  // candidate with the smallest residual.
  double p_star = root.root;
  double residual = std::abs(excess(p_star));
  for (double candidate : std::array{root.lo, root.hi}) {
    if (candidate <= 1.0 - k || candidate >= k) continue;
    const double r = std::abs(excess(candidate));
    if (r < residual) {
      residual = r;
      p_star = candidate;
    }
  }

  Equilibrium eq;
  eq.p_star = p_star;
  eq.diffuse = totals(p_star, k, measure);
  eq.atomic = atomic_best_response(eq.diffuse, params);
  eq.thresholds = diffuse_best_response(p_star, k);
  eq.residual = residual;
  eq.pbar1 = ctx.pbar1;
  eq.pbar2 = ctx.pbar2;
  eq.iterations = root.iterations;
  return eq;
}

}  // namespace parimutuel
