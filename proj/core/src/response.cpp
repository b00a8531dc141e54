#include "parimutuel/response.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "parimutuel/error.hpp"

namespace parimutuel {
namespace {

void check_kappa(double kappa) {
  if (!(kappa > 0.0 && kappa < 1.0)) throw DomainError("kappa must lie in (0, 1)");
}

void check_implied(double implied_p) {
  if (!(implied_p > 0.0 && implied_p < 1.0)) {
    throw DomainError("implied probability must lie in (0, 1)");
  }
}

void check_positive_totals(const DiffuseAggregate& d) {
  if (!(d.d1 > 0.0 && d.d2 > 0.0)) throw DomainError("diffuse totals must both be positive");
}

}  // namespace

void MarketParams::validate() const {
  check_kappa(kappa);
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("atomic belief q must lie in [0, 1]");
  if (!(w > 0.0) || !std::isfinite(w)) throw DomainError("atomic budget w must be positive");
}

double implied_probability(const DiffuseAggregate& d, const AtomicBet& a) {
  if (d.d1 < 0.0 || d.d2 < 0.0 || a.a1 < 0.0 || a.a2 < 0.0) {
    throw DomainError("wagers must be non-negative");
  }
  const double total = d.d1 + d.d2 + a.a1 + a.a2;
  if (!(total > 0.0)) throw DomainError("empty pool");
  return (d.d1 + a.a1) / total;
}

DiffuseThresholds diffuse_best_response(double implied_p, double kappa) {
  check_implied(implied_p);
  check_kappa(kappa);
  return {implied_p / kappa, 1.0 - (1.0 - implied_p) / kappa};
}

std::pair<double, double> diffuse_bet(double belief, const DiffuseThresholds& t) {
  return {belief > t.bet1_above ? 1.0 : 0.0, belief < t.bet2_below ? 1.0 : 0.0};
}

std::pair<double, double> diffuse_unit_edge(double belief, double implied_p, double kappa) {
  check_implied(implied_p);
  return {kappa * belief / implied_p - 1.0, kappa * (1.0 - belief) / (1.0 - implied_p) - 1.0};
}

double atomic_profit(const AtomicBet& b, const DiffuseAggregate& d, const MarketParams& params) {
  check_positive_totals(d);
  const double pool = b.a1 + d.d1 + b.a2 + d.d2;
  const double k = params.kappa;
  return b.a1 * (k * pool * params.q / (b.a1 + d.d1) - 1.0) +
         b.a2 * (k * pool * (1.0 - params.q) / (b.a2 + d.d2) - 1.0);
}

AtomicRegime atomic_regime(const DiffuseAggregate& d, const MarketParams& params) {
  check_positive_totals(d);
  const double scaled_pool = params.kappa * (d.d1 + d.d2);
  if (params.q > d.d1 / scaled_pool) return AtomicRegime::kBetOutcome1;
  if (1.0 - params.q > d.d2 / scaled_pool) return AtomicRegime::kBetOutcome2;
  return AtomicRegime::kAbstain;
}

AtomicBet atomic_best_response(const DiffuseAggregate& d, const MarketParams& params) {
  const double k = params.kappa;
  switch (atomic_regime(d, params)) {
    case AtomicRegime::kBetOutcome1: {
      const double keep = 1.0 - k * params.q;
      assert(keep > 0.0);
      const double stake = std::sqrt(k * params.q * d.d1 * d.d2 / keep) - d.d1;
      return {std::clamp(stake, 0.0, params.w), 0.0};
    }
    case AtomicRegime::kBetOutcome2: {
      const double keep = 1.0 - k * (1.0 - params.q);
      assert(keep > 0.0);
      const double stake = std::sqrt(k * (1.0 - params.q) * d.d1 * d.d2 / keep) - d.d2;
      return {0.0, std::clamp(stake, 0.0, params.w)};
    }
    case AtomicRegime::kAbstain:
      break;
  }
  return {0.0, 0.0};
}

}  // namespace parimutuel
