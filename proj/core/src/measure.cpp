#include "parimutuel/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "parimutuel/error.hpp"

namespace parimutuel {
namespace {

constexpr int kPositivityGrid = 10'001;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_unit(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError(std::string(what) + ": belief must lie in [0, 1]");
  }
}

void check_order(int n) {
  if (n < 1) throw DomainError("wedge order n must be at least 1");
}

double wedge_density_unchecked(int n, double p) {
  const double nd = n;
  if (p < 1.0 / nd) return -2.0 * nd * (nd - 1.0) * p + 2.0 * (nd - 1.0) + 1.0 / nd;
  return 1.0 / nd;
}

// Antiderivative of the wedge density from 0.
double wedge_cdf(int n, double x) {
  const double nd = n;
  x = std::clamp(x, 0.0, 1.0);
  if (x < 1.0 / nd) return -nd * (nd - 1.0) * x * x + (2.0 * (nd - 1.0) + 1.0 / nd) * x;
  return (nd - 1.0) / nd + 1.0 / (nd * nd) + (x - 1.0 / nd) / nd;
}

double gaussian_unchecked(const GaussianMixture& g, double p) {
  static const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  double sum = 0.0;
  for (std::size_t i = 0; i < g.weights.size(); ++i) {
    const double z = (p - g.means[i]) / g.stddevs[i];
    sum += g.weights[i] * inv_sqrt_2pi / g.stddevs[i] * std::exp(-0.5 * z * z);
  }
  return sum;
}

void validate_mixture(const GaussianMixture& g) {
  if (g.weights.empty() || g.weights.size() != g.means.size() ||
      g.weights.size() != g.stddevs.size()) {
    throw DomainError("gaussian mixture: weights, means and stddevs must be non-empty and equal length");
  }
  for (std::size_t i = 0; i < g.weights.size(); ++i) {
    if (!(g.weights[i] > 0.0) || !std::isfinite(g.weights[i])) {
      throw DomainError("gaussian mixture: weights must be positive");
    }
    if (!(g.stddevs[i] > 0.0) || !std::isfinite(g.stddevs[i])) {
      throw DomainError("gaussian mixture: stddevs must be positive");
    }
    if (!std::isfinite(g.means[i])) throw DomainError("gaussian mixture: means must be finite");
  }
}

void validate_tabulated(const Tabulated& t) {
  const auto& k = t.knots;
  if (k.size() < 2) throw DomainError("tabulated density needs at least two knots");
  if (k.front().first != 0.0 || k.back().first != 1.0) {
    throw DomainError("tabulated density knots must start at 0 and end at 1");
  }
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (!(k[i].second > 0.0) || !std::isfinite(k[i].second)) {
      throw DomainError("tabulated density values must be positive");
    }
    if (i > 0 && !(k[i].first > k[i - 1].first)) {
      throw DomainError("tabulated density knots must be strictly increasing");
    }
  }
}

double tabulated_unchecked(const Tabulated& t, double p) {
  const auto& k = t.knots;
  auto it = std::upper_bound(k.begin(), k.end(), p,
                             [](double x, const auto& knot) { return x < knot.first; });
  if (it == k.begin()) return k.front().second;
  if (it == k.end()) return k.back().second;
  const auto& [x1, y1] = *it;
  const auto& [x0, y0] = *(it - 1);
  return y0 + (y1 - y0) * (p - x0) / (x1 - x0);
}

}  // namespace

double wedge_density(int n, double p) {
  check_order(n);
  check_unit(p, "wedge_density");
  return wedge_density_unchecked(n, p);
}

double symmetrized_wedge_density(int n, double p) {
  check_order(n);
  check_unit(p, "symmetrized_wedge_density");
  return 0.5 * (wedge_density_unchecked(n, p) + wedge_density_unchecked(n, 1.0 - p));
}

double gaussian_mixture_density(const std::vector<double>& weights,
                                const std::vector<double>& means,
                                const std::vector<double>& stddevs, double p) {
  GaussianMixture g{weights, means, stddevs};
  validate_mixture(g);
  return gaussian_unchecked(g, p);
}

BeliefMeasure::BeliefMeasure(MeasureKind kind) : kind_(std::move(kind)) {
  std::visit(Overloaded{
                 [&](const Wedge& w) {
                   check_order(w.n);
                   if (w.n > 1) breakpoints_ = {1.0 / w.n};
                 },
                 [](const Uniform&) {},
                 [&](const SymmetrizedWedge& w) {
                   check_order(w.n);
                   if (w.n > 2) breakpoints_ = {1.0 / w.n, 1.0 - 1.0 / w.n};
                   if (w.n == 2) breakpoints_ = {0.5};
                 },
                 [](const GaussianMixture& g) { validate_mixture(g); },
                 [&](const Tabulated& t) {
                   validate_tabulated(t);
                   for (std::size_t i = 1; i + 1 < t.knots.size(); ++i) {
                     breakpoints_.push_back(t.knots[i].first);
                   }
                 },
                 [&](const Scaled& s) {
                   if (!s.base) throw DomainError("scaled measure needs a base measure");
                   if (!(s.factor > 0.0) || !std::isfinite(s.factor)) {
                     throw DomainError("scaled measure factor must be positive");
                   }
                   breakpoints_ = s.base->breakpoints_;
                 },
             },
             kind_);

  for (int i = 0; i < kPositivityGrid; ++i) {
    const double p = static_cast<double>(i) / (kPositivityGrid - 1);
    const double g = density_unchecked(p);
    if (!(g > 0.0) || !std::isfinite(g)) {
      throw DomainError("belief density must be finite and strictly positive on [0, 1]");
    }
  }
  total_mass_ = mass(0.0, 1.0);
}

BeliefMeasure BeliefMeasure::wedge(int n) { return BeliefMeasure(Wedge{n}); }
BeliefMeasure BeliefMeasure::uniform() { return BeliefMeasure(Uniform{}); }
BeliefMeasure BeliefMeasure::symmetrized_wedge(int n) { return BeliefMeasure(SymmetrizedWedge{n}); }

BeliefMeasure BeliefMeasure::gaussian_mixture(std::vector<double> weights,
                                              std::vector<double> means,
                                              std::vector<double> stddevs) {
  return BeliefMeasure(GaussianMixture{std::move(weights), std::move(means), std::move(stddevs)});
}

BeliefMeasure BeliefMeasure::tabulated(std::vector<std::pair<double, double>> knots) {
  return BeliefMeasure(Tabulated{std::move(knots)});
}

BeliefMeasure BeliefMeasure::scaled(BeliefMeasure base, double factor) {
  return BeliefMeasure(Scaled{std::make_shared<const BeliefMeasure>(std::move(base)), factor});
}

double BeliefMeasure::density(double p) const {
  check_unit(p, "density");
  return density_unchecked(p);
}

double BeliefMeasure::density_unchecked(double p) const {
  return std::visit(
      Overloaded{
          [p](const Wedge& w) { return wedge_density_unchecked(w.n, p); },
          [](const Uniform&) { return 1.0; },
          [p](const SymmetrizedWedge& w) {
            return 0.5 * (wedge_density_unchecked(w.n, p) + wedge_density_unchecked(w.n, 1.0 - p));
          },
          [p](const GaussianMixture& g) { return gaussian_unchecked(g, p); },
          [p](const Tabulated& t) { return tabulated_unchecked(t, p); },
          [p](const Scaled& s) { return s.factor * s.base->density_unchecked(p); },
      },
      kind_);
}

bool BeliefMeasure::has_closed_form() const {
  return std::visit(Overloaded{
                        [](const Wedge&) { return true; },
                        [](const Uniform&) { return true; },
                        [](const SymmetrizedWedge&) { return true; },
                        [](const Scaled& s) { return s.base->has_closed_form(); },
                        [](const auto&) { return false; },
                    },
                    kind_);
}

double BeliefMeasure::cdf_closed_form(double x) const {
  return std::visit(Overloaded{
                        [x](const Wedge& w) { return wedge_cdf(w.n, x); },
                        [x](const Uniform&) { return std::clamp(x, 0.0, 1.0); },
                        [x](const SymmetrizedWedge& w) {
                          return 0.5 * (wedge_cdf(w.n, x) + 1.0 - wedge_cdf(w.n, 1.0 - x));
                        },
                        [x](const Scaled& s) { return s.factor * s.base->cdf_closed_form(x); },
                        [](const auto&) -> double {
                          throw NumericalError("measure family has no closed-form mass");
                        },
                    },
                    kind_);
}

void BeliefMeasure::check_interval(double lo, double hi) {
  check_unit(lo, "mass");
  check_unit(hi, "mass");
  if (lo > hi) throw DomainError("mass: lower endpoint exceeds upper endpoint");
}

double BeliefMeasure::mass(double lo, double hi) const {
  check_interval(lo, hi);
  if (lo == hi) return 0.0;
  if (const auto* s = std::get_if<Scaled>(&kind_)) return s->factor * s->base->mass(lo, hi);
  if (has_closed_form()) return std::max(0.0, cdf_closed_form(hi) - cdf_closed_form(lo));
  return mass_by_quadrature(lo, hi);
}

double BeliefMeasure::mass_by_quadrature(double lo, double hi, double tol) const {
  check_interval(lo, hi);
  return quadrature::adaptive_simpson_split([this](double p) { return density_unchecked(p); },
                                            lo, hi, breakpoints_, tol);
}

}  // namespace parimutuel
