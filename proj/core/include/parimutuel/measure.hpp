#pragma once

#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "parimutuel/quadrature.hpp"

namespace parimutuel {

/// Piecewise-linear wedge g_n: steep linear ramp on [0, 1/n), flat 1/n after.
/// Unit total mass for every n; n = 1 is Lebesgue measure.
struct Wedge {
  int n = 1;
};

struct Uniform {};

/// (g_n(p) + g_n(1 - p)) / 2.
struct SymmetrizedWedge {
  int n = 1;
};

struct GaussianMixture {
  std::vector<double> weights;
  std::vector<double> means;
  std::vector<double> stddevs;
};

/// Piecewise-linear density through (p, value) knots spanning [0, 1].
struct Tabulated {
  std::vector<std::pair<double, double>> knots;
};

class BeliefMeasure;

/// factor times a base measure.
struct Scaled {
  std::shared_ptr<const BeliefMeasure> base;
  double factor = 1.0;
};

using MeasureKind =
    std::variant<Wedge, Uniform, SymmetrizedWedge, GaussianMixture, Tabulated, Scaled>;

/// Wealth measure of the diffuse bettors over beliefs p in [0, 1], given by a
/// continuous, strictly positive density. Immutable after construction.
class BeliefMeasure {
 public:
  static BeliefMeasure wedge(int n);
  static BeliefMeasure uniform();
  static BeliefMeasure symmetrized_wedge(int n);
  static BeliefMeasure gaussian_mixture(std::vector<double> weights, std::vector<double> means,
                                        std::vector<double> stddevs);
  static BeliefMeasure tabulated(std::vector<std::pair<double, double>> knots);
  static BeliefMeasure scaled(BeliefMeasure base, double factor);

  /// Throws DomainError for p outside [0, 1].
  double density(double p) const;

  /// Mass of the interval between lo and hi. Endpoint openness is irrelevant
  /// because the measure has a density. Uses the closed-form distribution
  /// function where the family has one, quadrature otherwise.
  double mass(double lo, double hi) const;

  /// Always integrates the density numerically.
  double mass_by_quadrature(double lo, double hi,
                            double tol = quadrature::kDefaultTolerance) const;

  /// Integral of h(p) * density(p) over [lo, hi].
  template <class H>
  double integrate(const H& h, double lo, double hi,
                   double tol = quadrature::kDefaultTolerance) const {
    check_interval(lo, hi);
    return quadrature::adaptive_simpson_split(
        [&](double p) { return h(p) * density_unchecked(p); }, lo, hi, breakpoints_, tol);
  }

  double total_mass() const { return total_mass_; }
  bool has_closed_form() const;
  const MeasureKind& kind() const { return kind_; }
  /// Interior points where the density has a kink.
  const std::vector<double>& breakpoints() const { return breakpoints_; }

 private:
  explicit BeliefMeasure(MeasureKind kind);

  double density_unchecked(double p) const;
  double cdf_closed_form(double x) const;
  static void check_interval(double lo, double hi);

  MeasureKind kind_;
  std::vector<double> breakpoints_;
  double total_mass_ = 0.0;
};

double wedge_density(int n, double p);
double symmetrized_wedge_density(int n, double p);
double gaussian_mixture_density(const std::vector<double>& weights,
                                const std::vector<double>& means,
                                const std::vector<double>& stddevs, double p);

}  // namespace parimutuel
