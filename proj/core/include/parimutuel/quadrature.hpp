#pragma once

#include <cmath>
#include <span>

#include "parimutuel/error.hpp"

namespace parimutuel::quadrature {

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr int kDefaultMaxDepth = 40;

namespace detail {

template <class F>
double simpson_step(const F& f, double a, double fa, double b, double fb, double m, double fm,
                    double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  if (!std::isfinite(flm) || !std::isfinite(frm)) {
    throw NumericalError("adaptive Simpson: non-finite integrand value");
  }
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance tol.
/// At max_depth the Richardson-corrected estimate is accepted as is.
template <class F>
double adaptive_simpson(const F& f, double a, double b, double tol = kDefaultTolerance,
                        int max_depth = kDefaultMaxDepth) {
  if (!(a <= b)) throw DomainError("adaptive_simpson: lower limit exceeds upper limit");
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  if (!std::isfinite(fa) || !std::isfinite(fb) || !std::isfinite(fm)) {
    throw NumericalError("adaptive Simpson: non-finite integrand value");
  }
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_step(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

/// Integrates piecewise over [a, b], splitting at every breakpoint strictly
/// inside the interval. Breakpoints must be sorted. The tolerance is shared
/// across pieces in proportion to their width.
template <class F>
double adaptive_simpson_split(const F& f, double a, double b, std::span<const double> breakpoints,
                              double tol = kDefaultTolerance, int max_depth = kDefaultMaxDepth) {
  if (!(a <= b)) throw DomainError("adaptive_simpson: lower limit exceeds upper limit");
  if (a == b) return 0.0;
  const double width = b - a;
  double total = 0.0;
  double lo = a;
  for (double x : breakpoints) {
    if (x <= lo) continue;
    if (x >= b) break;
    total += adaptive_simpson(f, lo, x, tol * (x - lo) / width, max_depth);
    lo = x;
  }
  total += adaptive_simpson(f, lo, b, tol * (b - lo) / width, max_depth);
  return total;
}

}  // namespace parimutuel::quadrature
