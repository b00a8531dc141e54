#pragma once

#include <cmath>
#include <utility>

#include "parimutuel/error.hpp"

namespace parimutuel {

struct BisectionResult {
  double root = 0.0;
  double lo = 0.0;  ///< final bracket end carrying the sign of f(a)
  double hi = 0.0;  ///< final bracket end carrying the sign of f(b)
  int iterations = 0;
};

/// Bisection for a root of f bracketed by a and b, in either order.
///
/// f(a) and f(b) must not share a strict sign. Halving continues until the
/// bracket is narrower than tol and `accept(mid)` holds, or until the
/// bracket cannot shrink any further in double precision.
template <class F, class Accept>
BisectionResult bisect(const F& f, double a, double b, double tol, Accept&& accept,
                       int max_iterations = 400) {
  double fa = f(a);
  const double fb = f(b);
  if (fa == 0.0) return {a, a, a, 0};
  if (fb == 0.0) return {b, b, b, 0};
  if ((fa > 0.0) == (fb > 0.0)) throw DomainError("bisect: root is not bracketed");
  BisectionResult out{0.5 * (a + b), a, b, 0};
  for (; out.iterations < max_iterations; ++out.iterations) {
    const double mid = 0.5 * (out.lo + out.hi);
    out.root = mid;
    if (mid == out.lo || mid == out.hi) break;
    if (std::abs(out.hi - out.lo) < tol && accept(mid)) break;
    const double fm = f(mid);
    if (fm == 0.0) {
      out.lo = out.hi = mid;
      break;
    }
    if ((fm > 0.0) == (fa > 0.0)) {
      out.lo = mid;
      fa = fm;
    } else {
      out.hi = mid;
    }
  }
  if (out.iterations >= max_iterations) throw NumericalError("bisect: iteration limit reached");
  return out;
}

template <class F>
BisectionResult bisect(const F& f, double a, double b, double tol) {
  return bisect(f, a, b, tol, [](double) { return true; });
}

struct GoldenSectionResult {
  double argmax = 0.0;
  double value = 0.0;
  int iterations = 0;
};

/// Golden-section search for a maximum of f on [lo, hi], stopping once the
/// bracket is narrower than tol. Assumes f is unimodal on the bracket; the
/// caller is responsible for localising the peak.
template <class F>
GoldenSectionResult golden_section_maximize(const F& f, double lo, double hi, double tol,
                                            int max_iterations = 200) {
  if (!(lo < hi)) throw DomainError("golden_section_maximize: empty bracket");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  int it = 0;
  for (; it < max_iterations && hi - lo > tol; ++it) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return fc >= fd ? GoldenSectionResult{c, fc, it} : GoldenSectionResult{d, fd, it};
}

}  // namespace parimutuel
