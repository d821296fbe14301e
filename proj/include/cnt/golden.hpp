#pragma once

#include <cmath>
#include <utility>

namespace cnt {

struct LineMinimum {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section search for a minimum of f on [lo, hi]. Stops when the
/// bracket is narrower than `width` or after `max_iter` contractions. The
/// returned point is the best one evaluated, not just the bracket midpoint.
template <typename F>
LineMinimum golden_section_minimize(F&& f, double lo, double hi, double width, int max_iter = 200) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  LineMinimum best = f1 <= f2 ? LineMinimum{x1, f1} : LineMinimum{x2, f2};

  for (int it = 0; it < max_iter && (hi - lo) > width; ++it) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
      if (f1 < best.value) best = {x1, f1};
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
      if (f2 < best.value) best = {x2, f2};
    }
  }
  const double mid = 0.5 * (lo + hi);
  const double fm = f(mid);
  if (fm < best.value) best = {mid, fm};
  return best;
}

}  // namespace cnt
