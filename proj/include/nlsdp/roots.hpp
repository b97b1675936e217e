#pragma once

#include <cmath>
#include <functional>

#include "nlsdp/errors.hpp"

namespace nlsdp {

/// Solves f(x) = target for a strictly decreasing f on (left, inf) with
/// f(left+) > target. Bisection on a geometrically grown bracket, then Newton
/// polish (kept only while it stays inside the bracket and lowers the residual).
inline double invert_decreasing(const std::function<double(double)>& f,
                                const std::function<double(double)>& df, double left,
                                double target, double rel_tol = 1e-13) {
  double lo = left;
  double width = 1.0;
  double hi = lo + width;
  int grow = 0;
  while (f(hi) > target) {
    lo = hi;
    width *= 2.0;
    hi = left + width;
    if (++grow > 200) throw NumericalError("invert_decreasing: bracket expansion failed");
  }
  if (!(f(lo) > target)) {
    throw NumericalError("invert_decreasing: target above the value at the left end");
  }
  for (int it = 0; it < 300; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) > target) lo = mid; else hi = mid;
    if (hi - lo <= 1e-16 * std::max(1.0, std::abs(hi))) break;
  }
  double x = 0.5 * (lo + hi);
  double res = std::abs(f(x) - target);
  for (int it = 0; it < 8 && res > rel_tol * std::abs(target) * 1e-3; ++it) {
    const double slope = df(x);
    if (!(slope < 0.0) || !std::isfinite(slope)) break;
    const double next = x - (f(x) - target) / slope;
    if (!(next > left)) break;
    const double next_res = std::abs(f(next) - target);
    if (!(next_res < res)) break;
    x = next;
    res = next_res;
  }
  if (!(res <= rel_tol * std::abs(target))) {
    throw NumericalError("invert_decreasing: tolerance not reached");
  }
  return x;
}

}  // namespace nlsdp
