#pragma once

#include <algorithm>
#include <cmath>
#include <utility>

namespace qbtc {

/// Golden-section search for the maximum of a unimodal f on [lo, hi].
/// Stops when the bracket is narrower than rel_width * max(|lo|, |hi|) (or
/// abs_width, whichever is larger). Returns (argmax, f(argmax)).
template <class F>
std::pair<double, double> golden_section_max(F&& f, double lo, double hi, double rel_width = 1e-12,
                                             double abs_width = 0.0, int max_iter = 400) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < max_iter; ++i) {
    const double tol = std::max(abs_width, rel_width * std::max(std::abs(lo), std::abs(hi)));
    if (hi - lo <= tol) break;
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
  return fc >= fd ? std::pair{c, fc} : std::pair{d, fd};
}

}  // namespace qbtc
