#pragma once

#include <cmath>
#include <cstddef>

namespace dcdsum {

struct GoldenSectionResult {
  double x = 0.0;
  double fx = 0.0;
  std::size_t iterations = 0;
};

/// Maximizes a function assumed unimodal on [lo, hi] until the bracket is
/// narrower than `tolerance`.
template <typename F>
GoldenSectionResult golden_section_maximize(F&& f, double lo, double hi, double tolerance,
                                            std::size_t max_iterations = 500) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  std::size_t it = 0;
  while (hi - lo > tolerance && it < max_iterations) {
    ++it;
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
  const double x = (lo + hi) / 2.0;
  return {x, f(x), it};
}

}  // namespace dcdsum
