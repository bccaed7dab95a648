#pragma once

#include <cmath>
#include <cstddef>

namespace oalpha {

struct GoldenResult {
  double x = 0.0;
  double fx = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Golden-section search for a minimum of a unimodal f on [lo, hi]. Stops
/// when the bracket is narrower than tol * (1 + |x|); otherwise returns the
/// best point seen with converged = false after max_iter iterations.
template <class Fn>
GoldenResult golden_section_minimize(Fn&& f, double lo, double hi, double tol = 1e-8,
                                     std::size_t max_iter = 200) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  GoldenResult best{fc <= fd ? c : d, fc <= fd ? fc : fd, 2, false};

  for (std::size_t it = 0; it < max_iter; ++it) {
    if (std::fabs(b - a) <= tol * (1.0 + std::fabs(best.x))) {
      best.converged = true;
      break;
    }
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      if (fc < best.fx) best = {c, fc, best.evaluations, false};
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      if (fd < best.fx) best = {d, fd, best.evaluations, false};
    }
    ++best.evaluations;
  }
  return best;
}

}  // namespace oalpha
