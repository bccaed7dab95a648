#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "oalpha/core_params.hpp"

namespace oalpha {

/// Uniform grid x_k = x_min + k dx, k = 0..n-1.
struct GridSpec {
  std::size_t n = 0;
  double x_min = 0.0;
  double dx = 0.0;

  double at(std::size_t k) const noexcept { return x_min + static_cast<double>(k) * dx; }
  bool operator==(const GridSpec&) const = default;
  double last() const noexcept { return at(n - 1); }
  /// End of the half-open box [x_min, x_min + n dx).
  double box_end() const noexcept { return x_min + static_cast<double>(n) * dx; }

  /// Throws GridError unless n >= 2 and dx > 0 (both finite).
  void validate() const;

  /// Index of the node at the origin, or npos when 0 is not a node.
  std::size_t zero_index() const noexcept;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// Mirror symmetric (x_min = -(n-1) dx / 2) or FFT symmetric
  /// (x_min = -n dx / 2, every node except the first has its mirror).
  bool is_symmetric() const noexcept;
  bool is_fft_symmetric() const noexcept;

  /// n samples covering the half-open box [-half_width, half_width).
  static GridSpec centered(std::size_t n, double half_width) {
    return {n, -half_width, 2.0 * half_width / static_cast<double>(n)};
  }
  /// n samples covering [lo, hi).
  static GridSpec box(std::size_t n, double lo, double hi) {
    return {n, lo, (hi - lo) / static_cast<double>(n)};
  }
};

bool is_power_of_two(std::size_t n) noexcept;

/// Complex samples on a uniform grid. The tag keeps time-domain signals and
/// transform-domain spectra from being mixed up.
template <class Domain>
struct Sampled {
  GridSpec grid;
  std::vector<cplx> values;

  std::span<const cplx> view() const noexcept { return values; }
  std::size_t size() const noexcept { return values.size(); }
};

struct TimeDomain {};
struct SpectralDomain {};

using SampledSignal = Sampled<TimeDomain>;
using Spectrum = Sampled<SpectralDomain>;

/// Samples fn on grid.
template <class Domain = TimeDomain, class Fn>
Sampled<Domain> sample(const GridSpec& grid, Fn&& fn) {
  Sampled<Domain> out{grid, std::vector<cplx>(grid.n)};
  for (std::size_t k = 0; k < grid.n; ++k) out.values[k] = cplx(fn(grid.at(k)));
  return out;
}

/// Throws InputError if lengths differ or any entry is not finite.
template <class Domain>
void validate_samples(const Sampled<Domain>& s);

/// Composite trapezoid weight of node k (1/2 at both ends).
inline double trapezoid_weight(std::size_t k, std::size_t n) noexcept {
  return (k == 0 || k + 1 == n) ? 0.5 : 1.0;
}

}  // namespace oalpha
