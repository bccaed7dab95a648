#include "oalpha/grid.hpp"

#include <fmt/format.h>

#include "oalpha/error.hpp"

namespace oalpha {

namespace {
constexpr double kNodeTol = 1e-9;
}

void GridSpec::validate() const {
  if (n < 2) throw GridError(fmt::format("grid needs at least 2 points, got {}", n));
  if (!(dx > 0.0) || !std::isfinite(dx) || !std::isfinite(x_min)) {
    throw GridError(fmt::format("grid spacing must be positive and finite (x_min={}, dx={})", x_min, dx));
  }
}

std::size_t GridSpec::zero_index() const noexcept {
  const double k = -x_min / dx;
  const double r = std::round(k);
  if (r < 0.0 || r >= static_cast<double>(n) || std::fabs(k - r) > kNodeTol) return npos;
  return static_cast<std::size_t>(r);
}

bool GridSpec::is_fft_symmetric() const noexcept {
  return std::fabs(x_min + 0.5 * static_cast<double>(n) * dx) <= kNodeTol * dx;
}

bool GridSpec::is_symmetric() const noexcept {
  return is_fft_symmetric() ||
         std::fabs(x_min + 0.5 * static_cast<double>(n - 1) * dx) <= kNodeTol * dx;
}

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

template <class Domain>
void validate_samples(const Sampled<Domain>& s) {
  s.grid.validate();
  if (s.values.size() != s.grid.n) {
    throw InputError(fmt::format("sample count {} does not match grid size {}", s.values.size(), s.grid.n));
  }
  for (const cplx& v : s.values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw InputError("samples must be finite");
  }
}

template void validate_samples(const Sampled<TimeDomain>&);
template void validate_samples(const Sampled<SpectralDomain>&);

}  // namespace oalpha
