#include "oalpha/fft.hpp"

#include <cmath>
#include <utility>

#include <fmt/format.h>

#include "oalpha/error.hpp"
#include "oalpha/grid.hpp"

namespace oalpha {

void fft_inplace(std::span<cplx> data, int sign) {
  const std::size_t n = data.size();
  if (!is_power_of_two(n)) throw GridError(fmt::format("FFT length {} is not a power of two", n));
  if (n == 1) return;

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }

  // Twiddles evaluated directly (no recurrence) to keep roundoff at O(eps log n).
  std::vector<cplx> twiddle(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    twiddle[k] = std::polar(1.0, sign * 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n));
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const cplx u = data[start + k];
        const cplx v = data[start + k + half] * twiddle[k * stride];
        data[start + k] = u + v;
        data[start + k + half] = u - v;
      }
    }
  }
}

std::vector<cplx> scaled_dft(std::span<const cplx> values, double x_min, double dx,
                             double y_min, int sign) {
  const std::size_t n = values.size();
  const double dy = 2.0 * kPi / (static_cast<double>(n) * dx);
  const double sg = static_cast<double>(sign);

  // exp(i x_j y_l) = exp(i x_min y_min) exp(i j dx y_min) exp(i l dy x_min) exp(2 pi i j l / n)
  std::vector<cplx> work(n);
  for (std::size_t j = 0; j < n; ++j) {
    work[j] = values[j] * std::polar(1.0, sg * static_cast<double>(j) * dx * y_min);
  }
  fft_inplace(work, sign);

  std::vector<cplx> out(n + 1);
  for (std::size_t l = 0; l <= n; ++l) {
    const double y = y_min + static_cast<double>(l) * dy;
    // Combined post-twiddle exp(i x_min y_l).
    out[l] = work[l % n] * std::polar(1.0, sg * x_min * y);
  }
  return out;
}

}  // namespace oalpha
