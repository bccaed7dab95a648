#pragma once

#include <span>
#include <vector>

#include "oalpha/core_params.hpp"

namespace oalpha {

/// In-place radix-2 DFT, X_k = sum_j x_j exp(sign * 2 pi i j k / n), no
/// normalization. sign must be +1 or -1; throws GridError unless data.size()
/// is a power of two.
void fft_inplace(std::span<cplx> data, int sign);

/// Samples Y(y) = sum_j v_j exp(sign * i x_j y) on y_l = y_min + l dy,
/// l = 0..n (n + 1 values, the last one closes the period), where
/// x_j = x_min + j dx and dy = 2 pi / (n dx).
std::vector<cplx> scaled_dft(std::span<const cplx> values, double x_min, double dx,
                             double y_min, int sign);

}  // namespace oalpha
