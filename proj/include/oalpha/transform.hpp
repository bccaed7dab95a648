#pragma once

#include <cstddef>
#include <span>

#include "oalpha/core_params.hpp"
#include "oalpha/grid.hpp"

namespace oalpha {

struct TransformOptions {
  /// Largest endpoint modulus allowed, relative to the peak modulus.
  double tail_eps = 1e-10;
};

/// Throws TailMassError if either endpoint exceeds tail_eps * max|v|.
void check_tail_mass(std::span<const cplx> values, double tail_eps);

/// F[f](w) = (1/sqrt(2 pi)) int f(t) exp(+i t w) dt, trapezoid rule, evaluated
/// on omega_grid.
Spectrum fourier(const SampledSignal& signal, const GridSpec& omega_grid,
                 const TransformOptions& opts = {});

/// F_alpha[f](s) = int f(t) K_alpha(t, s) dt, trapezoid rule, evaluated on
/// s_grid.
Spectrum frft(const SampledSignal& signal, const AngleParams& params, const GridSpec& s_grid,
              const TransformOptions& opts = {});

/// Direct quadrature of int O_alpha(t, s) f(t) dt on an arbitrary symmetric
/// s_grid. O(n m); this is the reference the fast path is checked against.
Spectrum oalpha_direct(const SampledSignal& signal, const AngleParams& params,
                       const GridSpec& s_grid, const TransformOptions& opts = {});

/// s-grid produced by oalpha_fast for an n-point t-grid:
/// ds = 2 pi sin(alpha) / (n dt), s_min = -(n/2) ds.
GridSpec fast_spectral_grid(const GridSpec& t_grid, const AngleParams& params);

/// Chirp / FFT / chirp evaluation of O_alpha. The t-grid must be symmetric
/// with a power-of-two size. Output lives on fast_spectral_grid().
Spectrum oalpha_fast(const SampledSignal& signal, const AngleParams& params,
                     const TransformOptions& opts = {});

/// As above after zero-padding the signal to padded_size samples (a power of
/// two, >= n), which refines ds by padded_size / n. The input grid must be
/// FFT symmetric.
Spectrum oalpha_fast(const SampledSignal& signal, const AngleParams& params,
                     std::size_t padded_size, const TransformOptions& opts = {});

/// f(t) = conj(c)/sqrt(2 pi) exp(-i a t^2)
///        int O f(s) exp(-i a s^2) (exp(i s t csc) + conj(z) exp(-i s t csc)) ds
/// by direct quadrature on an arbitrary t_grid.
SampledSignal oalpha_inverse(const Spectrum& spectrum, const AngleParams& params,
                             const GridSpec& t_grid, const TransformOptions& opts = {});

/// FFT evaluation of oalpha_inverse. The spectrum grid must be FFT symmetric
/// with a power-of-two size; the result is on the dual t-grid
/// dt = 2 pi sin(alpha) / (n ds), t_min = -(n/2) dt.
SampledSignal oalpha_inverse_fast(const Spectrum& spectrum, const AngleParams& params,
                                  const TransformOptions& opts = {});

}  // namespace oalpha
