#include "oalpha/transform.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "oalpha/error.hpp"
#include "oalpha/fft.hpp"

namespace oalpha {

namespace {

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * kPi);

// Phasors are re-seeded from std::polar every kReseed nodes so the
// multiplicative recurrence never accumulates more than ~kReseed ulps.
constexpr std::size_t kReseed = 64;

struct PhaseSums {
  cplx minus;  // sum_j v_j exp(-i freq x_j)
  cplx plus;   // sum_j v_j exp(+i freq x_j)
};

PhaseSums phase_sums(std::span<const cplx> v, const GridSpec& grid, double freq) {
  const std::size_t n = v.size();
  const double step_re = std::cos(freq * grid.dx);
  const double step_im = -std::sin(freq * grid.dx);
  double m_re = 0.0, m_im = 0.0, p_re = 0.0, p_im = 0.0;
  for (std::size_t block = 0; block < n; block += kReseed) {
    const double phase = -freq * grid.at(block);
    double c = std::cos(phase);
    double s = std::sin(phase);
    const std::size_t end = std::min(n, block + kReseed);
    for (std::size_t j = block; j < end; ++j) {
      const double vr = v[j].real();
      const double vi = v[j].imag();
      // v * (c + i s) and v * (c - i s)
      m_re += vr * c - vi * s;
      m_im += vr * s + vi * c;
      p_re += vr * c + vi * s;
      p_im += vi * c - vr * s;
      const double nc = c * step_re - s * step_im;
      s = c * step_im + s * step_re;
      c = nc;
    }
  }
  return {{m_re, m_im}, {p_re, p_im}};
}

// w_j dx exp(i a x_j^2) v_j: trapezoid-weighted, pre-chirped samples.
std::vector<cplx> weighted_chirped(std::span<const cplx> v, const GridSpec& grid, double a) {
  std::vector<cplx> out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    const double x = grid.at(j);
    out[j] = v[j] * (trapezoid_weight(j, v.size()) * grid.dx) * std::polar(1.0, a * x * x);
  }
  return out;
}

template <class Domain>
void check_input(const Sampled<Domain>& s, const TransformOptions& opts) {
  validate_samples(s);
  check_tail_mass(s.values, opts.tail_eps);
}

void require_symmetric(const GridSpec& grid, const char* what) {
  if (!grid.is_symmetric()) {
    throw GridAsymmetryError(fmt::format("{} grid is not symmetric about 0 (min={}, step={}, n={})", what,
                                         grid.x_min, grid.dx, grid.n));
  }
}

void require_fft_grid(const GridSpec& grid, bool fft_symmetric, const char* what) {
  if (!is_power_of_two(grid.n)) {
    throw GridError(fmt::format("{} grid size {} is not a power of two", what, grid.n));
  }
  const bool ok = fft_symmetric ? grid.is_fft_symmetric() : grid.is_symmetric();
  if (!ok) {
    throw GridError(fmt::format("{} grid is not symmetric about 0 (min={}, step={}, n={})", what, grid.x_min,
                                grid.dx, grid.n));
  }
}

}  // namespace

void check_tail_mass(std::span<const cplx> values, double tail_eps) {
  if (values.empty()) return;
  double peak = 0.0;
  for (const cplx& v : values) peak = std::max(peak, std::abs(v));
  const double ends = std::max(std::abs(values.front()), std::abs(values.back()));
  if (ends > tail_eps * peak) {
    throw TailMassError(fmt::format("endpoint modulus {:.3e} exceeds {:.1e} x peak {:.3e}; widen the grid",
                                    ends, tail_eps, peak));
  }
}

Spectrum fourier(const SampledSignal& signal, const GridSpec& omega_grid, const TransformOptions& opts) {
  check_input(signal, opts);
  omega_grid.validate();
  const std::vector<cplx> v = weighted_chirped(signal.values, signal.grid, 0.0);
  Spectrum out{omega_grid, std::vector<cplx>(omega_grid.n)};
  for (std::size_t m = 0; m < omega_grid.n; ++m) {
    out.values[m] = kInvSqrt2Pi * phase_sums(v, signal.grid, omega_grid.at(m)).plus;
  }
  return out;
}

Spectrum frft(const SampledSignal& signal, const AngleParams& params, const GridSpec& s_grid,
              const TransformOptions& opts) {
  check_input(signal, opts);
  s_grid.validate();
  const std::vector<cplx> v = weighted_chirped(signal.values, signal.grid, params.a());
  const cplx scale = params.c() * kInvSqrt2Pi;
  Spectrum out{s_grid, std::vector<cplx>(s_grid.n)};
  for (std::size_t m = 0; m < s_grid.n; ++m) {
    const double s = s_grid.at(m);
    const PhaseSums sums = phase_sums(v, signal.grid, s * params.csc_a());
    out.values[m] = scale * std::polar(1.0, params.a() * s * s) * sums.minus;
  }
  return out;
}

Spectrum oalpha_direct(const SampledSignal& signal, const AngleParams& params, const GridSpec& s_grid,
                       const TransformOptions& opts) {
  check_input(signal, opts);
  s_grid.validate();
  require_symmetric(s_grid, "s");
  const std::vector<cplx> v = weighted_chirped(signal.values, signal.grid, params.a());
  const cplx scale = params.c() * kInvSqrt2Pi;
  const cplx z = params.z();
  Spectrum out{s_grid, std::vector<cplx>(s_grid.n)};
  for (std::size_t m = 0; m < s_grid.n; ++m) {
    const double s = s_grid.at(m);
    const PhaseSums sums = phase_sums(v, signal.grid, s * params.csc_a());
    out.values[m] = scale * std::polar(1.0, params.a() * s * s) * ((sums.minus + z * sums.plus) / 2.0);
  }
  return out;
}

GridSpec fast_spectral_grid(const GridSpec& t_grid, const AngleParams& params) {
  const double nd = static_cast<double>(t_grid.n);
  const double ds = 2.0 * kPi * params.sin_a() / (nd * t_grid.dx);
  return {t_grid.n, -0.5 * nd * ds, ds};
}

Spectrum oalpha_fast(const SampledSignal& signal, const AngleParams& params, const TransformOptions& opts) {
  check_input(signal, opts);
  require_fft_grid(signal.grid, false, "t");

  const std::size_t n = signal.grid.n;
  const std::vector<cplx> hhat = weighted_chirped(signal.values, signal.grid, params.a());
  const double nd = static_cast<double>(n);
  const double domega = 2.0 * kPi / (nd * signal.grid.dx);
  // sqrt(2 pi) G(w_l) for w_l = (l - n/2) domega, l = 0..n, G = F[hhat].
  const std::vector<cplx> g = scaled_dft(hhat, signal.grid.x_min, signal.grid.dx, -0.5 * nd * domega, +1);

  const GridSpec s_grid = fast_spectral_grid(signal.grid, params);
  const cplx scale = params.c() * kInvSqrt2Pi / 2.0;
  const cplx z = params.z();
  Spectrum out{s_grid, std::vector<cplx>(n)};
  for (std::size_t m = 0; m < n; ++m) {
    const double s = s_grid.at(m);
    // s csc(alpha) = w_m, and -w_m = w_{n-m}.
    out.values[m] = scale * std::polar(1.0, params.a() * s * s) * (g[n - m] + z * g[m]);
  }
  return out;
}

Spectrum oalpha_fast(const SampledSignal& signal, const AngleParams& params, std::size_t padded_size,
                     const TransformOptions& opts) {
  if (padded_size == signal.grid.n) return oalpha_fast(signal, params, opts);
  check_input(signal, opts);
  require_fft_grid(signal.grid, true, "t");
  if (!is_power_of_two(padded_size) || padded_size < signal.grid.n) {
    throw GridError(fmt::format("padded size {} must be a power of two >= {}", padded_size, signal.grid.n));
  }
  const std::size_t offset = (padded_size - signal.grid.n) / 2;
  SampledSignal padded{{padded_size, signal.grid.x_min - static_cast<double>(offset) * signal.grid.dx,
                        signal.grid.dx},
                       std::vector<cplx>(padded_size)};
  std::copy(signal.values.begin(), signal.values.end(), padded.values.begin() + static_cast<long>(offset));
  // Keep the original trapezoid end weights.
  padded.values[offset] *= 0.5;
  padded.values[offset + signal.grid.n - 1] *= 0.5;
  // The padded ends are zero, so the endpoint halving inside oalpha_fast is a no-op.
  return oalpha_fast(padded, params, opts);
}

SampledSignal oalpha_inverse(const Spectrum& spectrum, const AngleParams& params, const GridSpec& t_grid,
                             const TransformOptions& opts) {
  check_input(spectrum, opts);
  require_symmetric(spectrum.grid, "s");
  t_grid.validate();
  // P(s) = O f(s) exp(-i a s^2), trapezoid weighted.
  const std::vector<cplx> v = weighted_chirped(spectrum.values, spectrum.grid, -params.a());
  const cplx scale = std::conj(params.c()) * kInvSqrt2Pi;
  const cplx zbar = std::conj(params.z());
  SampledSignal out{t_grid, std::vector<cplx>(t_grid.n)};
  for (std::size_t j = 0; j < t_grid.n; ++j) {
    const double t = t_grid.at(j);
    const PhaseSums sums = phase_sums(v, spectrum.grid, t * params.csc_a());
    out.values[j] = scale * std::polar(1.0, -params.a() * t * t) * (sums.plus + zbar * sums.minus);
  }
  return out;
}

SampledSignal oalpha_inverse_fast(const Spectrum& spectrum, const AngleParams& params,
                                  const TransformOptions& opts) {
  check_input(spectrum, opts);
  require_fft_grid(spectrum.grid, true, "s");

  const std::size_t n = spectrum.grid.n;
  const double nd = static_cast<double>(n);
  const std::vector<cplx> v = weighted_chirped(spectrum.values, spectrum.grid, -params.a());
  const double dy = 2.0 * kPi / (nd * spectrum.grid.dx);  // spacing of y = t csc(alpha)
  // U_l = sum_m v_m exp(i s_m y_l), y_l = (l - n/2) dy.
  const std::vector<cplx> u = scaled_dft(v, spectrum.grid.x_min, spectrum.grid.dx, -0.5 * nd * dy, +1);

  const GridSpec t_grid{n, -0.5 * nd * dy * params.sin_a(), dy * params.sin_a()};
  const cplx scale = std::conj(params.c()) * kInvSqrt2Pi;
  const cplx zbar = std::conj(params.z());
  SampledSignal out{t_grid, std::vector<cplx>(n)};
  for (std::size_t l = 0; l < n; ++l) {
    const double t = t_grid.at(l);
    out.values[l] = scale * std::polar(1.0, -params.a() * t * t) * (u[l] + zbar * u[n - l]);
  }
  return out;
}

}  // namespace oalpha
