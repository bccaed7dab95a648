#pragma once

#include <complex>

namespace oalpha {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// The unimodular mixing coefficient. `none` exists only for diagnostics
/// (the plain FRFT kernel with the reflected branch switched off).
enum class ZChoice { plus_i, minus_i, none };

/// Angle-dependent constants of the chirp kernels. Immutable once built; use
/// make_params() to construct.
class AngleParams {
 public:
  double alpha() const noexcept { return alpha_; }
  double sin_a() const noexcept { return sin_a_; }
  double cos_a() const noexcept { return cos_a_; }
  double csc_a() const noexcept { return csc_a_; }
  double cot_a() const noexcept { return cot_a_; }
  /// Chirp rate cot(alpha)/2.
  double a() const noexcept { return a_; }
  /// Principal sqrt(1 - i cot(alpha)); Re(c) > 0.
  cplx c() const noexcept { return c_; }
  cplx z() const noexcept { return z_; }
  ZChoice z_choice() const noexcept { return z_choice_; }

  /// Same angle with z = 0. Only meaningful for diagnostics.
  AngleParams without_z() const noexcept {
    AngleParams copy = *this;
    copy.z_ = cplx{0.0, 0.0};
    copy.z_choice_ = ZChoice::none;
    return copy;
  }

 private:
  friend AngleParams make_params(double alpha, ZChoice z_choice);
  AngleParams() = default;

  double alpha_ = 0.0;
  double sin_a_ = 0.0;
  double cos_a_ = 0.0;
  double csc_a_ = 0.0;
  double cot_a_ = 0.0;
  double a_ = 0.0;
  cplx c_{};
  cplx z_{};
  ZChoice z_choice_ = ZChoice::plus_i;
};

/// Throws AngleDegenerate when alpha is within 1e-12 of a multiple of pi and
/// AngleOutOfRange when sin(alpha) <= 0. z_choice must be plus_i or minus_i.
AngleParams make_params(double alpha, ZChoice z_choice);

/// FRFT kernel (c / sqrt(2 pi)) exp(i[a(t^2 + s^2) - s t csc(alpha)]).
cplx kernel_K(const AngleParams& params, double t, double s);

/// [K(t, s) + z K(t, -s)] / 2.
cplx kernel_O(const AngleParams& params, double t, double s);

enum class WeightKind { abs_power, abs_power_log, log_abs };

/// w(t) = |t|^p, |t|^p ln|t| or ln|t|.
struct WeightSpec {
  WeightKind kind = WeightKind::abs_power;
  double p = 0.0;

  static WeightSpec abs_power(double p) { return {WeightKind::abs_power, p}; }
  static WeightSpec abs_power_log(double p) { return {WeightKind::abs_power_log, p}; }
  static WeightSpec log_abs() { return {WeightKind::log_abs, 0.0}; }

  /// Effective power of |t| near the origin (0 for ln|t|).
  double exponent() const noexcept { return kind == WeightKind::log_abs ? 0.0 : p; }
  bool has_log() const noexcept { return kind != WeightKind::abs_power; }
  /// Whether the weight is unbounded at t = 0.
  bool singular_at_zero() const noexcept { return has_log() ? p <= 0.0 : p < 0.0; }

  /// Value at t != 0. At t == 0 returns the limit when finite, otherwise inf.
  double operator()(double t) const;
};

/// Euler Gamma for x > 0 (DomainError otherwise).
double gamma_fn(double x);

/// psi(x) = Gamma'(x) / Gamma(x) for x > 0 (DomainError otherwise).
double digamma_fn(double x);

/// Pitt constant pi^lambda [Gamma((1 - lambda)/4) / Gamma((1 + lambda)/4)]^2,
/// 0 <= lambda < 1.
double pitt_constant(double lambda);

/// Logarithmic-uncertainty constant (psi(1/4) + ln(sin(alpha)/pi)) / 2.
double log_constant(const AngleParams& params);

}  // namespace oalpha
