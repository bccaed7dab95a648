#include "oalpha/core_params.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "oalpha/error.hpp"

namespace oalpha {

namespace {

constexpr double kDegenerateTol = 1e-12;

}  // namespace

AngleParams make_params(double alpha, ZChoice z_choice) {
  if (!std::isfinite(alpha)) {
    throw AngleOutOfRange(fmt::format("angle {} is not finite", alpha));
  }
  if (z_choice == ZChoice::none) {
    throw DomainError("z must be +i or -i; use AngleParams::without_z() for diagnostics");
  }
  const double r = std::fabs(std::remainder(alpha, kPi));
  if (r < kDegenerateTol) {
    throw AngleDegenerate(fmt::format("angle {} is a multiple of pi (delta kernel)", alpha));
  }
  const double s = std::sin(alpha);
  if (!(s > 0.0)) {
    throw AngleOutOfRange(fmt::format("angle {} has sin(alpha) = {} <= 0", alpha, s));
  }

  AngleParams p;
  p.alpha_ = alpha;
  p.sin_a_ = s;
  p.cos_a_ = std::cos(alpha);
  p.csc_a_ = 1.0 / s;
  p.cot_a_ = p.cos_a_ / s;
  p.a_ = 0.5 * p.cot_a_;
  p.c_ = std::sqrt(cplx{1.0, -p.cot_a_});
  p.z_choice_ = z_choice;
  p.z_ = z_choice == ZChoice::plus_i ? cplx{0.0, 1.0} : cplx{0.0, -1.0};
  return p;
}

cplx kernel_K(const AngleParams& params, double t, double s) {
  const double phase = params.a() * (t * t + s * s) - s * t * params.csc_a();
  return params.c() / std::sqrt(2.0 * kPi) * std::polar(1.0, phase);
}

cplx kernel_O(const AngleParams& params, double t, double s) {
  return (kernel_K(params, t, s) + params.z() * kernel_K(params, t, -s)) / 2.0;
}

double WeightSpec::operator()(double t) const {
  const double at = std::fabs(t);
  if (at == 0.0) {
    if (singular_at_zero()) return std::numeric_limits<double>::infinity();
    if (kind == WeightKind::abs_power) return p == 0.0 ? 1.0 : 0.0;
    return 0.0;
  }
  switch (kind) {
    case WeightKind::abs_power:
      return std::pow(at, p);
    case WeightKind::abs_power_log:
      return std::pow(at, p) * std::log(at);
    case WeightKind::log_abs:
      return std::log(at);
  }
  return 0.0;
}

double gamma_fn(double x) {
  if (!(x > 0.0)) throw DomainError(fmt::format("gamma_fn requires x > 0, got {}", x));
  return std::tgamma(x);
}

double digamma_fn(double x) {
  if (!(x > 0.0)) throw DomainError(fmt::format("digamma_fn requires x > 0, got {}", x));
  // Shift upward with psi(x) = psi(x + 1) - 1/x, then the asymptotic series.
  double shift = 0.0;
  while (x < 10.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // Bernoulli terms B_2k / (2k x^2k), k = 1..7.
  const double series =
      inv2 * (1.0 / 12 -
              inv2 * (1.0 / 120 -
                      inv2 * (1.0 / 252 -
                              inv2 * (1.0 / 240 -
                                      inv2 * (1.0 / 132 -
                                              inv2 * (691.0 / 32760 - inv2 * (1.0 / 12)))))));
  return shift + std::log(x) - 0.5 * inv - series;
}

double pitt_constant(double lambda) {
  if (!(lambda >= 0.0 && lambda < 1.0)) {
    throw DomainError(fmt::format("pitt_constant requires 0 <= lambda < 1, got {}", lambda));
  }
  const double ratio = gamma_fn((1.0 - lambda) / 4.0) / gamma_fn((1.0 + lambda) / 4.0);
  return std::pow(kPi, lambda) * ratio * ratio;
}

double log_constant(const AngleParams& params) {
  return 0.5 * (digamma_fn(0.25) + std::log(params.sin_a() / kPi));
}

}  // namespace oalpha
