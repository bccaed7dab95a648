#pragma once

#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "oalpha/core_params.hpp"
#include "oalpha/grid.hpp"
#include "oalpha/transform.hpp"

namespace oalpha {

/// Finite union of disjoint intervals [lo, hi].
struct IntervalSet {
  std::vector<std::pair<double, double>> intervals;

  /// Throws EmptySetError for an empty set and DomainError for lo >= hi or
  /// overlapping intervals.
  void validate() const;
  double measure() const;
};

/// One evaluated inequality. How margin relates lhs and rhs is documented
/// per functional; aux carries named intermediates.
struct FunctionalRecord {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  std::map<std::string, double> aux;
};

struct FunctionalOptions {
  /// Spectra are zero-padded until the s-step is at most this.
  double max_ds = 0.05;
  TransformOptions transform;
};

inline constexpr double kInfNorm = std::numeric_limits<double>::infinity();

/// (int |f|^p)^(1/p) by trapezoid; p = kInfNorm gives the max modulus.
template <class Domain>
double lp_norm(const Sampled<Domain>& samples, double p);

/// int w(x) |f(x)|^2 dx by trapezoid. When the origin is a grid node and the
/// weight is not smooth there, the node carries the zeta-corrected weight
/// (see singular_node_weight), which restores high-order accuracy.
template <class Domain>
double weighted_moment(const Sampled<Domain>& samples, const WeightSpec& w);

/// Weight that replaces w(0) in a trapezoid sum of step h so that
/// sum_k h w_k g(kh) matches int w g to O(h^(3+p)) for smooth g.
double singular_node_weight(const WeightSpec& w, double h);

/// O_alpha[f] on a zero-padded fast grid with ds <= opts.max_ds. Falls back to
/// direct quadrature when the signal grid is not FFT compatible.
Spectrum functional_spectrum(const SampledSignal& signal, const AngleParams& params,
                             const FunctionalOptions& opts = {});

/// lhs = ||t f|| ||s O f||, rhs = (sin(alpha)/sqrt 2) ||f||^2, margin = lhs - rhs.
/// aux: norm_tf, norm_sOf, norm_f_sq, observed_ratio, sharp_constant.
FunctionalRecord uncertainty_product(const SampledSignal& signal, const AngleParams& params,
                                     const FunctionalOptions& opts = {});
FunctionalRecord uncertainty_product(const SampledSignal& signal, const Spectrum& spectrum,
                                     const AngleParams& params);

/// lhs = csc^-lambda int |s|^-lambda |O f|^2, rhs = (C_lambda / 2) int |t|^lambda |f|^2,
/// margin = rhs - lhs. aux: M (= lhs - rhs), C_lambda, observed_constant
/// (= 2 lhs / int |t|^lambda |f|^2), norm_f_sq.
FunctionalRecord pitt_functional(const SampledSignal& signal, const AngleParams& params, double lambda,
                                 const FunctionalOptions& opts = {});
FunctionalRecord pitt_functional(const SampledSignal& signal, const Spectrum& spectrum,
                                 const AngleParams& params, double lambda);

/// lhs = (1/2) int ln|t| |f|^2 + int ln|s| |O f|^2, rhs = log_constant ||f||^2,
/// margin = lhs - rhs. aux: time_term, spectral_term, norm_f_sq, normalized
/// (= lhs / ||f||^2), sharp_constant.
FunctionalRecord log_uncertainty_gap(const SampledSignal& signal, const AngleParams& params,
                                     const FunctionalOptions& opts = {});
FunctionalRecord log_uncertainty_gap(const SampledSignal& signal, const Spectrum& spectrum,
                                     const AngleParams& params);

/// lhs = int |t|^(2 lambda) |f|^2, rhs = |E|^(-2 lambda) int_E |O f|^2 and
/// margin = ratio = lhs / rhs, the empirical constant (no reference constant
/// is assumed). aux: concentration, ratio, measure, norm_f_sq.
FunctionalRecord local_concentration(const SampledSignal& signal, const AngleParams& params,
                                     const IntervalSet& set, double lambda,
                                     const FunctionalOptions& opts = {});
FunctionalRecord local_concentration(const SampledSignal& signal, const Spectrum& spectrum,
                                     const IntervalSet& set, double lambda);

/// int_E |g|^2 with linear interpolation of |g|^2 across interval ends.
double concentration_on(const Spectrum& spectrum, const IntervalSet& set);

/// lhs = ||O f||_p1, rhs = (csc/(2 sqrt pi))^theta ||f||_p with theta = 2/p - 1,
/// margin = rhs - lhs. aux: observed_ratio, theta, p1, norm_f_p,
/// interpolated_bound (the bound interpolated from ||O f||_inf <= sqrt(csc/(2 pi)) ||f||_1
/// and the Parseval endpoint), property1_bound (p = 1 only).
FunctionalRecord hausdorff_young_ratio(const SampledSignal& signal, const AngleParams& params, double p,
                                       const FunctionalOptions& opts = {});
FunctionalRecord hausdorff_young_ratio(const SampledSignal& signal, const Spectrum& spectrum,
                                       const AngleParams& params, double p);

struct DecayFit {
  double rate = 0.0;
  double log_amplitude = 0.0;
  double residual = 0.0;
  std::size_t points = 0;
};

/// Least-squares fit ln|g(x)| ~ log_amplitude - rate x^2 over nodes with
/// window.first <= |x| <= window.second and 1e-11 < |g| / peak < 1e-2.
/// Throws WindowError with fewer than 8 usable nodes.
template <class Domain>
DecayFit hardy_decay_fit(const Sampled<Domain>& samples, std::pair<double, double> window);

/// int_{[-R,R]^2} |f(t)| |O f(s)| exp(|t s csc(alpha)|) dt ds, accumulated in
/// log space. Returns +inf once the value exceeds 1e300.
double beurling_truncated(const SampledSignal& signal, const AngleParams& params, double radius,
                          const FunctionalOptions& opts = {});
double beurling_truncated(const SampledSignal& signal, const Spectrum& spectrum,
                          const AngleParams& params, double radius);

}  // namespace oalpha
