#include "oalpha/functionals.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "oalpha/error.hpp"

namespace oalpha {

namespace {

constexpr double kFitFloor = 1e-11;
constexpr double kFitCeiling = 1e-2;
constexpr std::size_t kMinFitPoints = 8;
constexpr std::size_t kMaxPaddedSize = std::size_t{1} << 22;
constexpr double kOverflowGuard = 1e300;

// zeta'(x) from a fourth-order difference of the regular part zeta(x) - 1/(x - 1).
double zeta_derivative(double x) {
  if (x == 0.0) return -0.5 * std::log(2.0 * kPi);
  auto regular = [](double u) { return std::riemann_zeta(u) - 1.0 / (u - 1.0); };
  const double h = 1e-3;
  const double d = (regular(x - 2 * h) - 8.0 * regular(x - h) + 8.0 * regular(x + h) - regular(x + 2 * h)) / (12.0 * h);
  return d - 1.0 / ((x - 1.0) * (x - 1.0));
}

double norm_sq(const SampledSignal& signal) { return weighted_moment(signal, WeightSpec::abs_power(0.0)); }

}  // namespace

void IntervalSet::validate() const {
  if (intervals.empty()) throw EmptySetError("interval set is empty");
  std::vector<std::pair<double, double>> sorted = intervals;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto [lo, hi] = sorted[i];
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
      throw DomainError(fmt::format("interval [{}, {}] must satisfy lo < hi", lo, hi));
    }
    if (i > 0 && lo < sorted[i - 1].second) {
      throw DomainError(fmt::format("intervals [{}, {}] and [{}, {}] overlap", sorted[i - 1].first,
                                    sorted[i - 1].second, lo, hi));
    }
  }
}

double IntervalSet::measure() const {
  double m = 0.0;
  for (const auto& [lo, hi] : intervals) m += hi - lo;
  return m;
}

template <class Domain>
double lp_norm(const Sampled<Domain>& samples, double p) {
  if (!(p >= 1.0)) throw DomainError(fmt::format("lp_norm requires p >= 1, got {}", p));
  validate_samples(samples);
  const std::size_t n = samples.size();
  if (std::isinf(p)) {
    double peak = 0.0;
    for (const cplx& v : samples.values) peak = std::max(peak, std::abs(v));
    return peak;
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sum += trapezoid_weight(k, n) * std::pow(std::abs(samples.values[k]), p);
  }
  return std::pow(sum * samples.grid.dx, 1.0 / p);
}

double singular_node_weight(const WeightSpec& w, double h) {
  const double p = w.exponent();
  switch (w.kind) {
    case WeightKind::abs_power:
      // Navot's correction: sum_{k != 0} h |kh|^p g(kh) overshoots by 2 zeta(-p) h^(1+p) g(0).
      return -2.0 * std::riemann_zeta(-p) * std::pow(h, p);
    case WeightKind::abs_power_log:
      // d/dp of the abs_power weight.
      return std::pow(h, p) * (2.0 * zeta_derivative(-p) - 2.0 * std::riemann_zeta(-p) * std::log(h));
    case WeightKind::log_abs:
      return std::log(h / (2.0 * kPi));
  }
  return 0.0;
}

namespace {

// Coefficient of h g^(2j)(0) / (2j)! in (corrected trapezoid sum - integral).
double navot_coefficient(const WeightSpec& w, double h, int j) {
  const double x = -w.exponent() - 2.0 * j;
  const double hp = std::pow(h, w.exponent() + 2.0 * j);
  if (w.kind == WeightKind::abs_power) return 2.0 * std::riemann_zeta(x) * hp;
  return hp * (2.0 * std::riemann_zeta(x) * std::log(h) - 2.0 * zeta_derivative(x));
}

}  // namespace

template <class Domain>
double weighted_moment(const Sampled<Domain>& samples, const WeightSpec& w) {
  validate_samples(samples);
  const GridSpec& g = samples.grid;
  const std::size_t n = g.n;
  const bool origin_inside = g.x_min <= 0.0 && g.last() >= 0.0;
  if (origin_inside && w.exponent() <= -1.0) {
    throw SingularWeightError(
        fmt::format("weight exponent {} is not integrable at the origin inside the grid", w.exponent()));
  }
  const std::size_t zero = g.zero_index();
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double mod_sq = std::norm(samples.values[k]);
    if (mod_sq == 0.0) continue;
    const double weight = k == zero ? singular_node_weight(w, g.dx) : w(g.at(k));
    sum += trapezoid_weight(k, n) * weight * mod_sq;
  }
  if (zero != GridSpec::npos && zero >= 2 && zero + 2 < n) {
    const double h = g.dx;
    auto at = [&](int offset) { return std::norm(samples.values[zero + offset]); };
    const double d2 = (-at(2) + 16.0 * at(1) - 30.0 * at(0) + 16.0 * at(-1) - at(-2)) / (12.0 * h * h);
    const double d4 = (at(2) - 4.0 * at(1) + 6.0 * at(0) - 4.0 * at(-1) + at(-2)) / (h * h * h * h);
    sum -= navot_coefficient(w, h, 1) * d2 / 2.0 + navot_coefficient(w, h, 2) * d4 / 24.0;
  }
  return sum * g.dx;
}

template double lp_norm(const Sampled<TimeDomain>&, double);
template double lp_norm(const Sampled<SpectralDomain>&, double);
template double weighted_moment(const Sampled<TimeDomain>&, const WeightSpec&);
template double weighted_moment(const Sampled<SpectralDomain>&, const WeightSpec&);

Spectrum functional_spectrum(const SampledSignal& signal, const AngleParams& params,
                             const FunctionalOptions& opts) {
  validate_samples(signal);
  const GridSpec& g = signal.grid;
  if (is_power_of_two(g.n) && g.is_fft_symmetric()) {
    std::size_t size = g.n;
    double ds = fast_spectral_grid(g, params).dx;
    while (ds > opts.max_ds && size < kMaxPaddedSize) {
      size *= 2;
      ds *= 0.5;
    }
    return oalpha_fast(signal, params, size, opts.transform);
  }
  if (is_power_of_two(g.n) && g.is_symmetric()) return oalpha_fast(signal, params, opts.transform);

  // Direct quadrature on an FFT-symmetric s-grid with the same reach as the fast path.
  const double reach = kPi * params.sin_a() / g.dx;
  std::size_t size = 2;
  while (2.0 * reach / static_cast<double>(size) > opts.max_ds && size < (std::size_t{1} << 16)) size *= 2;
  return oalpha_direct(signal, params, GridSpec::centered(size, reach), opts.transform);
}

FunctionalRecord uncertainty_product(const SampledSignal& signal, const AngleParams& params,
                                     const FunctionalOptions& opts) {
  return uncertainty_product(signal, functional_spectrum(signal, params, opts), params);
}

FunctionalRecord uncertainty_product(const SampledSignal& signal, const Spectrum& spectrum,
                                     const AngleParams& params) {
  const double norm_tf = std::sqrt(weighted_moment(signal, WeightSpec::abs_power(2.0)));
  const double norm_sOf = std::sqrt(weighted_moment(spectrum, WeightSpec::abs_power(2.0)));
  const double nf2 = norm_sq(signal);
  FunctionalRecord r;
  r.lhs = norm_tf * norm_sOf;
  r.rhs = params.sin_a() / std::sqrt(2.0) * nf2;
  r.margin = r.lhs - r.rhs;
  r.aux["norm_tf"] = norm_tf;
  r.aux["norm_sOf"] = norm_sOf;
  r.aux["norm_f_sq"] = nf2;
  r.aux["observed_ratio"] = nf2 > 0.0 ? r.lhs / nf2 : 0.0;
  r.aux["sharp_constant"] = params.sin_a() / (2.0 * std::sqrt(2.0));
  return r;
}

FunctionalRecord pitt_functional(const SampledSignal& signal, const AngleParams& params, double lambda,
                                 const FunctionalOptions& opts) {
  if (!(lambda >= 0.0 && lambda < 1.0)) {
    throw DomainError(fmt::format("Pitt weight exponent must lie in [0, 1), got {}", lambda));
  }
  return pitt_functional(signal, functional_spectrum(signal, params, opts), params, lambda);
}

FunctionalRecord pitt_functional(const SampledSignal& signal, const Spectrum& spectrum,
                                 const AngleParams& params, double lambda) {
  const double c_lambda = pitt_constant(lambda);
  const double spectral = weighted_moment(spectrum, WeightSpec::abs_power(-lambda));
  const double temporal = weighted_moment(signal, WeightSpec::abs_power(lambda));
  FunctionalRecord r;
  r.lhs = std::pow(params.csc_a(), -lambda) * spectral;
  r.rhs = 0.5 * c_lambda * temporal;
  r.margin = r.rhs - r.lhs;
  r.aux["M"] = r.lhs - r.rhs;
  r.aux["C_lambda"] = c_lambda;
  r.aux["observed_constant"] = temporal > 0.0 ? 2.0 * r.lhs / temporal : 0.0;
  r.aux["norm_f_sq"] = norm_sq(signal);
  return r;
}

FunctionalRecord log_uncertainty_gap(const SampledSignal& signal, const AngleParams& params,
                                     const FunctionalOptions& opts) {
  return log_uncertainty_gap(signal, functional_spectrum(signal, params, opts), params);
}

FunctionalRecord log_uncertainty_gap(const SampledSignal& signal, const Spectrum& spectrum,
                                     const AngleParams& params) {
  const double time_term = weighted_moment(signal, WeightSpec::log_abs());
  const double spectral_term = weighted_moment(spectrum, WeightSpec::log_abs());
  const double nf2 = norm_sq(signal);
  FunctionalRecord r;
  r.lhs = 0.5 * time_term + spectral_term;
  r.rhs = log_constant(params) * nf2;
  r.margin = r.lhs - r.rhs;
  r.aux["time_term"] = time_term;
  r.aux["spectral_term"] = spectral_term;
  r.aux["norm_f_sq"] = nf2;
  r.aux["normalized"] = nf2 > 0.0 ? r.lhs / nf2 : 0.0;
  r.aux["sharp_constant"] = 0.5 * (digamma_fn(0.25) + std::log(2.0 * params.sin_a()));
  return r;
}

double concentration_on(const Spectrum& spectrum, const IntervalSet& set) {
  const GridSpec& g = spectrum.grid;
  auto value = [&](std::size_t k) { return std::norm(spectrum.values[k]); };
  double total = 0.0;
  for (const auto& [lo, hi] : set.intervals) {
    for (std::size_t k = 0; k + 1 < g.n; ++k) {
      const double x0 = g.at(k);
      const double x1 = g.at(k + 1);
      const double u = std::max(lo, x0);
      const double v = std::min(hi, x1);
      if (!(v > u)) continue;
      const double y0 = value(k);
      const double y1 = value(k + 1);
      const double yu = y0 + (y1 - y0) * (u - x0) / g.dx;
      const double yv = y0 + (y1 - y0) * (v - x0) / g.dx;
      total += 0.5 * (yu + yv) * (v - u);
    }
  }
  return total;
}

FunctionalRecord local_concentration(const SampledSignal& signal, const AngleParams& params,
                                     const IntervalSet& set, double lambda, const FunctionalOptions& opts) {
  if (!(lambda > 0.0 && lambda < 0.5)) {
    throw DomainError(fmt::format("local uncertainty exponent must lie in (0, 1/2), got {}", lambda));
  }
  set.validate();
  return local_concentration(signal, functional_spectrum(signal, params, opts), set, lambda);
}

FunctionalRecord local_concentration(const SampledSignal& signal, const Spectrum& spectrum,
                                     const IntervalSet& set, double lambda) {
  if (!(lambda > 0.0 && lambda < 0.5)) {
    throw DomainError(fmt::format("local uncertainty exponent must lie in (0, 1/2), got {}", lambda));
  }
  set.validate();
  const double measure = set.measure();
  const double concentration = concentration_on(spectrum, set);
  FunctionalRecord r;
  r.lhs = weighted_moment(signal, WeightSpec::abs_power(2.0 * lambda));
  r.rhs = concentration * std::pow(measure, -2.0 * lambda);
  const double ratio = r.rhs > 0.0 ? r.lhs / r.rhs : std::numeric_limits<double>::infinity();
  r.margin = ratio;
  r.aux["concentration"] = concentration;
  r.aux["ratio"] = ratio;
  r.aux["measure"] = measure;
  r.aux["norm_f_sq"] = norm_sq(signal);
  return r;
}

FunctionalRecord hausdorff_young_ratio(const SampledSignal& signal, const AngleParams& params, double p,
                                       const FunctionalOptions& opts) {
  if (!(p >= 1.0 && p <= 2.0)) throw DomainError(fmt::format("Hausdorff-Young needs 1 <= p <= 2, got {}", p));
  return hausdorff_young_ratio(signal, functional_spectrum(signal, params, opts), params, p);
}

FunctionalRecord hausdorff_young_ratio(const SampledSignal& signal, const Spectrum& spectrum,
                                       const AngleParams& params, double p) {
  if (!(p >= 1.0 && p <= 2.0)) throw DomainError(fmt::format("Hausdorff-Young needs 1 <= p <= 2, got {}", p));
  const double theta = 2.0 / p - 1.0;
  const double p1 = p == 1.0 ? kInfNorm : p / (p - 1.0);
  const double norm_f_p = lp_norm(signal, p);
  FunctionalRecord r;
  r.lhs = lp_norm(spectrum, p1);
  r.rhs = std::pow(params.csc_a() / (2.0 * std::sqrt(kPi)), theta) * norm_f_p;
  r.margin = r.rhs - r.lhs;
  r.aux["observed_ratio"] = norm_f_p > 0.0 ? r.lhs / norm_f_p : 0.0;
  r.aux["theta"] = theta;
  r.aux["p1"] = p1;
  r.aux["norm_f_p"] = norm_f_p;
  r.aux["interpolated_bound"] =
      std::pow(params.csc_a() / (2.0 * kPi), 0.5 * theta) * std::pow(0.5, 0.5 * (1.0 - theta)) * norm_f_p;
  if (p == 1.0) r.aux["property1_bound"] = params.csc_a() / std::sqrt(2.0 * kPi) * norm_f_p;
  return r;
}

template <class Domain>
DecayFit hardy_decay_fit(const Sampled<Domain>& samples, std::pair<double, double> window) {
  validate_samples(samples);
  double peak = 0.0;
  for (const cplx& v : samples.values) peak = std::max(peak, std::abs(v));

  // Linear regression of y = ln|g| on u = x^2.
  std::vector<std::pair<double, double>> pts;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const double x = std::fabs(samples.grid.at(k));
    if (x < window.first || x > window.second) continue;
    const double rel = std::abs(samples.values[k]) / peak;
    if (!(rel > kFitFloor && rel < kFitCeiling)) continue;
    pts.emplace_back(x * x, std::log(std::abs(samples.values[k])));
  }
  if (pts.size() < kMinFitPoints) {
    throw WindowError(fmt::format("only {} usable points in window [{}, {}]; need {}", pts.size(), window.first,
                                  window.second, kMinFitPoints));
  }
  const double m = static_cast<double>(pts.size());
  double su = 0.0, sy = 0.0;
  for (const auto& [u, y] : pts) {
    su += u;
    sy += y;
  }
  const double mu = su / m;
  const double my = sy / m;
  double suu = 0.0, suy = 0.0;
  for (const auto& [u, y] : pts) {
    suu += (u - mu) * (u - mu);
    suy += (u - mu) * (y - my);
  }
  if (!(suu > 0.0)) throw WindowError("fit window has no spread in x^2");
  const double slope = suy / suu;

  DecayFit fit;
  fit.rate = -slope;
  fit.log_amplitude = my - slope * mu;
  double sse = 0.0;
  for (const auto& [u, y] : pts) {
    const double e = y - (fit.log_amplitude + slope * u);
    sse += e * e;
  }
  fit.residual = std::sqrt(sse / m);
  fit.points = pts.size();
  return fit;
}

template DecayFit hardy_decay_fit(const Sampled<TimeDomain>&, std::pair<double, double>);
template DecayFit hardy_decay_fit(const Sampled<SpectralDomain>&, std::pair<double, double>);

double beurling_truncated(const SampledSignal& signal, const AngleParams& params, double radius,
                          const FunctionalOptions& opts) {
  if (!(radius > 0.0)) throw DomainError(fmt::format("truncation radius must be positive, got {}", radius));
  return beurling_truncated(signal, functional_spectrum(signal, params, opts), params, radius);
}

double beurling_truncated(const SampledSignal& signal, const Spectrum& spectrum, const AngleParams& params,
                          double radius) {
  if (!(radius > 0.0)) throw DomainError(fmt::format("truncation radius must be positive, got {}", radius));
  const GridSpec& tg = signal.grid;
  const GridSpec& sg = spectrum.grid;
  if (tg.x_min > -radius + tg.dx || tg.last() < radius - tg.dx || sg.x_min > -radius + sg.dx ||
      sg.last() < radius - sg.dx) {
    throw GridError(fmt::format("grids do not cover [-{0}, {0}]^2", radius));
  }

  struct Node {
    double x;
    double log_mass;  // ln(|g(x)| dx)
  };
  auto collect = [radius](const auto& samples) {
    std::vector<Node> nodes;
    for (std::size_t k = 0; k < samples.size(); ++k) {
      const double x = samples.grid.at(k);
      const double mod = std::abs(samples.values[k]);
      if (std::fabs(x) > radius || mod == 0.0) continue;
      nodes.push_back({x, std::log(mod * samples.grid.dx)});
    }
    return nodes;
  };
  const std::vector<Node> tn = collect(signal);
  const std::vector<Node> sn = collect(spectrum);
  if (tn.empty() || sn.empty()) return 0.0;

  const double csc = params.csc_a();
  double max_exp = -std::numeric_limits<double>::infinity();
  for (const Node& t : tn) {
    for (const Node& s : sn) max_exp = std::max(max_exp, t.log_mass + s.log_mass + std::fabs(t.x * s.x) * csc);
  }
  double scaled = 0.0;
  for (const Node& t : tn) {
    for (const Node& s : sn) scaled += std::exp(t.log_mass + s.log_mass + std::fabs(t.x * s.x) * csc - max_exp);
  }
  const double log_value = max_exp + std::log(scaled);
  if (log_value > std::log(kOverflowGuard)) return std::numeric_limits<double>::infinity();
  return std::exp(log_value);
}

}  // namespace oalpha
