#include "oalpha/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <random>
#include <thread>

#include <fmt/format.h>

#include "oalpha/error.hpp"
#include "oalpha/golden.hpp"
#include "oalpha/transform.hpp"

namespace oalpha {

namespace {

constexpr int kMaxHermite = 10;
constexpr std::size_t kModesPerSignal = 8;
constexpr double kHardyWindowMax = 1e9;
const std::vector<double> kBeurlingRadii = {1.0, 2.0, 3.0, 4.0, 5.0, 6.0};

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double relative_l2(std::span<const cplx> got, std::span<const cplx> want) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < got.size(); ++k) {
    num += std::norm(got[k] - want[k]);
    den += std::norm(want[k]);
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

double family_tolerance(const ToleranceTable& table, const std::string& check_id) {
  const std::string base = parse_check_id(check_id).first;
  const auto it = table.find(base);
  return it == table.end() ? 0.0 : it->second;
}

// Lazily computed transforms of one corpus member.
class MemberContext {
 public:
  MemberContext(const CorpusMember& member, const AngleParams& params, const FunctionalOptions& opts)
      : member_(member), params_(params), opts_(opts) {}

  const SampledSignal& signal() const { return member_.signal; }
  const CorpusMember& member() const { return member_; }

  const Spectrum& fast() {
    if (!fast_) fast_ = oalpha_fast(member_.signal, params_, opts_.transform);
    return *fast_;
  }
  const Spectrum& refined() {
    if (!refined_) refined_ = functional_spectrum(member_.signal, params_, opts_);
    return *refined_;
  }
  double norm_sq() {
    if (!norm_sq_) norm_sq_ = weighted_moment(member_.signal, WeightSpec::abs_power(0.0));
    return *norm_sq_;
  }

 private:
  const CorpusMember& member_;
  const AngleParams& params_;
  const FunctionalOptions& opts_;
  std::optional<Spectrum> fast_;
  std::optional<Spectrum> refined_;
  std::optional<double> norm_sq_;
};

bool applicable(const std::string& base, const CorpusMember& member) {
  if (base == "eigen") return member.family == FamilyKind::hermite;
  if (base == "hardy" || base == "beurling") return member.family == FamilyKind::chirped_gaussian;
  return true;
}

CheckResult evaluate_check(const std::string& check_id, MemberContext& ctx, const AngleParams& params,
                           double tol) {
  const auto [base, arg] = parse_check_id(check_id);
  CheckResult r;
  r.check_id = check_id;
  r.alpha = params.alpha();
  r.z = params.z_choice();
  r.signal = ctx.member().label;
  std::optional<double> fallback;

  if (base == "parseval") {
    const double nf2 = ctx.norm_sq();
    r.lhs = weighted_moment(ctx.fast(), WeightSpec::abs_power(0.0));
    r.rhs = 0.5 * nf2;
    r.margin = -std::fabs(r.lhs - r.rhs) / nf2;
    r.constant_paper = 0.5;
    r.constant_observed = r.lhs / nf2;
  } else if (base == "roundtrip") {
    const SampledSignal& f = ctx.signal();
    const SampledSignal back = f.grid.is_fft_symmetric() ? oalpha_inverse_fast(ctx.fast(), params)
                                                         : oalpha_inverse(ctx.fast(), params, f.grid);
    const double err = relative_l2(back.values, f.values);
    r.lhs = err;
    r.rhs = 0.0;
    r.margin = -err;
  } else if (base == "fast_direct") {
    const Spectrum& fast = ctx.fast();
    const Spectrum direct = oalpha_direct(ctx.signal(), params, fast.grid);
    double err = 0.0;
    for (std::size_t m = 0; m < fast.size(); ++m) err = std::max(err, std::abs(fast.values[m] - direct.values[m]));
    r.lhs = err;
    r.rhs = 0.0;
    r.margin = -err;
  } else if (base == "eigen") {
    const int order = static_cast<int>(ctx.member().parameters.at("n"));
    const Spectrum& fast = ctx.fast();
    const SampledSignal h = gen_hermite(order, fast.grid);
    const cplx sign = (order % 2 == 0) ? 1.0 : -1.0;
    const cplx eig = 0.5 * (1.0 + sign * params.z()) * std::polar(1.0, -order * params.alpha());
    std::vector<cplx> want(h.values.size());
    for (std::size_t m = 0; m < want.size(); ++m) want[m] = eig * h.values[m];
    const double err = relative_l2(fast.values, want);
    r.lhs = err;
    r.rhs = 0.0;
    r.margin = -err;
    r.constant_paper = std::abs(eig);
  } else if (base == "heisenberg") {
    const FunctionalRecord f = uncertainty_product(ctx.signal(), ctx.refined(), params);
    const double nf2 = f.aux.at("norm_f_sq");
    r.lhs = f.lhs;
    r.rhs = f.rhs;
    r.margin = f.margin / nf2;
    r.constant_paper = params.sin_a() / std::sqrt(2.0);
    r.constant_observed = f.aux.at("observed_ratio");
    fallback = f.aux.at("observed_ratio") - f.aux.at("sharp_constant");
  } else if (base == "pitt") {
    const double lambda = arg.value_or(0.5);
    const FunctionalRecord f = pitt_functional(ctx.signal(), ctx.refined(), params, lambda);
    r.lhs = f.lhs;
    r.rhs = f.rhs;
    r.margin = f.margin / f.aux.at("norm_f_sq");
    r.constant_paper = f.aux.at("C_lambda");
    r.constant_observed = f.aux.at("observed_constant");
  } else if (base == "log") {
    const FunctionalRecord f = log_uncertainty_gap(ctx.signal(), ctx.refined(), params);
    r.lhs = f.lhs;
    r.rhs = f.rhs;
    r.margin = f.margin / f.aux.at("norm_f_sq");
    r.constant_paper = log_constant(params);
    r.constant_observed = f.aux.at("normalized");
  } else if (base == "local") {
    const double lambda = arg.value_or(0.25);
    const FunctionalRecord f = local_concentration(ctx.signal(), ctx.refined(), IntervalSet{{{-1.0, 1.0}}}, lambda);
    r.lhs = f.lhs;
    r.rhs = f.rhs;
    r.margin = f.margin;
    r.constant_observed = f.aux.at("ratio");
  } else if (base == "hausdorff_young") {
    const double p = arg.value_or(1.0);
    const FunctionalRecord f = hausdorff_young_ratio(ctx.signal(), ctx.refined(), params, p);
    const double norm_f_p = f.aux.at("norm_f_p");
    r.lhs = f.lhs;
    r.rhs = f.rhs;
    r.margin = f.margin / norm_f_p;
    r.constant_paper = f.rhs / norm_f_p;
    r.constant_observed = f.aux.at("observed_ratio");
    fallback = (f.aux.at("interpolated_bound") - f.lhs) / norm_f_p;
  } else if (base == "hardy") {
    const double beta = ctx.member().parameters.at("beta");
    const DecayFit time_fit = hardy_decay_fit(ctx.signal(), {0.0, kHardyWindowMax});
    const DecayFit spec_fit = hardy_decay_fit(ctx.refined(), {0.0, kHardyWindowMax});
    const double time_err = std::fabs(time_fit.rate - beta) / beta;
    // Dual rate with the csc(alpha) coupling versus the sec(alpha) form.
    const double csc_rate = params.csc_a() * params.csc_a() / (4.0 * beta);
    const double sec_sq = 1.0 / (params.cos_a() * params.cos_a());
    const double sec_rate = sec_sq / (4.0 * beta);
    r.lhs = spec_fit.rate;
    r.rhs = sec_rate;
    r.margin = -std::max(time_err, std::fabs(spec_fit.rate - sec_rate) / sec_rate);
    r.constant_paper = sec_sq;
    r.constant_observed = 4.0 * beta * spec_fit.rate;
    fallback = -std::max(time_err, std::fabs(spec_fit.rate - csc_rate) / csc_rate);
  } else if (base == "beurling") {
    std::vector<double> values;
    for (double radius : kBeurlingRadii) values.push_back(beurling_truncated(ctx.signal(), ctx.refined(), params, radius));
    double min_step = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < values.size(); ++i) min_step = std::min(min_step, values[i] - values[i - 1]);
    r.lhs = values.back();
    r.rhs = values[3];
    r.margin = min_step;
    r.constant_observed = values[3] > 0.0 ? values.back() / values[3] : 0.0;
  } else {
    throw InputError(fmt::format("unknown check id '{}'", check_id));
  }

  if (!std::isfinite(r.margin)) {
    r.status = CheckStatus::error;
    r.note = "non-finite margin";
  } else {
    r.status = decide_status(r.margin, tol, fallback);
  }
  return r;
}

std::vector<CheckResult> evaluate_member(const CorpusMember& member, const AngleParams& params,
                                         const SuiteConfig& config) {
  MemberContext ctx(member, params, config.functional);
  std::vector<CheckResult> out;
  for (const std::string& id : config.checks) {
    const std::string base = parse_check_id(id).first;
    if (!applicable(base, member)) continue;
    try {
      out.push_back(evaluate_check(id, ctx, params, family_tolerance(config.tolerances, id)));
    } catch (const std::exception& e) {
      CheckResult r;
      r.check_id = id;
      r.alpha = params.alpha();
      r.z = params.z_choice();
      r.signal = member.label;
      r.status = CheckStatus::error;
      r.note = e.what();
      out.push_back(std::move(r));
    }
  }
  return out;
}

template <class Task>
void parallel_for(std::size_t count, unsigned threads, Task&& task) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) task(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

bool CheckResult::operator==(const CheckResult& o) const {
  return check_id == o.check_id && alpha == o.alpha && z == o.z && lhs == o.lhs && rhs == o.rhs &&
         margin == o.margin && constant_paper == o.constant_paper && constant_observed == o.constant_observed &&
         status == o.status && note == o.note;
}

FamilySpec FamilySpec::chirped_gaussian(double beta_min, double beta_max, GridSpec grid) {
  FamilySpec f;
  f.kind = FamilyKind::chirped_gaussian;
  f.beta_min = beta_min;
  f.beta_max = beta_max;
  f.grid = grid;
  return f;
}

FamilySpec FamilySpec::hermite(int n_max, GridSpec grid) {
  FamilySpec f;
  f.kind = FamilyKind::hermite;
  f.n_max = n_max;
  f.grid = grid;
  return f;
}

FamilySpec FamilySpec::random_smooth(std::size_t count, double bandwidth, std::uint64_t seed, GridSpec grid) {
  FamilySpec f;
  f.kind = FamilyKind::random_smooth;
  f.count = count;
  f.bandwidth = bandwidth;
  f.seed = seed;
  f.grid = grid;
  return f;
}

void FamilySpec::validate() const {
  grid.validate();
  switch (kind) {
    case FamilyKind::chirped_gaussian:
      if (!(beta_min > 0.0 && beta_max >= beta_min)) {
        throw DomainError(fmt::format("beta range [{}, {}] must be positive and ordered", beta_min, beta_max));
      }
      break;
    case FamilyKind::hermite:
      if (n_max < 0 || n_max > kMaxHermite) throw DomainError(fmt::format("n_max {} outside [0, 10]", n_max));
      break;
    case FamilyKind::random_smooth:
      if (count < 1) throw InputError("random corpus needs count >= 1");
      break;
  }
}

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::chirped_gaussian:
      return "chirped_gaussian";
    case FamilyKind::hermite:
      return "hermite";
    case FamilyKind::random_smooth:
      return "random_smooth";
  }
  return "?";
}

SampledSignal gen_chirped_gaussian(cplx amplitude, double beta, double chirp, const GridSpec& grid) {
  if (!(beta > 0.0)) throw DomainError(fmt::format("Gaussian width parameter must be positive, got {}", beta));
  grid.validate();
  return sample(grid, [&](double t) { return amplitude * std::exp(-beta * t * t) * std::polar(1.0, chirp * t * t); });
}

SampledSignal gen_hermite(int n, const GridSpec& grid) {
  if (n < 0 || n > kMaxHermite) throw DomainError(fmt::format("Hermite order {} outside [0, 10]", n));
  grid.validate();
  const double h0_scale = std::pow(kPi, -0.25);
  return sample(grid, [&](double t) {
    double prev = 0.0;
    double cur = h0_scale * std::exp(-0.5 * t * t);
    for (int k = 0; k < n; ++k) {
      const double kd = static_cast<double>(k);
      const double next = std::sqrt(2.0 / (kd + 1.0)) * t * cur - std::sqrt(kd / (kd + 1.0)) * prev;
      prev = cur;
      cur = next;
    }
    return cur;
  });
}

std::vector<SampledSignal> gen_random_smooth(std::uint64_t seed, std::size_t count, double bandwidth,
                                             const GridSpec& grid) {
  grid.validate();
  const double nyquist = kPi / grid.dx;
  if (!(bandwidth >= 0.0 && bandwidth < nyquist)) {
    throw BandwidthError(fmt::format("bandwidth {} must lie in [0, {}) for this grid", bandwidth, nyquist));
  }
  const double half_width = 0.5 * (grid.last() - grid.x_min);
  const double center = 0.5 * (grid.last() + grid.x_min);
  const double sigma = half_width / 8.0;

  std::mt19937_64 rng(seed);
  std::vector<SampledSignal> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<double> freq(kModesPerSignal);
    std::vector<cplx> amp(kModesPerSignal);
    for (std::size_t m = 0; m < kModesPerSignal; ++m) {
      freq[m] = bandwidth * (2.0 * uniform01(rng) - 1.0);
      const double re = 2.0 * uniform01(rng) - 1.0;
      const double im = 2.0 * uniform01(rng) - 1.0;
      amp[m] = {re, im};
    }
    out.push_back(sample(grid, [&](double t) {
      cplx sum{};
      for (std::size_t m = 0; m < kModesPerSignal; ++m) sum += amp[m] * std::polar(1.0, freq[m] * t);
      const double u = (t - center) / sigma;
      return sum * std::exp(-0.5 * u * u);
    }));
  }
  return out;
}

std::vector<CorpusMember> build_corpus(const FamilySpec& family, const AngleParams& params) {
  family.validate();
  std::vector<CorpusMember> out;
  switch (family.kind) {
    case FamilyKind::chirped_gaussian: {
      std::vector<double> betas = {family.beta_min};
      if (family.beta_max > family.beta_min) {
        betas.push_back(std::sqrt(family.beta_min * family.beta_max));
        betas.push_back(family.beta_max);
      }
      const double chirp = -params.a();
      for (double beta : betas) {
        out.push_back({fmt::format("chirped_gaussian(beta={},chirp={:.6g})", beta, chirp),
                       gen_chirped_gaussian(1.0, beta, chirp, family.grid),
                       {{"beta", beta}, {"chirp", chirp}},
                       FamilyKind::chirped_gaussian});
      }
      break;
    }
    case FamilyKind::hermite:
      for (int n = 0; n <= family.n_max; ++n) {
        out.push_back({fmt::format("hermite({})", n), gen_hermite(n, family.grid), {{"n", n}}, FamilyKind::hermite});
      }
      break;
    case FamilyKind::random_smooth: {
      std::vector<SampledSignal> signals = gen_random_smooth(family.seed, family.count, family.bandwidth, family.grid);
      for (std::size_t i = 0; i < signals.size(); ++i) {
        out.push_back({fmt::format("random_smooth(seed={},index={})", family.seed, i), std::move(signals[i]),
                       {{"index", static_cast<double>(i)}},
                       FamilyKind::random_smooth});
      }
      break;
    }
  }
  return out;
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::constant_discrepancy:
      return "constant_discrepancy";
    case CheckStatus::error:
      return "error";
  }
  return "error";
}

CheckStatus status_from_string(const std::string& s) {
  if (s == "pass") return CheckStatus::pass;
  if (s == "fail") return CheckStatus::fail;
  if (s == "constant_discrepancy") return CheckStatus::constant_discrepancy;
  if (s == "error") return CheckStatus::error;
  throw ParseError(fmt::format("unknown status '{}'", s));
}

ToleranceTable default_tolerances() {
  return {
      {"beurling", 0.0},  {"eigen", 1e-6},  {"fast_direct", 1e-8}, {"hardy", 1e-2},
      {"hausdorff_young", 1e-6},            {"heisenberg", 1e-4},  {"local", 0.0},
      {"log", 1e-4},      {"parseval", 1e-6}, {"pitt", 1e-4},       {"roundtrip", 1e-6},
  };
}

bool VerificationReport::all_passed() const {
  return std::none_of(results.begin(), results.end(), [](const CheckResult& r) {
    return r.status == CheckStatus::fail || r.status == CheckStatus::error;
  });
}

std::vector<std::string> all_checks() {
  return {"parseval",        "roundtrip", "fast_direct",           "eigen",        "heisenberg",
          "pitt(0)",         "pitt(0.1)", "pitt(0.25)",            "pitt(0.5)",    "pitt(0.75)",
          "log",             "local(0.25)", "hausdorff_young(1)",  "hausdorff_young(1.5)",
          "hausdorff_young(2)", "hardy",  "beurling"};
}

std::vector<std::string> expand_suite(const std::string& suite) {
  if (suite == "all") return all_checks();
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= suite.size()) {
    const std::size_t comma = suite.find(',', start);
    const std::string item = suite.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!item.empty()) {
      parse_check_id(item);
      out.push_back(item);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw InputError(fmt::format("suite '{}' names no checks", suite));
  return out;
}

std::pair<std::string, std::optional<double>> parse_check_id(const std::string& id) {
  static const std::vector<std::string> known = {"parseval", "roundtrip", "fast_direct",      "eigen",
                                                 "heisenberg", "pitt",    "log",              "local",
                                                 "hausdorff_young", "hardy", "beurling"};
  const std::size_t open = id.find('(');
  std::string base = id.substr(0, open);
  std::optional<double> arg;
  if (open != std::string::npos) {
    if (id.back() != ')') throw InputError(fmt::format("malformed check id '{}'", id));
    const std::string inner = id.substr(open + 1, id.size() - open - 2);
    char* end = nullptr;
    const double v = std::strtod(inner.c_str(), &end);
    if (inner.empty() || end != inner.c_str() + inner.size()) {
      throw InputError(fmt::format("malformed parameter in check id '{}'", id));
    }
    arg = v;
  }
  if (std::find(known.begin(), known.end(), base) == known.end()) {
    throw InputError(fmt::format("unknown check id '{}'", id));
  }
  return {base, arg};
}

CheckStatus decide_status(double margin, double tol, std::optional<double> fallback_margin) {
  if (margin >= -tol) return CheckStatus::pass;
  if (fallback_margin && *fallback_margin >= -tol) return CheckStatus::constant_discrepancy;
  return CheckStatus::fail;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("OALPHA_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

VerificationReport run_suite(const SuiteConfig& config) {
  if (config.alphas.empty()) throw InputError("suite needs at least one angle");
  if (config.families.empty()) throw InputError("suite needs at least one signal family");
  if (config.checks.empty()) throw InputError("suite needs at least one check");
  for (const std::string& id : config.checks) parse_check_id(id);

  std::vector<AngleParams> params;
  for (double alpha : config.alphas) params.push_back(make_params(alpha, config.z));

  struct Task {
    std::size_t angle;
    CorpusMember member;
  };
  std::vector<Task> tasks;
  for (std::size_t ai = 0; ai < params.size(); ++ai) {
    for (const FamilySpec& family : config.families) {
      for (CorpusMember& m : build_corpus(family, params[ai])) tasks.push_back({ai, std::move(m)});
    }
  }
  if (tasks.empty()) throw InputError("signal corpus is empty");

  std::vector<std::vector<CheckResult>> per_task(tasks.size());
  const unsigned threads = config.threads > 0 ? config.threads : default_thread_count();
  parallel_for(tasks.size(), threads, [&](std::size_t i) {
    per_task[i] = evaluate_member(tasks[i].member, params[tasks[i].angle], config);
  });

  VerificationReport report;
  report.suite_name = config.suite_name;
  report.alphas = config.alphas;
  report.z = config.z;
  report.grid = config.families.front().grid;
  for (const FamilySpec& f : config.families) {
    if (f.kind == FamilyKind::random_smooth) {
      report.seed = f.seed;
      break;
    }
  }
  report.tolerances = config.tolerances;
  for (auto& chunk : per_task) {
    for (CheckResult& r : chunk) report.results.push_back(std::move(r));
  }
  std::stable_sort(report.results.begin(), report.results.end(), [](const CheckResult& a, const CheckResult& b) {
    if (a.check_id != b.check_id) return a.check_id < b.check_id;
    return a.alpha < b.alpha;
  });
  return report;
}

AuditResult audit_constant(const std::string& check_id, const FamilySpec& family, const AngleParams& params,
                           const FunctionalOptions& opts) {
  family.validate();
  const auto [base, arg] = parse_check_id(check_id);

  AuditResult out;
  out.check_id = check_id;
  out.alpha = params.alpha();
  bool maximize = false;
  std::function<double(const SampledSignal&)> ratio;
  double max_abs_m = 0.0;

  if (base == "heisenberg") {
    out.constant_paper = params.sin_a() / std::sqrt(2.0);
    out.aux["sharp_constant"] = params.sin_a() / (2.0 * std::sqrt(2.0));
    ratio = [&](const SampledSignal& f) { return uncertainty_product(f, params, opts).aux.at("observed_ratio"); };
  } else if (base == "log") {
    out.constant_paper = log_constant(params);
    out.aux["sharp_constant"] = 0.5 * (digamma_fn(0.25) + std::log(2.0 * params.sin_a()));
    ratio = [&](const SampledSignal& f) { return log_uncertainty_gap(f, params, opts).aux.at("normalized"); };
  } else if (base == "pitt") {
    const double lambda = arg.value_or(0.5);
    out.constant_paper = pitt_constant(lambda);
    maximize = true;
    ratio = [&, lambda](const SampledSignal& f) {
      const FunctionalRecord r = pitt_functional(f, params, lambda, opts);
      max_abs_m = std::max(max_abs_m, std::fabs(r.aux.at("M")) / r.aux.at("norm_f_sq"));
      return r.aux.at("observed_constant");
    };
  } else if (base == "hausdorff_young") {
    const double p = arg.value_or(1.0);
    out.constant_paper = std::pow(params.csc_a() / (2.0 * std::sqrt(kPi)), 2.0 / p - 1.0);
    maximize = true;
    ratio = [&, p](const SampledSignal& f) { return hausdorff_young_ratio(f, params, p, opts).aux.at("observed_ratio"); };
  } else if (base == "local") {
    const double lambda = arg.value_or(0.25);
    ratio = [&, lambda](const SampledSignal& f) {
      return local_concentration(f, params, IntervalSet{{{-1.0, 1.0}}}, lambda, opts).aux.at("ratio");
    };
  } else {
    throw InputError(fmt::format("check '{}' cannot be audited", check_id));
  }
  out.direction = maximize ? "maximize" : "minimize";
  const double sign = maximize ? -1.0 : 1.0;
  std::size_t evaluations = 0;
  auto objective = [&](const SampledSignal& f) {
    ++evaluations;
    return sign * ratio(f);
  };

  switch (family.kind) {
    case FamilyKind::chirped_gaussian: {
      const double centre = -params.a();
      const double reach = 2.0;
      bool converged = true;
      double best_chirp = centre;
      auto inner = [&](double beta) {
        const GoldenResult g = golden_section_minimize(
            [&](double chirp) { return objective(gen_chirped_gaussian(1.0, beta, chirp, family.grid)); },
            centre - reach, centre + reach, 1e-7, 100);
        converged = converged && g.converged;
        return g;
      };
      double best_beta = family.beta_min;
      double best_value = std::numeric_limits<double>::infinity();
      auto outer_eval = [&](double log_beta) {
        const double beta = std::exp(log_beta);
        const GoldenResult g = inner(beta);
        if (g.fx < best_value) {
          best_value = g.fx;
          best_beta = beta;
          best_chirp = g.x;
        }
        return g.fx;
      };
      if (family.beta_max > family.beta_min) {
        const GoldenResult outer =
            golden_section_minimize(outer_eval, std::log(family.beta_min), std::log(family.beta_max), 1e-4, 60);
        converged = converged && outer.converged;
      } else {
        outer_eval(std::log(family.beta_min));
      }
      out.observed_sharp_constant = sign * best_value;
      out.argmin_parameters = {{"beta", best_beta}, {"chirp", best_chirp}};
      out.converged = converged;
      break;
    }
    case FamilyKind::hermite:
    case FamilyKind::random_smooth: {
      const std::vector<CorpusMember> corpus = build_corpus(family, params);
      double best = std::numeric_limits<double>::infinity();
      for (const CorpusMember& m : corpus) {
        const double v = objective(m.signal);
        if (v < best) {
          best = v;
          out.argmin_parameters = m.parameters;
        }
      }
      out.observed_sharp_constant = sign * best;
      break;
    }
  }
  out.evaluations = evaluations;
  if (base == "pitt") out.aux["max_abs_M_over_norm"] = max_abs_m;
  return out;
}

}  // namespace oalpha
