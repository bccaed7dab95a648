#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oalpha/core_params.hpp"
#include "oalpha/functionals.hpp"
#include "oalpha/grid.hpp"

namespace oalpha {

inline constexpr const char* kEngineVersion = "1.0.0";

enum class FamilyKind { chirped_gaussian, hermite, random_smooth };

/// A parameterized corpus of test signals on one grid.
struct FamilySpec {
  FamilyKind kind = FamilyKind::chirped_gaussian;
  GridSpec grid = GridSpec::centered(4096, 16.0);
  double beta_min = 0.5;
  double beta_max = 2.0;
  int n_max = 6;
  std::size_t count = 1;
  double bandwidth = 1.0;
  std::uint64_t seed = 0;

  static FamilySpec chirped_gaussian(double beta_min, double beta_max, GridSpec grid);
  static FamilySpec hermite(int n_max, GridSpec grid);
  static FamilySpec random_smooth(std::size_t count, double bandwidth, std::uint64_t seed, GridSpec grid);

  void validate() const;
};

std::string to_string(FamilyKind kind);

/// A*exp(-beta t^2)*exp(i chirp t^2). DomainError unless beta > 0.
SampledSignal gen_chirped_gaussian(cplx amplitude, double beta, double chirp, const GridSpec& grid);

/// L2-normalized Hermite-Gauss function h_n, 0 <= n <= 10.
SampledSignal gen_hermite(int n, const GridSpec& grid);

/// Deterministic band-limited complex signals (random sums of modes with
/// |frequency| <= bandwidth) under a Gaussian envelope of width half_width/8.
/// BandwidthError unless 0 <= bandwidth < pi/dt.
std::vector<SampledSignal> gen_random_smooth(std::uint64_t seed, std::size_t count, double bandwidth,
                                             const GridSpec& grid);

struct CorpusMember {
  std::string label;
  SampledSignal signal;
  std::map<std::string, double> parameters;
  FamilyKind family = FamilyKind::chirped_gaussian;
};

/// Chirped Gaussians use the Heisenberg-extremal chirp -cot(alpha)/2 and
/// beta in {beta_min, sqrt(beta_min beta_max), beta_max}.
std::vector<CorpusMember> build_corpus(const FamilySpec& family, const AngleParams& params);

enum class CheckStatus { pass, fail, constant_discrepancy, error };
std::string to_string(CheckStatus status);
CheckStatus status_from_string(const std::string& s);

struct CheckResult {
  std::string check_id;
  double alpha = 0.0;
  ZChoice z = ZChoice::plus_i;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  std::optional<double> constant_paper;
  std::optional<double> constant_observed;
  CheckStatus status = CheckStatus::pass;
  std::string signal;
  std::string note;

  bool pass() const noexcept { return status == CheckStatus::pass; }
  /// Compares the serialized fields (the signal label is in-memory only).
  bool operator==(const CheckResult& o) const;
};

/// Allowed negative margin per check family (the part of the id before '(').
using ToleranceTable = std::map<std::string, double>;
ToleranceTable default_tolerances();

struct VerificationReport {
  std::string suite_name;
  std::string engine_version = kEngineVersion;
  std::vector<double> alphas;
  ZChoice z = ZChoice::plus_i;
  GridSpec grid;
  std::uint64_t seed = 0;
  ToleranceTable tolerances;
  std::vector<CheckResult> results;

  bool operator==(const VerificationReport&) const = default;
  /// True when no result is fail or error.
  bool all_passed() const;
};

/// Check ids run by the "all" suite.
std::vector<std::string> all_checks();

/// Expands suite names ("all", or a comma separated list of check ids).
std::vector<std::string> expand_suite(const std::string& suite);

struct SuiteConfig {
  std::string suite_name = "custom";
  std::vector<double> alphas;
  ZChoice z = ZChoice::plus_i;
  std::vector<FamilySpec> families;
  std::vector<std::string> checks;
  ToleranceTable tolerances = default_tolerances();
  FunctionalOptions functional;
  /// 0 means OALPHA_THREADS, else hardware concurrency.
  unsigned threads = 0;
};

/// Runs every applicable (check, alpha, signal) combination. Failed
/// preconditions become status=error results; the suite never aborts.
/// Throws InputError on empty alphas, families, checks or corpus.
VerificationReport run_suite(const SuiteConfig& config);

/// Status rule shared by every check: pass if margin >= -tol; otherwise
/// constant_discrepancy when the fallback margin (against the sharp or
/// rigorous constant) is >= -tol; otherwise fail.
CheckStatus decide_status(double margin, double tol, std::optional<double> fallback_margin);

struct AuditResult {
  std::string check_id;
  double alpha = 0.0;
  /// min (lower-bound inequalities) or max (upper-bound inequalities) of the
  /// normalized ratio over the family.
  double observed_sharp_constant = 0.0;
  std::map<std::string, double> argmin_parameters;
  std::optional<double> constant_paper;
  std::string direction;
  bool converged = true;
  std::size_t evaluations = 0;
  std::map<std::string, double> aux;
};

/// Supported check ids: heisenberg, log, pitt(lambda), hausdorff_young(p),
/// local(lambda) (E = [-1, 1]). Continuous families are searched by
/// golden section; discrete families are enumerated.
AuditResult audit_constant(const std::string& check_id, const FamilySpec& family, const AngleParams& params,
                           const FunctionalOptions& opts = {});

/// Splits "pitt(0.25)" into {"pitt", 0.25}; the parameter is empty when the
/// id has no parentheses. InputError on malformed ids.
std::pair<std::string, std::optional<double>> parse_check_id(const std::string& id);

/// Threads to use when none is configured: OALPHA_THREADS if set, else the
/// hardware concurrency.
unsigned default_thread_count();

}  // namespace oalpha
