#include "oalpha/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "oalpha/error.hpp"
#include "oalpha/harness.hpp"
#include "oalpha/io.hpp"
#include "oalpha/transform.hpp"

namespace oalpha {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitChecksFailed = 1;
constexpr int kExitUsage = 2;

struct GridOptions {
  std::size_t n = 4096;
  double t_min = -16.0;
  double t_max = 16.0;

  GridSpec spec() const {
    if (!(t_max > t_min)) throw InputError(fmt::format("--t-max {} must exceed --t-min {}", t_max, t_min));
    GridSpec g = GridSpec::box(n, t_min, t_max);
    g.validate();
    return g;
  }
};

void add_grid_options(CLI::App* cmd, GridOptions& g) {
  cmd->add_option("--n", g.n, "number of samples")->capture_default_str();
  cmd->add_option("--t-min", g.t_min, "start of the sampling box [t_min, t_max)")->capture_default_str();
  cmd->add_option("--t-max", g.t_max, "end of the sampling box")->capture_default_str();
}

AngleParams angle_from(const std::string& alpha_text, const std::string& z_text) {
  return make_params(parse_alpha(alpha_text), z_from_string(z_text));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(fmt::format("cannot write '{}'", out_path));
  out << text;
  if (!out.flush()) throw IoError(fmt::format("write to '{}' failed", out_path));
}

std::vector<FamilySpec> families_from(const std::string& name, const GridSpec& grid, std::size_t count,
                                      std::uint64_t seed) {
  const double bandwidth = std::min(4.0, 0.5 * kPi / grid.dx);
  std::vector<FamilySpec> out;
  if (name == "chirped" || name == "all") out.push_back(FamilySpec::chirped_gaussian(0.5, 2.0, grid));
  if (name == "hermite" || name == "all") out.push_back(FamilySpec::hermite(6, grid));
  if (name == "random" || name == "all") out.push_back(FamilySpec::random_smooth(count, bandwidth, seed, grid));
  if (out.empty()) throw InputError(fmt::format("unknown family '{}' (chirped, hermite, random, all)", name));
  return out;
}

std::string with_argument(const std::string& check, std::optional<double> lambda, std::optional<double> p) {
  if (check.find('(') != std::string::npos) return check;
  if (check == "pitt" || check == "local") {
    return fmt::format("{}({})", check, lambda.value_or(check == "pitt" ? 0.5 : 0.25));
  }
  if (check == "hausdorff_young") return fmt::format("{}({})", check, p.value_or(1.0));
  return check;
}

}  // namespace

double parse_alpha(const std::string& text) {
  static const std::regex pi_form(R"(^\s*([+-]?\d*\.?\d*)\s*\*?\s*pi\s*(?:/\s*(\d*\.?\d+))?\s*$)",
                                  std::regex::icase);
  std::smatch m;
  double value = 0.0;
  if (std::regex_match(text, m, pi_form)) {
    const std::string num = m[1].str();
    double factor = 1.0;
    if (num == "-") {
      factor = -1.0;
    } else if (!num.empty() && num != "+") {
      factor = std::stod(num);
    }
    double denom = 1.0;
    if (m[2].matched) denom = std::stod(m[2].str());
    if (denom == 0.0) throw InputError(fmt::format("angle '{}' divides by zero", text));
    value = factor * kPi / denom;
  } else {
    std::size_t used = 0;
    try {
      value = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || text.find_first_not_of(" \t", used) != std::string::npos) {
      throw InputError(fmt::format("cannot parse angle '{}' (use radians or pi/K)", text));
    }
  }
  if (!std::isfinite(value)) throw InputError(fmt::format("angle '{}' is not finite", text));
  const double reduced = std::fmod(value, 2.0 * kPi);
  return reduced < 0.0 ? reduced + 2.0 * kPi : reduced;
}

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"O_alpha transform and uncertainty-inequality verification"};
  app.name("oalpha");
  app.require_subcommand(1);

  std::string alpha_text = "pi/2";
  std::string z_text = "+i";
  std::string in_path;
  std::string out_path;
  std::string plot_path;
  GridOptions grid_opts;

  auto add_angle = [&](CLI::App* cmd) {
    cmd->add_option("--alpha", alpha_text, "angle in radians or pi/K")->capture_default_str();
    cmd->add_option("--z", z_text, "+i or -i")->capture_default_str();
  };

  CLI::App* transform = app.add_subcommand("transform", "apply O_alpha to a t,re,im CSV signal");
  add_angle(transform);
  transform->add_option("--in", in_path, "input signal CSV")->required();
  transform->add_option("--out", out_path, "output spectrum CSV")->required();
  transform->add_option("--plot", plot_path, "optional plot data (s,re,im,abs)");

  std::optional<std::size_t> invert_n;
  std::optional<double> invert_t_min;
  std::optional<double> invert_t_max;
  CLI::App* invert = app.add_subcommand("invert", "invert an s,re,im CSV spectrum");
  add_angle(invert);
  invert->add_option("--in", in_path, "input spectrum CSV")->required();
  invert->add_option("--out", out_path, "output signal CSV")->required();
  invert->add_option("--n", invert_n, "output samples (default: dual grid)");
  invert->add_option("--t-min", invert_t_min, "output box start");
  invert->add_option("--t-max", invert_t_max, "output box end");

  std::vector<std::string> verify_alphas;
  std::string suite = "all";
  std::string family = "all";
  std::uint64_t seed = 0;
  std::size_t count = 8;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite and write a JSON report");
  verify->add_option("--alpha", verify_alphas, "angle(s); repeat for several")->default_str("pi/2");
  verify->add_option("--z", z_text, "+i or -i")->capture_default_str();
  verify->add_option("--suite", suite, "all, or comma separated check ids")->capture_default_str();
  verify->add_option("--family", family, "chirped, hermite, random or all")->capture_default_str();
  verify->add_option("--seed", seed, "seed for the random family")->capture_default_str();
  verify->add_option("--count", count, "random signals per angle")->capture_default_str();
  verify->add_option("--out", out_path, "report path (default stdout)");
  add_grid_options(verify, grid_opts);

  std::string check = "heisenberg";
  std::optional<double> lambda;
  std::optional<double> p;
  std::string audit_family = "chirped";
  CLI::App* audit = app.add_subcommand("audit", "search a family for the sharp constant of one inequality");
  add_angle(audit);
  audit->add_option("--check", check, "heisenberg, log, pitt, local or hausdorff_young")->capture_default_str();
  audit->add_option("--lambda", lambda, "exponent for pitt and local");
  audit->add_option("--p", p, "exponent for hausdorff_young");
  audit->add_option("--family", audit_family, "chirped, hermite or random")->capture_default_str();
  audit->add_option("--seed", seed, "seed for the random family")->capture_default_str();
  audit->add_option("--count", count, "random signals")->capture_default_str();
  audit->add_option("--out", out_path, "JSON path (default stdout)");
  add_grid_options(audit, grid_opts);

  std::string gen_family = "chirped";
  CLI::App* generate = app.add_subcommand("generate", "write corpus signals as CSV files");
  add_angle(generate);
  generate->add_option("--family", gen_family, "chirped, hermite or random")->capture_default_str();
  generate->add_option("--seed", seed, "seed for the random family")->capture_default_str();
  generate->add_option("--count", count, "random signals")->capture_default_str();
  generate->add_option("--out", out_path, "output directory")->required();
  add_grid_options(generate, grid_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code == 0) return kExitOk;
    std::cerr << app.help();
    return kExitUsage;
  }

  try {
    if (*transform) {
      const AngleParams params = angle_from(alpha_text, z_text);
      const SampledSignal signal = read_signal_csv(in_path);
      const GridSpec& g = signal.grid;
      const Spectrum spectrum = (is_power_of_two(g.n) && g.is_symmetric())
                                    ? oalpha_fast(signal, params)
                                    : oalpha_direct(signal, params, fast_spectral_grid(g, params));
      write_samples_csv(spectrum, out_path, "s");
      if (!plot_path.empty()) write_plot_csv(spectrum, plot_path);
      return kExitOk;
    }
    if (*invert) {
      const AngleParams params = angle_from(alpha_text, z_text);
      const Spectrum spectrum = read_spectrum_csv(in_path);
      const GridSpec& g = spectrum.grid;
      const bool custom = invert_n || invert_t_min || invert_t_max;
      SampledSignal signal;
      if (!custom && is_power_of_two(g.n) && g.is_fft_symmetric()) {
        signal = oalpha_inverse_fast(spectrum, params);
      } else {
        GridSpec t_grid = fast_spectral_grid(g, params);
        if (custom) {
          const std::size_t n = invert_n.value_or(g.n);
          const double lo = invert_t_min.value_or(t_grid.x_min);
          const double hi = invert_t_max.value_or(t_grid.box_end());
          t_grid = GridOptions{n, lo, hi}.spec();
        }
        signal = oalpha_inverse(spectrum, params, t_grid);
      }
      write_samples_csv(signal, out_path, "t");
      return kExitOk;
    }
    if (*verify) {
      if (verify_alphas.empty()) verify_alphas.push_back("pi/2");
      SuiteConfig config;
      config.suite_name = suite;
      config.z = z_from_string(z_text);
      for (const std::string& a : verify_alphas) config.alphas.push_back(make_params(parse_alpha(a), config.z).alpha());
      config.checks = expand_suite(suite);
      config.families = families_from(family, grid_opts.spec(), count, seed);
      const VerificationReport report = run_suite(config);
      emit(report_to_json(report), out_path);
      return report.all_passed() ? kExitOk : kExitChecksFailed;
    }
    if (*audit) {
      const AngleParams params = angle_from(alpha_text, z_text);
      const std::vector<FamilySpec> fams = families_from(audit_family, grid_opts.spec(), count, seed);
      if (fams.size() != 1) throw InputError("audit needs a single family");
      const AuditResult result = audit_constant(with_argument(check, lambda, p), fams.front(), params);
      emit(audit_to_json(result), out_path);
      return kExitOk;
    }
    if (*generate) {
      const AngleParams params = angle_from(alpha_text, z_text);
      const std::vector<FamilySpec> fams = families_from(gen_family, grid_opts.spec(), count, seed);
      std::error_code ec;
      std::filesystem::create_directories(out_path, ec);
      if (ec) throw IoError(fmt::format("cannot create '{}': {}", out_path, ec.message()));
      for (const FamilySpec& f : fams) {
        const std::vector<CorpusMember> corpus = build_corpus(f, params);
        for (std::size_t k = 0; k < corpus.size(); ++k) {
          const auto path = std::filesystem::path(out_path) / fmt::format("{}_{:03}.csv", to_string(f.kind), k);
          write_samples_csv(corpus[k].signal, path.string(), "t");
        }
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "oalpha: " << e.kind() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "oalpha: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace oalpha
