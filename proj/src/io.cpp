#include "oalpha/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "oalpha/error.hpp"

namespace oalpha {

namespace {

constexpr double kSpacingTol = 1e-9;

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_number(const std::string& cell, std::size_t line_no, const std::string& column) {
  if (cell.empty()) throw ParseError(fmt::format("line {}: empty '{}' value", line_no, column));
  char* end = nullptr;
  const double v = std::strtod(cell.c_str(), &end);
  if (end != cell.c_str() + cell.size()) {
    throw ParseError(fmt::format("line {}: '{}' is not a number in column '{}'", line_no, cell, column));
  }
  return v;
}

template <class Domain>
Sampled<Domain> read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot open '{}'", path));

  std::string line;
  std::size_t line_no = 0;
  std::string header;
  while (std::getline(in, line)) {
    ++line_no;
    header = trim(line);
    if (!header.empty()) break;
  }
  if (header.empty()) throw EmptyFileError(fmt::format("'{}' is empty", path));
  if (header.rfind("\xEF\xBB\xBF", 0) == 0) header.erase(0, 3);

  const std::vector<std::string> cols = split_csv(header);
  const char* axis = (!cols.empty() && cols[0] == "s") ? "s" : "t";
  const std::vector<std::string> expected = {axis, "re", "im"};
  for (std::size_t k = 0; k < expected.size(); ++k) {
    if (k >= cols.size() || cols[k] != expected[k]) {
      throw ParseError(fmt::format("'{}': missing column '{}' (header must be {},re,im)", path, expected[k], axis));
    }
  }
  if (cols.size() > expected.size()) {
    throw ParseError(fmt::format("'{}': unexpected column '{}'", path, cols[expected.size()]));
  }

  std::vector<double> axis_values;
  std::vector<cplx> values;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string row = trim(line);
    if (row.empty()) continue;
    const std::vector<std::string> cells = split_csv(row);
    if (cells.size() != 3) {
      throw ParseError(fmt::format("'{}' line {}: expected 3 fields, got {}", path, line_no, cells.size()));
    }
    axis_values.push_back(parse_number(cells[0], line_no, axis));
    values.emplace_back(parse_number(cells[1], line_no, "re"), parse_number(cells[2], line_no, "im"));
  }
  if (values.empty()) throw EmptyFileError(fmt::format("'{}' has a header but no samples", path));
  if (values.size() < 2) throw ParseError(fmt::format("'{}': at least two samples are required", path));

  const std::size_t n = values.size();
  const double x0 = axis_values.front();
  const double dx = (axis_values.back() - x0) / static_cast<double>(n - 1);
  if (!(dx > 0.0) || !std::isfinite(dx)) {
    throw NonUniformGridError(fmt::format("'{}': column {} must be strictly increasing", path, axis));
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double expect = x0 + static_cast<double>(k) * dx;
    if (std::fabs(axis_values[k] - expect) > kSpacingTol * dx) {
      throw NonUniformGridError(
          fmt::format("'{}': sample {} at {} is off the uniform grid (expected {})", path, k, axis_values[k], expect));
    }
  }
  Sampled<Domain> out{GridSpec{n, x0, dx}, std::move(values)};
  validate_samples(out);
  return out;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(fmt::format("cannot write '{}'", path));
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError(fmt::format("write to '{}' failed", path));
}

std::string json_number(double v) {
  if (std::isnan(v)) return "\"nan\"";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  return fmt::format("{:.17g}", v);
}

std::string json_number(const std::optional<double>& v) { return v ? json_number(*v) : "null"; }

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

std::string json_double_map(const std::map<std::string, double>& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : m) {
    out += fmt::format("{}{}: {}", first ? "" : ", ", json_string(k), json_number(v));
    first = false;
  }
  return out + "}";
}

double number_from_json(const nlohmann::json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  throw ParseError(fmt::format("expected a number, got {}", j.dump()));
}

std::optional<double> optional_from_json(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return number_from_json(j);
}

}  // namespace

SampledSignal read_signal_csv(const std::string& path) { return read_csv<TimeDomain>(path); }
Spectrum read_spectrum_csv(const std::string& path) { return read_csv<SpectralDomain>(path); }

template <class Domain>
void write_samples_csv(const Sampled<Domain>& samples, const std::string& path, const std::string& axis) {
  validate_samples(samples);
  std::ofstream out = open_out(path);
  out << axis << ",re,im\n";
  for (std::size_t k = 0; k < samples.size(); ++k) {
    out << fmt::format("{:.17g},{:.17g},{:.17g}\n", samples.grid.at(k), samples.values[k].real(),
                       samples.values[k].imag());
  }
  finish(out, path);
}

template void write_samples_csv(const Sampled<TimeDomain>&, const std::string&, const std::string&);
template void write_samples_csv(const Sampled<SpectralDomain>&, const std::string&, const std::string&);

void write_plot_csv(const Spectrum& spectrum, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "s,re,im,abs\n";
  for (std::size_t k = 0; k < spectrum.size(); ++k) {
    const cplx v = spectrum.values[k];
    out << fmt::format("{:.17g},{:.17g},{:.17g},{:.17g}\n", spectrum.grid.at(k), v.real(), v.imag(), std::abs(v));
  }
  finish(out, path);
}

std::string to_string(ZChoice z) {
  switch (z) {
    case ZChoice::plus_i:
      return "+i";
    case ZChoice::minus_i:
      return "-i";
    case ZChoice::none:
      return "0";
  }
  return "0";
}

ZChoice z_from_string(const std::string& s) {
  if (s == "+i" || s == "i") return ZChoice::plus_i;
  if (s == "-i") return ZChoice::minus_i;
  throw InputError(fmt::format("z must be +i or -i, got '{}'", s));
}

std::string report_to_json(const VerificationReport& report) {
  std::string out;
  out += "{\n";
  out += fmt::format("  \"suite\": {},\n", json_string(report.suite_name));
  out += fmt::format("  \"engine_version\": {},\n", json_string(report.engine_version));
  if (report.alphas.size() == 1) {
    out += fmt::format("  \"alpha\": {},\n", json_number(report.alphas.front()));
  } else {
    out += "  \"alpha\": [";
    for (std::size_t k = 0; k < report.alphas.size(); ++k) {
      out += (k ? ", " : "") + json_number(report.alphas[k]);
    }
    out += "],\n";
  }
  out += fmt::format("  \"z\": {},\n", json_string(to_string(report.z)));
  out += fmt::format("  \"grid\": {{\"n\": {}, \"t_min\": {}, \"t_max\": {}}},\n", report.grid.n,
                     json_number(report.grid.x_min), json_number(report.grid.box_end()));
  out += fmt::format("  \"seed\": {},\n", report.seed);
  out += fmt::format("  \"tolerances\": {},\n", json_double_map(report.tolerances));
  if (report.results.empty()) {
    out += "  \"results\": []\n";
  } else {
    out += "  \"results\": [\n";
    for (std::size_t k = 0; k < report.results.size(); ++k) {
      const CheckResult& r = report.results[k];
      out += fmt::format(
          "    {{\"check_id\": {}, \"alpha\": {}, \"lhs\": {}, \"rhs\": {}, \"margin\": {}, "
          "\"constant_paper\": {}, \"constant_observed\": {}, \"status\": {}",
          json_string(r.check_id), json_number(r.alpha), json_number(r.lhs), json_number(r.rhs),
          json_number(r.margin), json_number(r.constant_paper), json_number(r.constant_observed),
          json_string(to_string(r.status)));
      if (!r.note.empty()) out += fmt::format(", \"note\": {}", json_string(r.note));
      out += k + 1 < report.results.size() ? "},\n" : "}\n";
    }
    out += "  ]\n";
  }
  out += "}\n";
  return out;
}

VerificationReport report_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(fmt::format("invalid report JSON: {}", e.what()));
  }
  try {
    VerificationReport r;
    r.suite_name = j.at("suite").get<std::string>();
    r.engine_version = j.at("engine_version").get<std::string>();
    const auto& alpha = j.at("alpha");
    if (alpha.is_array()) {
      for (const auto& a : alpha) r.alphas.push_back(number_from_json(a));
    } else {
      r.alphas.push_back(number_from_json(alpha));
    }
    r.z = z_from_string(j.at("z").get<std::string>());
    const auto& grid = j.at("grid");
    const std::size_t n = grid.at("n").get<std::size_t>();
    r.grid = GridSpec::box(n, number_from_json(grid.at("t_min")), number_from_json(grid.at("t_max")));
    r.seed = j.value("seed", std::uint64_t{0});
    for (const auto& [k, v] : j.at("tolerances").items()) r.tolerances[k] = number_from_json(v);
    for (const auto& item : j.at("results")) {
      CheckResult c;
      c.check_id = item.at("check_id").get<std::string>();
      c.alpha = number_from_json(item.at("alpha"));
      c.z = r.z;
      c.lhs = number_from_json(item.at("lhs"));
      c.rhs = number_from_json(item.at("rhs"));
      c.margin = number_from_json(item.at("margin"));
      c.constant_paper = optional_from_json(item.at("constant_paper"));
      c.constant_observed = optional_from_json(item.at("constant_observed"));
      c.status = status_from_string(item.at("status").get<std::string>());
      c.note = item.value("note", std::string{});
      r.results.push_back(std::move(c));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(fmt::format("malformed report: {}", e.what()));
  } catch (const InputError& e) {
    throw ParseError(fmt::format("malformed report: {}", e.what()));
  }
}

void write_report_json(const VerificationReport& report, const std::string& path) {
  std::ofstream out = open_out(path);
  out << report_to_json(report);
  finish(out, path);
}

VerificationReport read_report_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open '{}'", path));
  std::stringstream ss;
  ss << in.rdbuf();
  return report_from_json(ss.str());
}

std::string audit_to_json(const AuditResult& a) {
  std::string out = "{\n";
  out += fmt::format("  \"check_id\": {},\n", json_string(a.check_id));
  out += fmt::format("  \"engine_version\": {},\n", json_string(kEngineVersion));
  out += fmt::format("  \"alpha\": {},\n", json_number(a.alpha));
  out += fmt::format("  \"direction\": {},\n", json_string(a.direction));
  out += fmt::format("  \"observed_sharp_constant\": {},\n", json_number(a.observed_sharp_constant));
  out += fmt::format("  \"constant_paper\": {},\n", json_number(a.constant_paper));
  out += fmt::format("  \"argmin_parameters\": {},\n", json_double_map(a.argmin_parameters));
  out += fmt::format("  \"converged\": {},\n", a.converged ? "true" : "false");
  out += fmt::format("  \"evaluations\": {},\n", a.evaluations);
  out += fmt::format("  \"aux\": {}\n", json_double_map(a.aux));
  out += "}\n";
  return out;
}

void write_audit_json(const AuditResult& audit, const std::string& path) {
  std::ofstream out = open_out(path);
  out << audit_to_json(audit);
  finish(out, path);
}

}  // namespace oalpha
