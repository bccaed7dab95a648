#pragma once

#include <string>

#include "oalpha/grid.hpp"
#include "oalpha/harness.hpp"

namespace oalpha {

/// Reads "t,re,im" (or "s,re,im") CSV. The grid is inferred from the first
/// column, which must be uniformly spaced to 1e-9 relative.
/// Throws IoError, EmptyFileError, ParseError or NonUniformGridError.
SampledSignal read_signal_csv(const std::string& path);
Spectrum read_spectrum_csv(const std::string& path);

/// Writes samples with 17 significant digits. axis names the first column.
template <class Domain>
void write_samples_csv(const Sampled<Domain>& samples, const std::string& path, const std::string& axis);

/// Columns s, re, im, abs.
void write_plot_csv(const Spectrum& spectrum, const std::string& path);

std::string report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const std::string& text);
void write_report_json(const VerificationReport& report, const std::string& path);
VerificationReport read_report_json(const std::string& path);

std::string audit_to_json(const AuditResult& audit);
void write_audit_json(const AuditResult& audit, const std::string& path);

std::string to_string(ZChoice z);
ZChoice z_from_string(const std::string& s);

}  // namespace oalpha
