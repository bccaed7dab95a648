#pragma once

#include <string>

namespace oalpha {

/// Parses "pi", "pi/K", "N*pi/K", "Npi/K" or decimal radians and reduces the
/// result modulo 2 pi. Throws InputError on malformed text.
double parse_alpha(const std::string& text);

/// Exit codes: 0 success, 1 check failures, 2 usage or I/O errors.
int cli_main(int argc, const char* const* argv);

}  // namespace oalpha
