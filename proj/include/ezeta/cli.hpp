#pragma once

#include <complex>
#include <iosfwd>
#include <string_view>

namespace ezeta {

/// Runs the command line with the given arguments (argv[0] is the program
/// name). Returns 0 on success, 1 when a verification fails and 2 on a
/// usage or argument error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Parses "a+bi", "a-bi", "a", "bi" with no spaces. Throws std::invalid_argument.
std::complex<double> parse_complex(std::string_view text);

}  // namespace ezeta
