#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace modfol {

/// Runs the command line; returns the process exit code. Diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Accepts "2", "-1.5", "2i", "-i", "0.5+2i", "1e-3-4e-2i".
std::complex<double> parse_complex(const std::string& text);

/// Comma-separated list of complex numbers.
std::vector<std::complex<double>> parse_complex_list(const std::string& text);

} // namespace modfol
