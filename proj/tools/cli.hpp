#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace perron::cli {

enum ExitCode : int {
  kOk = 0,
  kNotPerron = 1,
  kUndecided = 2,
  kInvalidInput = 3,
  kResourceCap = 4,
};

/// Runs one command line (args excludes the program name). Normal output goes
/// to `out` unless --out is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "512", "64k", "256M", "1G" (binary multiples) to bytes.
unsigned long long parse_memory(const std::string& text);

}  // namespace perron::cli
