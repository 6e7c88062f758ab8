#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace genival::cli {

/// Exit codes: 0 success, 1 domain error, 2 parse or I/O error.
enum exit_code : int { ok = 0, domain_failure = 1, usage_failure = 2 };

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace genival::cli
