#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tvx::cli {

/// Exit codes: a decision command answering yes, or any other success.
inline constexpr int kYes = 0;
/// A well-formed run whose answer is no.
inline constexpr int kNo = 1;
/// Bad usage or malformed input.
inline constexpr int kInputError = 2;

/// Runs one subcommand. `args` excludes the program name. Verdicts go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tvx::cli
