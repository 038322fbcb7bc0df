#pragma once

#include <iosfwd>

namespace gto::cli {

/// Exit statuses of the command-line tool.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kMalformedInput = 2;

/// Dispatches one subcommand. Human-readable results go to `out`; failures
/// are reported on `err` as a single-line JSON error object.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gto::cli
