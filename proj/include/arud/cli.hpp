#pragma once

#include <iosfwd>

namespace arud::cli {

/// Parses argv and runs one subcommand. Data goes to `out`, diagnostics to
/// `err`. Returns 0 on success, 1 on a usage error, 2 when input or table
/// data cannot be read or is unusable.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace arud::cli
