#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lzw::cli {

/// Parses argv and runs one subcommand. CSV goes to `out` unless --out names
/// a file; diagnostics go to `err`. Returns the process exit status:
/// 0 success, 1 configuration error, 2 numerical failure, 3 I/O failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Fast invariant checks run by --seed-check. Throws lzw::Error on failure;
/// returns the number of checks.
int seed_check();

}  // namespace lzw::cli
