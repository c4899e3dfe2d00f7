#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

namespace lzw {

enum class ZeroSource { file, computed };

/// Ascending ordinates of zeta zeros on the critical line. Every zero with
/// ordinate up to `coverage` is present.
struct ZeroTable {
  std::vector<double> ordinates;
  ZeroSource source = ZeroSource::file;
  double precision = 0.0;  // claimed absolute error per ordinate
  double coverage = std::numeric_limits<double>::infinity();

  std::size_t size() const noexcept { return ordinates.size(); }
};

/// (T/2pi) log(T/2pi) - T/2pi + 7/8.
double rvm_estimate(double T) noexcept;

/// Allowed deviation of N(T) from rvm_estimate: 2 + log(T)/2.
double rvm_slack(double T) noexcept;

/// Checks the count band at every ordinate (just below and at it) and at the
/// coverage height. Errors: count_inconsistent.
void check_rvm(const ZeroTable& table);

/// Whitespace separated decimals, '#' comment lines. A "# coverage: T"
/// comment declares completeness up to T; otherwise the last ordinate is
/// used. An empty input yields an empty table that counts 0 everywhere.
/// Errors: parse_error (with line number), non_monotonic, count_inconsistent.
ZeroTable parse_zeros(std::istream& in, const std::string& name = "<input>");

/// Errors: io_error plus those of parse_zeros.
ZeroTable load_zeros(const std::filesystem::path& path);

/// Shortest round-trip decimal form with metadata comments; parse_zeros reads
/// it back to an identical table.
void write_zeros(const ZeroTable& table, std::ostream& out);

/// Errors: io_error.
void save_zeros(const ZeroTable& table, const std::filesystem::path& path);

/// All zeros with 10 < gamma <= T_max from sign changes of Hardy's Z, refined
/// to 1e-9. Completeness is checked against the Riemann-von Mangoldt band and
/// the scan is repeated on a finer grid when it fails.
/// Errors: invalid_argument unless 15 <= T_max <= 1e4; missed_zero;
/// accuracy_loss.
ZeroTable compute_zeros(double T_max, unsigned threads = 0);

/// N(T). Errors: range_exceeded when T is beyond the table's coverage.
std::size_t count(const ZeroTable& table, double T);

}  // namespace lzw
