#pragma once

#include <complex>
#include <cstdint>

#include "lzw/zeros.hpp"

namespace lzw {

/// x = num/den > 1 in lowest terms.
class RationalPoint {
 public:
  /// Errors: invalid_argument unless num/den > 1 with den > 0.
  RationalPoint(std::uint64_t num, std::uint64_t den = 1);

  /// Accepts "n" or "n/m".
  static RationalPoint parse(const std::string& text);

  std::uint64_t num() const noexcept { return num_; }
  std::uint64_t den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }
  double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  double log() const noexcept;
  std::string to_string() const;

 private:
  std::uint64_t num_;
  std::uint64_t den_;
};

/// p when n = p^k with k >= 1, otherwise 0.
std::uint64_t prime_power_base(std::uint64_t n) noexcept;

/// Lambda(x): log p on prime powers p^k, 0 elsewhere (including non-integers).
double von_mangoldt(const RationalPoint& x) noexcept;

/// Distance from x to the nearest prime power other than x itself.
double nearest_pp_distance(const RationalPoint& x);

/// sum_{0 < gamma <= T} x^{1/2 + i sign gamma}, summed over fixed-size chunks
/// of the table whose partial sums are combined in ascending order; the
/// result does not depend on the thread count.
/// Errors: range_exceeded when the table does not cover T.
std::complex<double> landau_zero_sum(const RationalPoint& x, const ZeroTable& zeros, double T, int sign = 1,
                                     unsigned threads = 0);

/// -(T/2pi) Lambda(x).
double landau_main_term(const RationalPoint& x, double T) noexcept;

/// x log(2xT) log log(3x) + log x min(T, x/<x>) + log(2T) min(T, 1/log x),
/// every implied constant set to 1.
double landau_error_budget(const RationalPoint& x, double T);

}  // namespace lzw
