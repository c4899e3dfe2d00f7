#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace lzw {

/// Coefficients (lowest degree first) of the n-th cyclotomic polynomial.
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);

/// An element of Z[zeta_m]: sum_r c_r zeta_m^r with integer c_r. Kept in the
/// group ring Z[x]/(x^m - 1); comparisons reduce modulo Phi_m, so two sums
/// compare equal exactly when they are the same algebraic number.
class RootSum {
 public:
  explicit RootSum(int order = 1);

  static RootSum integer(int order, std::int64_t v);
  static RootSum root(int order, std::int64_t r);

  int order() const noexcept { return static_cast<int>(coeffs_.size()); }

  RootSum& operator+=(const RootSum& other);
  RootSum& operator-=(const RootSum& other);
  RootSum operator-() const;
  friend RootSum operator+(RootSum a, const RootSum& b) { return a += b; }
  friend RootSum operator-(RootSum a, const RootSum& b) { return a -= b; }
  friend RootSum operator*(const RootSum& a, const RootSum& b);

  RootSum times_root(std::int64_t r) const;

  std::complex<double> value() const;

  /// Canonical form: coefficients modulo Phi_m, degree < phi(m).
  std::vector<std::int64_t> reduced() const;

  bool is_zero() const;
  friend bool operator==(const RootSum& a, const RootSum& b);

 private:
  std::vector<std::int64_t> coeffs_;
};

}  // namespace lzw
