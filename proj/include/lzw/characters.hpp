#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lzw {

bool is_prime(std::int64_t n) noexcept;

/// Smallest primitive root modulo the prime q.
std::int64_t primitive_root(std::int64_t q);

/// exp(2 pi i r / m), exact (no rounding residue) at multiples of a quarter turn.
std::complex<double> unit_root(std::int64_t r, std::int64_t m) noexcept;

/// A Dirichlet character to a prime modulus q, stored as the index j of
/// chi(g^k) = exp(2 pi i j k / (q - 1)) for the smallest primitive root g.
/// Values are never computed by multiplying floats: chi(n) is described by
/// an exact exponent modulo q - 1 and only turned into a complex number at
/// the end. Cheap to copy; the discrete-log table is shared.
class DirichletCharacter {
 public:
  /// Errors: non_prime_modulus, index_out_of_range.
  DirichletCharacter(std::int64_t q, std::int64_t j);

  /// Parses the canonical "q:j" form.
  static DirichletCharacter parse(std::string_view text);

  std::int64_t modulus() const noexcept { return q_; }
  std::int64_t index() const noexcept { return j_; }
  std::int64_t generator() const noexcept;
  /// Order of the value group, q - 1.
  std::int64_t group_order() const noexcept { return q_ - 1; }
  bool is_principal() const noexcept { return j_ == 0; }
  /// 0 for even characters, 1 for odd ones.
  int parity() const noexcept;

  /// Discrete log of n to base g, or nothing when q | n.
  std::optional<std::int64_t> discrete_log(std::int64_t n) const noexcept;

  /// r in [0, q-1) with chi(n) = exp(2 pi i r / (q-1)); nothing when q | n.
  std::optional<std::int64_t> exponent(std::int64_t n) const noexcept;

  std::complex<double> operator()(std::int64_t n) const noexcept;

  DirichletCharacter conj() const noexcept;

  std::string to_string() const;

  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) noexcept {
    return a.q_ == b.q_ && a.j_ == b.j_;
  }

 private:
  struct Tables;
  static std::shared_ptr<const Tables> tables_for(std::int64_t q);
  DirichletCharacter(std::int64_t q, std::int64_t j, std::shared_ptr<const Tables> tables);

  std::int64_t q_;
  std::int64_t j_;
  std::shared_ptr<const Tables> tables_;
};

inline DirichletCharacter character(std::int64_t q, std::int64_t j) { return {q, j}; }

/// G(k, chi) = sum_{a=1}^{q} chi(a) e^{2 pi i a k / q}; each term's phase is
/// combined as one exact rational before the trigonometric call.
std::complex<double> gauss_sum(std::int64_t k, const DirichletCharacter& chi);

/// Root number of the functional equation L(s,chi) = X(s,chi) L(1-s, conj chi):
/// i^{-a} q^{-1/2} G(1, chi).
std::complex<double> root_number(const DirichletCharacter& chi);

}  // namespace lzw
