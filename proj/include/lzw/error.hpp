#pragma once

#include <stdexcept>
#include <string>

namespace lzw {

enum class Errc {
  non_prime_modulus,
  index_out_of_range,
  pole_at_non_positive_integer,
  pole_at_one,
  domain_too_small,
  accuracy_loss,
  parse_error,
  non_monotonic,
  count_inconsistent,
  missed_zero,
  range_exceeded,
  out_of_strip,
  principal_character,
  height_exceeded,
  cutoff_too_small,
  cutoff_too_large,
  closed_form_mismatch,
  series_product_disagreement,
  division_by_zero,
  search_exhausted,
  bound_violation,
  invalid_argument,
  io_error,
};

/// How a failure should be surfaced to a caller such as the CLI.
enum class ErrorClass { config, numerical, io };

const char* errc_name(Errc code) noexcept;
ErrorClass classify(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace lzw
