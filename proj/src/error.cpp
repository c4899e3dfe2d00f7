#include "lzw/error.hpp"

namespace lzw {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::non_prime_modulus: return "NonPrimeModulus";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::pole_at_non_positive_integer: return "PoleAtNonPositiveInteger";
    case Errc::pole_at_one: return "PoleAtOne";
    case Errc::domain_too_small: return "DomainTooSmall";
    case Errc::accuracy_loss: return "AccuracyLoss";
    case Errc::parse_error: return "ParseError";
    case Errc::non_monotonic: return "NonMonotonic";
    case Errc::count_inconsistent: return "CountInconsistent";
    case Errc::missed_zero: return "MissedZero";
    case Errc::range_exceeded: return "RangeExceeded";
    case Errc::out_of_strip: return "OutOfStrip";
    case Errc::principal_character: return "PrincipalCharacter";
    case Errc::height_exceeded: return "HeightExceeded";
    case Errc::cutoff_too_small: return "CutoffTooSmall";
    case Errc::cutoff_too_large: return "CutoffTooLarge";
    case Errc::closed_form_mismatch: return "ClosedFormMismatch";
    case Errc::series_product_disagreement: return "SeriesProductDisagreement";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::search_exhausted: return "SearchExhausted";
    case Errc::bound_violation: return "BoundViolation";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::io_error: return "IOError";
  }
  return "Unknown";
}

ErrorClass classify(Errc code) noexcept {
  switch (code) {
    case Errc::accuracy_loss:
    case Errc::missed_zero:
    case Errc::closed_form_mismatch:
    case Errc::series_product_disagreement:
    case Errc::division_by_zero:
    case Errc::search_exhausted:
    case Errc::bound_violation:
    case Errc::count_inconsistent:
      return ErrorClass::numerical;
    case Errc::io_error:
    case Errc::parse_error:
    case Errc::non_monotonic:
      return ErrorClass::io;
    default:
      return ErrorClass::config;
  }
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

}  // namespace lzw
