#ifndef REMIXED_ERROR_HPP
#define REMIXED_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace remixed {

enum class Errc {
  // qcalc
  not_divisible,
  degree_too_high,
  non_integer_coefficients,
  truncation_too_short,
  bad_rational,
  // config
  syntax,
  bad_sum,
  negative,
  empty,
  empty_site,
  no_weakly_shift,
  not_one_hole,
  // engine
  bad_content,
  // formulas
  wrong_family,
  shift_out_of_range,
  shift_beyond_weakly_bound,
  bad_partition,
  no_match,
};

inline std::string_view to_string(Errc e) {
  switch (e) {
    case Errc::not_divisible: return "NotDivisible";
    case Errc::degree_too_high: return "DegreeTooHigh";
    case Errc::non_integer_coefficients: return "NonIntegerCoefficients";
    case Errc::truncation_too_short: return "TruncationTooShort";
    case Errc::bad_rational: return "BadRational";
    case Errc::syntax: return "Syntax";
    case Errc::bad_sum: return "BadSum";
    case Errc::negative: return "Negative";
    case Errc::empty: return "Empty";
    case Errc::empty_site: return "EmptySite";
    case Errc::no_weakly_shift: return "NoWeaklyShift";
    case Errc::not_one_hole: return "NotOneHole";
    case Errc::bad_content: return "BadContent";
    case Errc::wrong_family: return "WrongFamily";
    case Errc::shift_out_of_range: return "ShiftOutOfRange";
    case Errc::shift_beyond_weakly_bound: return "ShiftBeyondWeaklyBound";
    case Errc::bad_partition: return "BadPartition";
    case Errc::no_match: return "NoMatch";
  }
  return "Unknown";
}

/// Every recoverable failure in the library surfaces as this exception; the
/// code identifies the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace remixed

#endif  // REMIXED_ERROR_HPP
