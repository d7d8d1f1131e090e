#pragma once

#include <stdexcept>
#include <string>

namespace regbound {

enum class Errc {
  // Malformed or out-of-domain input.
  duplicate_abscissa,
  non_integral_coefficients,
  degree_non_positive,
  dimension_zero,
  index_out_of_range,
  m_too_small,
  m_too_large,
  m_out_of_range,
  unknown_family,
  invalid_profile,
  parse_error,
  validation_error,
  // The numbers contradict the hypotheses the bound relies on.
  negative_rank,
  negative_rank_e,
  inconsistent_profile,
  route_mismatch,
  // The request itself cannot be satisfied.
  incompatible,
};

const char* errc_name(Errc code) noexcept;

/// Single exception type for the library. `code()` tells callers which
/// failure occurred; `index()` carries the offending position for
/// negative_rank and is -1 otherwise.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, int index = -1)
      : std::runtime_error(what), code_(code), index_(index) {}

  Errc code() const noexcept { return code_; }
  int index() const noexcept { return index_; }

 private:
  Errc code_;
  int index_;
};

}  // namespace regbound
