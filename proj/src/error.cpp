#include "regbound/error.hpp"

namespace regbound {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::duplicate_abscissa: return "DuplicateAbscissa";
    case Errc::non_integral_coefficients: return "NonIntegralCoefficients";
    case Errc::degree_non_positive: return "DegreeNonPositive";
    case Errc::dimension_zero: return "DimensionZero";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::m_too_small: return "MTooSmall";
    case Errc::m_too_large: return "MTooLarge";
    case Errc::m_out_of_range: return "MOutOfRange";
    case Errc::unknown_family: return "UnknownFamily";
    case Errc::invalid_profile: return "InvalidProfile";
    case Errc::parse_error: return "ParseError";
    case Errc::validation_error: return "ValidationError";
    case Errc::negative_rank: return "NegativeRank";
    case Errc::negative_rank_e: return "NegativeRankE";
    case Errc::inconsistent_profile: return "InconsistentProfile";
    case Errc::route_mismatch: return "RouteMismatch";
    case Errc::incompatible: return "Incompatible";
  }
  return "Unknown";
}

}  // namespace regbound
