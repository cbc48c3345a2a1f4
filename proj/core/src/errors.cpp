#include "bellpoly/errors.hpp"

namespace bellpoly {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DomainError: return "DOMAIN_ERROR";
    case ErrorCode::NoRoot: return "NO_ROOT";
    case ErrorCode::IrrationalLeadingRoot: return "IRRATIONAL_LEADING_ROOT";
    case ErrorCode::NonInvertible: return "NON_INVERTIBLE";
    case ErrorCode::InsufficientData: return "INSUFFICIENT_DATA";
    case ErrorCode::Degenerate: return "DEGENERATE";
    case ErrorCode::InvalidDistribution: return "INVALID_DISTRIBUTION";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::MalformedJson: return "MALFORMED_JSON";
    case ErrorCode::MissingField: return "MISSING_FIELD";
    case ErrorCode::IoError: return "IO_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace bellpoly
