#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bellpoly {

enum class ErrorCode {
  DomainError,
  NoRoot,
  IrrationalLeadingRoot,
  NonInvertible,
  InsufficientData,
  Degenerate,
  InvalidDistribution,
  ParseError,
  MalformedJson,
  MissingField,
  IoError,
};

/// Machine-readable name, e.g. "NO_ROOT".
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view code_name() const noexcept { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace bellpoly
