#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bei {

enum class ErrorCode {
  invalid_argument,
  invalid_vertex,
  parse_error,
  bound_exceeded,
  disconnected,
  precondition,
  unproved_range,
  not_a_cutset,
  io_error,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure surfaced by the library carries a machine-readable code so
/// the CLI can report it as JSON.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bei
