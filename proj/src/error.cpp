#include "bei/error.hpp"

namespace bei {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::invalid_vertex: return "invalid_vertex";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::bound_exceeded: return "bound_exceeded";
    case ErrorCode::disconnected: return "disconnected";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::unproved_range: return "unproved_range";
    case ErrorCode::not_a_cutset: return "not_a_cutset";
    case ErrorCode::io_error: return "io_error";
  }
  return "unknown";
}

}  // namespace bei
