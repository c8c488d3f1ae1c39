#include "fermat/error.hpp"

namespace fermat {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ZeroPoint: return "ZeroPoint";
    case ErrorCode::ZeroCoordinate: return "ZeroCoordinate";
    case ErrorCode::WorkLimitExceeded: return "WorkLimitExceeded";
    case ErrorCode::NotAStackPoint: return "NotAStackPoint";
    case ErrorCode::DegeneratePoint: return "DegeneratePoint";
    case ErrorCode::SingularCurve: return "SingularCurve";
    case ErrorCode::PipelineMismatch: return "PipelineMismatch";
  }
  return "Unknown";
}

}  // namespace fermat
