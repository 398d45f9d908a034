#include "fpq/error.hpp"

namespace fpq {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::CyclicQuiver: return "CyclicQuiver";
    case ErrorCode::BadArrow: return "BadArrow";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::QuiverMismatch: return "QuiverMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::BadShape: return "BadShape";
    case ErrorCode::BadInterval: return "BadInterval";
    case ErrorCode::WrongQuiver: return "WrongQuiver";
    case ErrorCode::BadPaths: return "BadPaths";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::IncompleteList: return "IncompleteList";
    case ErrorCode::StructureInvalid: return "StructureInvalid";
    case ErrorCode::StructureMismatch: return "StructureMismatch";
    case ErrorCode::NotAQuiverAction: return "NotAQuiverAction";
    case ErrorCode::UnitNotFound: return "UnitNotFound";
    case ErrorCode::DimensionGuard: return "DimensionGuard";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace fpq
