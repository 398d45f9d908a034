#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fpq {

enum class ErrorCode {
  CyclicQuiver,
  BadArrow,
  DuplicateLabel,
  QuiverMismatch,
  LengthMismatch,
  BadShape,
  BadInterval,
  WrongQuiver,
  BadPaths,
  CapExceeded,
  NoConvergence,
  IncompleteList,
  StructureInvalid,
  StructureMismatch,
  NotAQuiverAction,
  UnitNotFound,
  DimensionGuard,
  UnknownSuite,
  ParseError,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Domain error carried through every module; the CLI maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fpq
