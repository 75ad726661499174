#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace foliate {

enum class ErrorCode {
  InvalidArgument,
  NotASuspension,
  IndexOutOfRange,
  UnknownBlock,
  SlotOccupied,
  KindMismatch,
  SlopeMismatch,
  Disconnected,
  UnknownLeaf,
  NotOrientable,
  TransverseBoundaryPresent,
  NotDeletable,
  NotAdjacentToTurbulization,
  NotTaut,
  NoTransverseLoopThroughSite,
  ReebBandAtHigherGenus,
  DomainError,
  UnknownFigure,
  IoError,
  ParseError,
  UnknownName,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace foliate
