#include "foliate/error.hpp"

namespace foliate {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotASuspension: return "NotASuspension";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::UnknownBlock: return "UnknownBlock";
    case ErrorCode::SlotOccupied: return "SlotOccupied";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::SlopeMismatch: return "SlopeMismatch";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::UnknownLeaf: return "UnknownLeaf";
    case ErrorCode::NotOrientable: return "NotOrientable";
    case ErrorCode::TransverseBoundaryPresent: return "TransverseBoundaryPresent";
    case ErrorCode::NotDeletable: return "NotDeletable";
    case ErrorCode::NotAdjacentToTurbulization: return "NotAdjacentToTurbulization";
    case ErrorCode::NotTaut: return "NotTaut";
    case ErrorCode::NoTransverseLoopThroughSite: return "NoTransverseLoopThroughSite";
    case ErrorCode::ReebBandAtHigherGenus: return "ReebBandAtHigherGenus";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::UnknownFigure: return "UnknownFigure";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownName: return "UnknownName";
  }
  return "Unknown";
}

}  // namespace foliate
