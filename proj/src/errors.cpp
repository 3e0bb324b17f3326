#include "remo/errors.hpp"

namespace remo {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EmptyGround: return "EmptyGround";
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::ElementNotInGround: return "ElementNotInGround";
    case ErrorCode::EmptyBlock: return "EmptyBlock";
    case ErrorCode::MissingSingleton: return "MissingSingleton";
    case ErrorCode::UnionMissing: return "UnionMissing";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::GroundTooLarge: return "GroundTooLarge";
    case ErrorCode::NotIntersectionClosed: return "NotIntersectionClosed";
    case ErrorCode::BlockNotInBuildingSet: return "BlockNotInBuildingSet";
    case ErrorCode::GroundSetMember: return "GroundSetMember";
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::NotMaximal: return "NotMaximal";
    case ErrorCode::NoFlipFound: return "NoFlipFound";
    case ErrorCode::MultipleFlipsFound: return "MultipleFlipsFound";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::CrossCheckFailed: return "CrossCheckFailed";
    case ErrorCode::GammaTooSmall: return "GammaTooSmall";
    case ErrorCode::NonGenericFunctional: return "NonGenericFunctional";
    case ErrorCode::NotGenerating: return "NotGenerating";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::EmptySupport: return "EmptySupport";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::Empty: return "Empty";
  }
  return "Unknown";
}

bool Error::is_input_error() const noexcept {
  switch (code_) {
    case ErrorCode::NoFlipFound:
    case ErrorCode::MultipleFlipsFound:
    case ErrorCode::CrossCheckFailed:
      return false;
    default:
      return true;
  }
}

}  // namespace remo
