#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "remo/block.hpp"

namespace remo {

enum class ErrorCode {
  ParseError,
  InvalidArgument,
  EmptyGround,
  DuplicateElement,
  ElementNotInGround,
  EmptyBlock,
  MissingSingleton,
  UnionMissing,
  NotConnected,
  GroundTooLarge,
  NotIntersectionClosed,
  BlockNotInBuildingSet,
  GroundSetMember,
  NotNested,
  NotMaximal,
  NoFlipFound,
  MultipleFlipsFound,
  NotAdjacent,
  CrossCheckFailed,
  GammaTooSmall,
  NonGenericFunctional,
  NotGenerating,
  NegativeWeight,
  EmptySupport,
  Unbounded,
  Empty,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library. Validation errors that have a natural
// witness (a missing singleton, a pair whose union is absent) carry it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<Block> witness = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<Block>& witness() const noexcept { return witness_; }

  // Input errors map to CLI exit status 2; the rest are internal.
  bool is_input_error() const noexcept;

 private:
  ErrorCode code_;
  std::vector<Block> witness_;
};

}  // namespace remo
