#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "remo/rational.hpp"

namespace remo {

// Exit statuses.
inline constexpr int kExitPositive = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInconsistent = 3;

struct RunConfig {
  std::string command;  // validate analyze nested realize skew decompose verify export
  std::string input;    // path; empty only for the randomized verify suite
  bool graph = false;   // input is an edge list, analyzed through its graphical building set
  bool maximal = false;
  std::optional<std::string> gamma;  // "P/Q"
  std::string format = "text";       // text json hrep vrep
  bool certificates = false;         // list every failing flip, not just the first
  std::optional<std::uint64_t> seed;
  int count = 200;  // graphs in the randomized verify suite
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv and dispatches to run().
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace remo
