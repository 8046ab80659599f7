#ifndef DILEMMA_ERRORS_HPP
#define DILEMMA_ERRORS_HPP

#include <stdexcept>

namespace dilemma {

// A game, type, or model parameter violates its domain constraint.
struct ParamDomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A profile has the wrong length or an out-of-range entry.
struct ProfileShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A strategy lies outside the game's strategy set.
struct StrategyRangeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The subset-enumeration oracle only handles up to 12 players.
struct OracleCapExceededError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace dilemma

#endif  // DILEMMA_ERRORS_HPP
