#pragma once

#include <stdexcept>

namespace maxplus {

/// Kleene star diverges: the graph carries a circuit of positive weight.
class PositiveCircuitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation demanded a coin with a+d = 0 and b+c = 0.
class ConditionAViolatedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested an eigenvector column but no vertex lies on a critical circuit.
class NoCriticalVertexError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace maxplus
