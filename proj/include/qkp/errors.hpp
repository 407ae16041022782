#pragma once

#include <stdexcept>

namespace qkp {

// Thrown when a weight total or table index would exceed the knapsack capacity
// in a context that assumed feasibility.
struct CapacityExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Signal, not an error: every item fits at once (sum of weights <= capacity),
// so greedy stopping ratios and biased states are undefined. Callers that can
// handle such instances check is_trivial() up front instead of catching this.
struct TrivialInstance : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Circuit layout cannot be built for the requested size (e.g. a ring pairing
// needs an even number of qubits).
struct UnsupportedShape : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace qkp
