#pragma once

#include "qkp/instance.hpp"

namespace qkp {

struct OptResult {
  Bitstring x;
  std::int64_t value = 0;
};

// Exhaustive search over all 2^n assignments (Gray-code walk, so O(2^n) work).
// Ties resolve to the lexicographically smallest bitstring. Requires n <= 30.
OptResult brute_force_opt(const KnapsackInstance& inst);

// Classic O(n*capacity) table with backtracking; returns one optimal assignment.
OptResult dp_opt(const KnapsackInstance& inst);

}  // namespace qkp
