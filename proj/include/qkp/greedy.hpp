#pragma once

#include <optional>

#include "qkp/instance.hpp"

namespace qkp {

struct GreedyResult {
  Bitstring x;
  std::int64_t value = 0;
  // Ratio of the first item the scan rejected; absent when everything fits.
  // This is also the largest ratio among items left out.
  std::optional<Ratio> r_stop;
};

// Scan items by descending ratio (ties by index) and take them while they
// fit; stop at the first item that does not fit.
GreedyResult lazy_greedy(const KnapsackInstance& inst);

// Same scan, but keep going after a rejection and take anything that fits.
GreedyResult very_greedy(const KnapsackInstance& inst);

}  // namespace qkp
