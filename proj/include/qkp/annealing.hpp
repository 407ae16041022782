#pragma once

#include <vector>

#include "qkp/instance.hpp"
#include "qkp/random.hpp"

namespace qkp {

struct AnnealConfig {
  int steps = 10;
  double temperature = 1000.0;
  // Temperature selection protocol: runs_per_temperature runs at each sweep
  // temperature, best mean wins (ties to the lower temperature), then one
  // fresh run at the winner produces the reported value.
  std::vector<double> temperature_sweep = default_temperature_sweep();
  int runs_per_temperature = 10;

  static std::vector<double> default_temperature_sweep();  // 100, 200, ..., 2000
};

// Metropolis walk over feasible assignments. A step picks a uniformly random
// single-bit flip among those staying within capacity (removals always
// qualify), accepts improvements outright and worsenings with probability
// exp(delta / T). Returns the best value seen along the walk. The start must
// be feasible.
std::int64_t simulated_annealing(const KnapsackInstance& inst, const AnnealConfig& cfg,
                                 const Bitstring& start, RandomStream& stream);

// Global variant: a step flips every bit independently with probability 1/n
// and may leave the feasible region; infeasible assignments score 0. Accepts
// by the same Metropolis rule on the scores.
std::int64_t global_simulated_annealing(const KnapsackInstance& inst, const AnnealConfig& cfg,
                                        const Bitstring& start, RandomStream& stream);

// Full protocols: warm start from lazy greedy, temperature sweep, final run.
std::int64_t sa_protocol(const KnapsackInstance& inst, const AnnealConfig& cfg,
                         RandomStream& stream);
std::int64_t gsa_protocol(const KnapsackInstance& inst, const AnnealConfig& cfg,
                          RandomStream& stream);

}  // namespace qkp
