#include "qkp/greedy.hpp"

namespace qkp {

namespace {

GreedyResult greedy_scan(const KnapsackInstance& inst, bool continue_after_reject) {
  inst.validate();
  const RatioProfile prof = ratios(inst);
  GreedyResult res;
  res.x.bits.assign(inst.n, 0);
  std::int64_t weight = 0;
  for (int pos = 0; pos < inst.n; ++pos) {
    const int item = prof.order[pos];
    if (weight + inst.weights[item] <= inst.capacity) {
      res.x.bits[item] = 1;
      weight += inst.weights[item];
      res.value += inst.values[item];
    } else {
      if (!res.r_stop) res.r_stop = prof.ratios[item];
      if (!continue_after_reject) break;
    }
  }
  return res;
}

}  // namespace

GreedyResult lazy_greedy(const KnapsackInstance& inst) { return greedy_scan(inst, false); }

GreedyResult very_greedy(const KnapsackInstance& inst) { return greedy_scan(inst, true); }

}  // namespace qkp
