#include "qkp/exact.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace qkp {

OptResult brute_force_opt(const KnapsackInstance& inst) {
  inst.validate();
  if (inst.n > 30) throw std::invalid_argument("brute_force_opt: n > 30");
  const int n = inst.n;
  const std::uint64_t count = 1ull << n;

  // Gray-code walk: consecutive codes differ in one bit, so weight and value
  // update in O(1) per visited assignment.
  std::uint32_t gray = 0;
  std::int64_t w = 0, v = 0;
  std::int64_t best_value = 0;
  std::uint32_t best_mask = 0;

  auto consider = [&](std::uint32_t mask, std::int64_t weight, std::int64_t value) {
    if (weight > inst.capacity) return;
    if (value > best_value) {
      best_value = value;
      best_mask = mask;
    } else if (value == best_value) {
      const Bitstring cand = from_mask(mask, n);
      if (lex_less(cand, from_mask(best_mask, n))) best_mask = mask;
    }
  };

  consider(0, 0, 0);
  for (std::uint64_t i = 1; i < count; ++i) {
    const auto next = static_cast<std::uint32_t>(i ^ (i >> 1));
    const int bit = std::countr_zero(gray ^ next);
    if ((next >> bit) & 1u) {
      w += inst.weights[bit];
      v += inst.values[bit];
    } else {
      w -= inst.weights[bit];
      v -= inst.values[bit];
    }
    gray = next;
    consider(gray, w, v);
  }
  return {from_mask(best_mask, n), best_value};
}

OptResult dp_opt(const KnapsackInstance& inst) {
  inst.validate();
  const int n = inst.n;
  const auto c = static_cast<std::size_t>(inst.capacity);

  // best[i][w] = best value using items 0..i-1 with weight budget w
  std::vector<std::vector<std::int64_t>> best(n + 1,
                                              std::vector<std::int64_t>(c + 1, 0));
  for (int i = 1; i <= n; ++i) {
    const auto wi = static_cast<std::size_t>(inst.weights[i - 1]);
    const std::int64_t vi = inst.values[i - 1];
    for (std::size_t w = 0; w <= c; ++w) {
      std::int64_t take = -1;
      if (wi <= w) take = best[i - 1][w - wi] + vi;
      best[i][w] = std::max(best[i - 1][w], take);
    }
  }

  Bitstring x;
  x.bits.assign(n, 0);
  std::size_t w = c;
  for (int i = n; i >= 1; --i) {
    if (best[i][w] != best[i - 1][w]) {
      x.bits[i - 1] = 1;
      w -= static_cast<std::size_t>(inst.weights[i - 1]);
    }
  }
  return {x, best[n][c]};
}

}  // namespace qkp
