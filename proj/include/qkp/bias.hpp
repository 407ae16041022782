#pragma once

#include <string>
#include <vector>

#include "qkp/instance.hpp"

namespace qkp {

enum class BiasKind { Constant, LazyGreedy, Logistic };

std::string bias_kind_name(BiasKind kind);
BiasKind bias_kind_from_name(const std::string& name);  // constant | lg | logistic

// Per-item selection probabilities p_i in [0,1] used to prepare product
// states. For the logistic kind the curve parameters are kept alongside.
struct BiasVector {
  std::vector<double> p;
  BiasKind kind = BiasKind::Constant;
  double steepness = 0.0;    // logistic k
  double r_star = 0.0;       // logistic inflection ratio (the greedy stop ratio)
  double c_shift = 0.0;      // logistic C = total_weight / capacity - 1
};

// True when every item fits at once (total weight <= capacity); the greedy
// stop ratio does not exist and the bias models below refuse such instances
// by throwing TrivialInstance.
bool is_trivial(const KnapsackInstance& inst);

// p_i = capacity / total_weight for all i, so the expected packed weight of
// the product distribution is exactly the capacity.
BiasVector constant_bias(const KnapsackInstance& inst);

// p_i = 1 for ratios strictly above the greedy stop ratio, else 0; the
// comparison is exact (cross-multiplied), not floating point.
BiasVector lazy_greedy_bias(const KnapsackInstance& inst);

// p_i = 1 / (1 + C * exp(-k (r_i - r*))) with r* the greedy stop ratio and
// C = total_weight / capacity - 1. Monotone in r_i; k -> 0 recovers the
// constant model, k -> inf the lazy greedy one. Requires k > 0.
BiasVector logistic_bias(const KnapsackInstance& inst, double k);

}  // namespace qkp
