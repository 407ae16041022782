#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qkp/instance.hpp"
#include "qkp/random.hpp"

namespace qkp {

enum class DistributionKind {
  Strong,          // strongly correlated: w ~ U{1..1000}, v = w + 100
  InvStrong,       // inverse strongly correlated: v ~ U{1..1000}, w = v + U{98..102}
  Profit,          // profit ceiling: w ~ U{1..1000}, v = 3 * ceil(w/3)
  StrongSpanner,   // spanner over 20 strongly correlated base items
  ProfitSpanner,   // spanner over 20 profit-ceiling base items
};

const std::vector<DistributionKind>& all_distributions();
std::string distribution_name(DistributionKind kind);
// Parses the CLI spellings (strong, inv-strong, profit, strong-spanner,
// profit-spanner); throws std::invalid_argument otherwise.
DistributionKind distribution_from_name(const std::string& name);

struct GeneratorConfig {
  DistributionKind kind = DistributionKind::Strong;
  int n_items = 10;
  std::uint64_t seed = 0;
  // InvStrong weight offset defaults to the full integer range {98..102};
  // set this to restrict it to the two endpoints {98, 102}.
  bool inv_strong_endpoints_only = false;
};

// One instance from an explicit stream. Draw order is fixed: per-item value
// and weight draws first (spanner kinds draw their 20 base items, then an
// index and a multiplier per item), then the capacity fraction
// alpha ~ U{25..75}, with capacity = ceil(alpha * total_weight / 100).
KnapsackInstance sample_instance(const GeneratorConfig& cfg, RandomStream& stream);

// count instances; instance i is drawn from substream_seed(cfg.seed, i), so a
// corpus can be produced in parallel and merged by index.
std::vector<KnapsackInstance> sample_corpus(const GeneratorConfig& cfg, int count);

}  // namespace qkp
