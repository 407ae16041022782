#include "qkp/generators.hpp"

#include <numeric>
#include <stdexcept>

namespace qkp {

const std::vector<DistributionKind>& all_distributions() {
  static const std::vector<DistributionKind> kinds = {
      DistributionKind::Strong, DistributionKind::InvStrong, DistributionKind::Profit,
      DistributionKind::StrongSpanner, DistributionKind::ProfitSpanner};
  return kinds;
}

std::string distribution_name(DistributionKind kind) {
  switch (kind) {
    case DistributionKind::Strong: return "strong";
    case DistributionKind::InvStrong: return "inv-strong";
    case DistributionKind::Profit: return "profit";
    case DistributionKind::StrongSpanner: return "strong-spanner";
    case DistributionKind::ProfitSpanner: return "profit-spanner";
  }
  throw std::invalid_argument("unknown distribution kind");
}

DistributionKind distribution_from_name(const std::string& name) {
  for (auto kind : all_distributions())
    if (distribution_name(kind) == name) return kind;
  throw std::invalid_argument("unknown distribution: " + name);
}

namespace {

struct Item {
  std::int64_t value;
  std::int64_t weight;
};

Item draw_strong(RandomStream& stream) {
  const std::int64_t w = stream.uniform_int(1, 1000);
  return {w + 100, w};
}

Item draw_inv_strong(const GeneratorConfig& cfg, RandomStream& stream) {
  const std::int64_t v = stream.uniform_int(1, 1000);
  std::int64_t offset;
  if (cfg.inv_strong_endpoints_only)
    offset = stream.uniform_int(0, 1) == 0 ? 98 : 102;
  else
    offset = stream.uniform_int(98, 102);
  return {v, v + offset};
}

Item draw_profit(RandomStream& stream) {
  const std::int64_t w = stream.uniform_int(1, 1000);
  return {3 * ((w + 2) / 3), w};
}

constexpr int kSpannerBaseSize = 20;

Item scale_span(Item base) {
  // base items shrink by 2/3 (rounded up) so small multiples span the range
  return {(2 * base.value + 2) / 3, (2 * base.weight + 2) / 3};
}

}  // namespace

KnapsackInstance sample_instance(const GeneratorConfig& cfg, RandomStream& stream) {
  if (cfg.n_items <= 0) throw std::invalid_argument("sample_instance: n_items must be positive");
  KnapsackInstance inst;
  inst.n = cfg.n_items;
  inst.values.reserve(cfg.n_items);
  inst.weights.reserve(cfg.n_items);

  auto push = [&](Item it) {
    inst.values.push_back(it.value);
    inst.weights.push_back(it.weight);
  };

  switch (cfg.kind) {
    case DistributionKind::Strong:
      for (int i = 0; i < cfg.n_items; ++i) push(draw_strong(stream));
      break;
    case DistributionKind::InvStrong:
      for (int i = 0; i < cfg.n_items; ++i) push(draw_inv_strong(cfg, stream));
      break;
    case DistributionKind::Profit:
      for (int i = 0; i < cfg.n_items; ++i) push(draw_profit(stream));
      break;
    case DistributionKind::StrongSpanner:
    case DistributionKind::ProfitSpanner: {
      Item span[kSpannerBaseSize];
      for (auto& base : span) {
        const Item raw = cfg.kind == DistributionKind::StrongSpanner ? draw_strong(stream)
                                                                     : draw_profit(stream);
        base = scale_span(raw);
      }
      for (int i = 0; i < cfg.n_items; ++i) {
        const auto idx = static_cast<int>(stream.uniform_u64(kSpannerBaseSize));
        const std::int64_t s = stream.uniform_int(1, 3);
        push({s * span[idx].value, s * span[idx].weight});
      }
      break;
    }
  }

  const std::int64_t total = std::accumulate(inst.weights.begin(), inst.weights.end(),
                                             std::int64_t{0});
  const std::int64_t alpha = stream.uniform_int(25, 75);
  inst.capacity = (alpha * total + 99) / 100;  // ceil(alpha * total / 100)
  inst.validate();
  return inst;
}

std::vector<KnapsackInstance> sample_corpus(const GeneratorConfig& cfg, int count) {
  if (count < 0) throw std::invalid_argument("sample_corpus: negative count");
  std::vector<KnapsackInstance> corpus;
  corpus.reserve(count);
  for (int i = 0; i < count; ++i) {
    RandomStream stream(cfg.seed, static_cast<std::uint64_t>(i));
    corpus.push_back(sample_instance(cfg, stream));
  }
  return corpus;
}

}  // namespace qkp
