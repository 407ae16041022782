#include <doctest.h>

#include <qkp/generators.hpp>
#include <qkp/instance.hpp>
#include <qkp/random.hpp>

#include <set>
#include <stdexcept>

using namespace qkp;

namespace {

GeneratorConfig make_cfg(DistributionKind kind, std::uint64_t seed = 17) {
  GeneratorConfig cfg;
  cfg.kind = kind;
  cfg.n_items = 10;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("distribution names round trip") {
  for (DistributionKind kind : all_distributions()) {
    CHECK(distribution_from_name(distribution_name(kind)) == kind);
  }
  CHECK(distribution_name(DistributionKind::Strong) == "strong");
  CHECK(distribution_name(DistributionKind::InvStrong) == "inv-strong");
  CHECK(distribution_name(DistributionKind::Profit) == "profit");
  CHECK(distribution_name(DistributionKind::StrongSpanner) == "strong-spanner");
  CHECK(distribution_name(DistributionKind::ProfitSpanner) == "profit-spanner");
  CHECK_THROWS_AS(distribution_from_name("bogus"), std::invalid_argument);
}

TEST_CASE("corpus generation is deterministic and indexed by substream") {
  auto cfg = make_cfg(DistributionKind::Strong);
  auto a = sample_corpus(cfg, 5);
  auto b = sample_corpus(cfg, 5);
  REQUIRE(a.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(a[i].values == b[i].values);
    CHECK(a[i].weights == b[i].weights);
    CHECK(a[i].capacity == b[i].capacity);
  }

  // Instance i depends only on (seed, i): a longer corpus shares its prefix.
  auto longer = sample_corpus(cfg, 8);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(longer[i].weights == a[i].weights);
    CHECK(longer[i].capacity == a[i].capacity);
  }

  // Drawing instance 3 in isolation reproduces corpus entry 3.
  RandomStream rng(cfg.seed, 3);
  auto solo = sample_instance(cfg, rng);
  CHECK(solo.weights == a[3].weights);
  CHECK(solo.values == a[3].values);
  CHECK(solo.capacity == a[3].capacity);
}

TEST_CASE("strongly correlated structure") {
  auto corpus = sample_corpus(make_cfg(DistributionKind::Strong), 40);
  for (const auto& inst : corpus) {
    inst.validate();
    REQUIRE(inst.n == 10);
    for (int i = 0; i < inst.n; ++i) {
      CHECK(inst.weights[i] >= 1);
      CHECK(inst.weights[i] <= 1000);
      CHECK(inst.values[i] == inst.weights[i] + 100);
    }
  }
}

TEST_CASE("inverse strongly correlated structure") {
  auto cfg = make_cfg(DistributionKind::InvStrong);
  auto corpus = sample_corpus(cfg, 40);
  std::set<std::int64_t> offsets;
  for (const auto& inst : corpus) {
    inst.validate();
    for (int i = 0; i < inst.n; ++i) {
      CHECK(inst.values[i] >= 1);
      CHECK(inst.values[i] <= 1000);
      std::int64_t off = inst.weights[i] - inst.values[i];
      CHECK(off >= 98);
      CHECK(off <= 102);
      offsets.insert(off);
    }
  }
  // Interior offsets appear when the whole interval is sampled.
  CHECK(offsets.size() > 2);

  cfg.inv_strong_endpoints_only = true;
  offsets.clear();
  for (const auto& inst : sample_corpus(cfg, 40))
    for (int i = 0; i < inst.n; ++i) offsets.insert(inst.weights[i] - inst.values[i]);
  CHECK(offsets == std::set<std::int64_t>{98, 102});
}

TEST_CASE("profit ceiling structure") {
  auto corpus = sample_corpus(make_cfg(DistributionKind::Profit), 40);
  for (const auto& inst : corpus) {
    inst.validate();
    for (int i = 0; i < inst.n; ++i) {
      CHECK(inst.weights[i] >= 1);
      CHECK(inst.weights[i] <= 1000);
      CHECK(inst.values[i] == 3 * ((inst.weights[i] + 2) / 3));
    }
  }
}

TEST_CASE("spanner items are small multiples of a compact base set") {
  for (auto kind : {DistributionKind::StrongSpanner, DistributionKind::ProfitSpanner}) {
    auto corpus = sample_corpus(make_cfg(kind), 20);
    for (const auto& inst : corpus) {
      inst.validate();
      REQUIRE(inst.n == 10);
      for (int i = 0; i < inst.n; ++i) {
        CHECK(inst.weights[i] >= 1);
        CHECK(inst.values[i] >= 1);
        // Scaled base weight <= ceil(2*1000/3) = 667, base value <= ceil(2*1100/3) = 734,
        // multiplier <= 3.
        CHECK(inst.weights[i] <= 3 * 667);
        CHECK(inst.values[i] <= 3 * 734);
      }
    }
  }
}

TEST_CASE("capacity is a 25 to 75 percent fraction of total weight") {
  for (DistributionKind kind : all_distributions()) {
    auto corpus = sample_corpus(make_cfg(kind, 23), 40);
    for (const auto& inst : corpus) {
      std::int64_t total = inst.total_weight();
      // capacity = ceil(alpha * total / 100), alpha in {25..75}.
      CHECK(inst.capacity >= (25 * total + 99) / 100);
      CHECK(inst.capacity <= (75 * total + 99) / 100);
      CHECK(inst.capacity >= 1);
    }
  }
}

TEST_CASE("different kinds give different corpora for the same seed") {
  auto strong = sample_corpus(make_cfg(DistributionKind::Strong), 3);
  auto profit = sample_corpus(make_cfg(DistributionKind::Profit), 3);
  bool any_diff = false;
  for (std::size_t i = 0; i < 3; ++i)
    if (strong[i].values != profit[i].values) any_diff = true;
  CHECK(any_diff);
}

TEST_CASE("requested item count is honored") {
  auto cfg = make_cfg(DistributionKind::Strong);
  cfg.n_items = 6;
  auto corpus = sample_corpus(cfg, 2);
  for (const auto& inst : corpus) CHECK(inst.n == 6);
}
