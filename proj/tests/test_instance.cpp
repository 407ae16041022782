#include <doctest.h>

#include <qkp/instance.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>

using namespace qkp;

namespace {

KnapsackInstance glover() {
  // Two items, only one fits: classic greedy trap.
  return KnapsackInstance{2, {2, 100}, {1, 51}, 51};
}

Bitstring bits(std::initializer_list<std::uint8_t> b) { return Bitstring{b}; }

}  // namespace

TEST_CASE("validate accepts well formed instances") {
  CHECK_NOTHROW(glover().validate());
}

TEST_CASE("validate rejects malformed instances") {
  KnapsackInstance bad = glover();
  bad.values.pop_back();
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = glover();
  bad.weights[0] = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = glover();
  bad.values[1] = -1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = glover();
  bad.capacity = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = glover();
  bad.n = 3;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("mask and bitstring round trip, bit i is item i") {
  Bitstring x = bits({1, 0, 1, 1});
  std::uint32_t m = to_mask(x);
  CHECK(m == 0b1101u);
  CHECK(from_mask(m, 4) == x);
  for (std::uint32_t mask = 0; mask < 16; ++mask)
    CHECK(to_mask(from_mask(mask, 4)) == mask);
}

TEST_CASE("lex_less orders bitstrings by leading entries") {
  CHECK(lex_less(bits({0, 1}), bits({1, 0})));
  CHECK_FALSE(lex_less(bits({1, 0}), bits({0, 1})));
  CHECK_FALSE(lex_less(bits({1, 1}), bits({1, 1})));
  CHECK(lex_less(bits({1, 0, 0}), bits({1, 0, 1})));
}

TEST_CASE("exact ratio comparison avoids floating point") {
  CHECK(ratio_equal(Ratio{2, 4}, Ratio{3, 6}));
  CHECK_FALSE(ratio_less(Ratio{2, 4}, Ratio{3, 6}));
  CHECK_FALSE(ratio_less(Ratio{3, 6}, Ratio{2, 4}));

  // Distinguishable exactly, but not after double division.
  Ratio a{1000000000000001, 1000000000000000};
  Ratio b{1, 1};
  CHECK(static_cast<double>(a.num) / static_cast<double>(a.den) == a.as_double());
  CHECK(ratio_less(b, a));
  CHECK_FALSE(ratio_less(a, b));
  CHECK_FALSE(ratio_equal(a, b));
}

TEST_CASE("ratio profile sorts descending with stable ties") {
  KnapsackInstance inst{4, {6, 3, 4, 8}, {3, 1, 2, 4}, 5};
  RatioProfile prof = ratios(inst);
  // r = 2, 3, 2, 2: item 1 first, then items 0,2,3 in original order.
  REQUIRE(prof.order.size() == 4);
  CHECK(prof.order[0] == 1);
  CHECK(prof.order[1] == 0);
  CHECK(prof.order[2] == 2);
  CHECK(prof.order[3] == 3);
  CHECK(prof.ratios[2].num == 4);
  CHECK(prof.ratios[2].den == 2);
}

TEST_CASE("objective zeroes infeasible selections") {
  KnapsackInstance inst = glover();
  CHECK(objective_value(inst, bits({1, 0})) == 2);
  CHECK(objective_value(inst, bits({0, 1})) == 100);
  CHECK(objective_value(inst, bits({1, 1})) == 0);
  CHECK(objective_value(inst, std::uint32_t{0b11}) == 0);
  CHECK(objective_value(inst, std::uint32_t{0b10}) == 100);
  CHECK(packed_weight(inst, bits({1, 1})) == 52);
  CHECK_FALSE(is_feasible(inst, bits({1, 1})));
  CHECK(is_feasible(inst, bits({0, 1})));
}

TEST_CASE("objective agrees with a direct loop") {
  KnapsackInstance inst{5, {35, 10, 90, 22, 70}, {4, 2, 7, 1, 5}, 11};
  for (std::uint32_t m = 0; m < 32; ++m) {
    std::int64_t v = 0, w = 0;
    for (int i = 0; i < 5; ++i)
      if (m >> i & 1) {
        v += inst.values[i];
        w += inst.weights[i];
      }
    std::int64_t expect = w <= inst.capacity ? v : 0;
    CHECK(objective_value(inst, m) == expect);
    CHECK(objective_value(inst, from_mask(m, 5)) == expect);
  }
}

TEST_CASE("json round trip preserves the instance") {
  KnapsackInstance inst{3, {15, 2, 325}, {10, 20, 30}, 42};
  std::string j = instance_to_json(inst);
  KnapsackInstance back = instance_from_json(j);
  CHECK(back.n == inst.n);
  CHECK(back.values == inst.values);
  CHECK(back.weights == inst.weights);
  CHECK(back.capacity == inst.capacity);
}

TEST_CASE("corpus ndjson round trip") {
  std::vector<KnapsackInstance> corpus{
      glover(),
      {3, {1, 2, 3}, {1, 2, 3}, 4},
  };
  auto path = std::filesystem::temp_directory_path() / "qkp_corpus_test.ndjson";
  save_corpus_file(path.string(), corpus);
  auto back = load_corpus_file(path.string());
  REQUIRE(back.size() == 2);
  CHECK(back[0].n == 2);
  CHECK(back[0].capacity == 51);
  CHECK(back[1].values == corpus[1].values);
  std::filesystem::remove(path);

  CHECK_THROWS_AS(load_corpus_file("/nonexistent/qkp.ndjson"), std::runtime_error);
}
