#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qkp {

// 0/1 knapsack instance. values/weights are positive and sized n.
struct KnapsackInstance {
  int n = 0;
  std::vector<std::int64_t> values;
  std::vector<std::int64_t> weights;
  std::int64_t capacity = 0;

  std::int64_t total_weight() const;
  // Throws std::invalid_argument on size mismatch or non-positive entries.
  void validate() const;
};

// Assignment x_i in {0,1}, one bit per item.
struct Bitstring {
  std::vector<std::uint8_t> bits;

  int size() const { return static_cast<int>(bits.size()); }
  bool operator==(const Bitstring& other) const = default;
};

// bit i of the mask is x_i
std::uint32_t to_mask(const Bitstring& x);
Bitstring from_mask(std::uint32_t mask, int n);

// Lexicographic order on (x_0, x_1, ..., x_{n-1}).
bool lex_less(const Bitstring& a, const Bitstring& b);

// Exact value/weight ratio kept as a pair; comparisons cross-multiply so
// equal ratios with different representations compare equal.
struct Ratio {
  std::int64_t num = 0;  // value
  std::int64_t den = 1;  // weight, > 0

  double as_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

bool ratio_less(const Ratio& a, const Ratio& b);
bool ratio_equal(const Ratio& a, const Ratio& b);

struct RatioProfile {
  std::vector<Ratio> ratios;  // indexed by item
  std::vector<int> order;     // item indices, descending by ratio, ties by index
};

std::int64_t packed_weight(const KnapsackInstance& inst, const Bitstring& x);
bool is_feasible(const KnapsackInstance& inst, const Bitstring& x);
// Sum of selected values when feasible, 0 otherwise.
std::int64_t objective_value(const KnapsackInstance& inst, const Bitstring& x);
std::int64_t objective_value(const KnapsackInstance& inst, std::uint32_t mask);

RatioProfile ratios(const KnapsackInstance& inst);

// JSON object {"n": ..., "values": [...], "weights": [...], "capacity": ...}.
KnapsackInstance instance_from_json(const std::string& text);
std::string instance_to_json(const KnapsackInstance& inst);

// Corpora are newline-delimited JSON, one instance per line.
std::vector<KnapsackInstance> load_corpus(std::istream& in);
void save_corpus(std::ostream& out, const std::vector<KnapsackInstance>& corpus);
std::vector<KnapsackInstance> load_corpus_file(const std::string& path);
void save_corpus_file(const std::string& path, const std::vector<KnapsackInstance>& corpus);

}  // namespace qkp
