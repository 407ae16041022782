#include "qkp/instance.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qkp {

std::int64_t KnapsackInstance::total_weight() const {
  return std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
}

void KnapsackInstance::validate() const {
  if (n <= 0) throw std::invalid_argument("instance: n must be positive");
  if (static_cast<int>(values.size()) != n || static_cast<int>(weights.size()) != n)
    throw std::invalid_argument("instance: values/weights must have length n");
  for (int i = 0; i < n; ++i) {
    if (values[i] <= 0) throw std::invalid_argument("instance: values must be positive");
    if (weights[i] <= 0) throw std::invalid_argument("instance: weights must be positive");
  }
  if (capacity <= 0) throw std::invalid_argument("instance: capacity must be positive");
}

std::uint32_t to_mask(const Bitstring& x) {
  if (x.size() > 32) throw std::invalid_argument("to_mask: more than 32 items");
  std::uint32_t mask = 0;
  for (int i = 0; i < x.size(); ++i)
    if (x.bits[i]) mask |= (1u << i);
  return mask;
}

Bitstring from_mask(std::uint32_t mask, int n) {
  Bitstring x;
  x.bits.resize(n);
  for (int i = 0; i < n; ++i) x.bits[i] = (mask >> i) & 1u;
  return x;
}

bool lex_less(const Bitstring& a, const Bitstring& b) {
  return std::lexicographical_compare(a.bits.begin(), a.bits.end(), b.bits.begin(),
                                      b.bits.end());
}

bool ratio_less(const Ratio& a, const Ratio& b) { return a.num * b.den < b.num * a.den; }
bool ratio_equal(const Ratio& a, const Ratio& b) { return a.num * b.den == b.num * a.den; }

std::int64_t packed_weight(const KnapsackInstance& inst, const Bitstring& x) {
  if (x.size() != inst.n) throw std::invalid_argument("bitstring length != n");
  std::int64_t w = 0;
  for (int i = 0; i < inst.n; ++i)
    if (x.bits[i]) w += inst.weights[i];
  return w;
}

bool is_feasible(const KnapsackInstance& inst, const Bitstring& x) {
  return packed_weight(inst, x) <= inst.capacity;
}

std::int64_t objective_value(const KnapsackInstance& inst, const Bitstring& x) {
  if (x.size() != inst.n) throw std::invalid_argument("bitstring length != n");
  std::int64_t w = 0, v = 0;
  for (int i = 0; i < inst.n; ++i) {
    if (x.bits[i]) {
      w += inst.weights[i];
      v += inst.values[i];
    }
  }
  return w <= inst.capacity ? v : 0;
}

std::int64_t objective_value(const KnapsackInstance& inst, std::uint32_t mask) {
  std::int64_t w = 0, v = 0;
  for (int i = 0; i < inst.n; ++i) {
    if ((mask >> i) & 1u) {
      w += inst.weights[i];
      v += inst.values[i];
    }
  }
  return w <= inst.capacity ? v : 0;
}

RatioProfile ratios(const KnapsackInstance& inst) {
  inst.validate();
  RatioProfile prof;
  prof.ratios.reserve(inst.n);
  for (int i = 0; i < inst.n; ++i) prof.ratios.push_back({inst.values[i], inst.weights[i]});
  prof.order.resize(inst.n);
  std::iota(prof.order.begin(), prof.order.end(), 0);
  std::stable_sort(prof.order.begin(), prof.order.end(), [&](int a, int b) {
    return ratio_less(prof.ratios[b], prof.ratios[a]);
  });
  return prof;
}

KnapsackInstance instance_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  KnapsackInstance inst;
  inst.n = j.at("n").get<int>();
  inst.values = j.at("values").get<std::vector<std::int64_t>>();
  inst.weights = j.at("weights").get<std::vector<std::int64_t>>();
  inst.capacity = j.at("capacity").get<std::int64_t>();
  inst.validate();
  return inst;
}

std::string instance_to_json(const KnapsackInstance& inst) {
  nlohmann::json j;
  j["n"] = inst.n;
  j["values"] = inst.values;
  j["weights"] = inst.weights;
  j["capacity"] = inst.capacity;
  return j.dump();
}

std::vector<KnapsackInstance> load_corpus(std::istream& in) {
  std::vector<KnapsackInstance> corpus;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    corpus.push_back(instance_from_json(line));
  }
  return corpus;
}

void save_corpus(std::ostream& out, const std::vector<KnapsackInstance>& corpus) {
  for (const auto& inst : corpus) out << instance_to_json(inst) << '\n';
}

std::vector<KnapsackInstance> load_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_corpus(in);
}

void save_corpus_file(const std::string& path, const std::vector<KnapsackInstance>& corpus) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  save_corpus(out, corpus);
}

}  // namespace qkp
