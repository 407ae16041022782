#include "qkp/bias.hpp"

#include <cmath>
#include <stdexcept>

#include "qkp/errors.hpp"
#include "qkp/greedy.hpp"

namespace qkp {

std::string bias_kind_name(BiasKind kind) {
  switch (kind) {
    case BiasKind::Constant: return "constant";
    case BiasKind::LazyGreedy: return "lg";
    case BiasKind::Logistic: return "logistic";
  }
  throw std::invalid_argument("unknown bias kind");
}

BiasKind bias_kind_from_name(const std::string& name) {
  if (name == "constant") return BiasKind::Constant;
  if (name == "lg") return BiasKind::LazyGreedy;
  if (name == "logistic") return BiasKind::Logistic;
  throw std::invalid_argument("unknown bias kind: " + name);
}

bool is_trivial(const KnapsackInstance& inst) {
  inst.validate();
  return inst.total_weight() <= inst.capacity;
}

namespace {

Ratio stop_ratio_or_throw(const KnapsackInstance& inst) {
  if (is_trivial(inst))
    throw TrivialInstance("all items fit at once; no stop ratio exists");
  // Total weight exceeds capacity, so the greedy scan must reject something.
  return *lazy_greedy(inst).r_stop;
}

}  // namespace

BiasVector constant_bias(const KnapsackInstance& inst) {
  if (is_trivial(inst)) throw TrivialInstance("all items fit at once");
  BiasVector bias;
  bias.kind = BiasKind::Constant;
  const double p = static_cast<double>(inst.capacity) / static_cast<double>(inst.total_weight());
  bias.p.assign(inst.n, p);
  return bias;
}

BiasVector lazy_greedy_bias(const KnapsackInstance& inst) {
  const Ratio r_stop = stop_ratio_or_throw(inst);
  const RatioProfile prof = ratios(inst);
  BiasVector bias;
  bias.kind = BiasKind::LazyGreedy;
  bias.r_star = r_stop.as_double();
  bias.p.resize(inst.n);
  for (int i = 0; i < inst.n; ++i)
    bias.p[i] = ratio_less(r_stop, prof.ratios[i]) ? 1.0 : 0.0;
  return bias;
}

BiasVector logistic_bias(const KnapsackInstance& inst, double k) {
  if (!(k > 0.0)) throw std::invalid_argument("logistic_bias: k must be positive");
  const Ratio r_stop = stop_ratio_or_throw(inst);
  const RatioProfile prof = ratios(inst);
  BiasVector bias;
  bias.kind = BiasKind::Logistic;
  bias.steepness = k;
  bias.r_star = r_stop.as_double();
  bias.c_shift = static_cast<double>(inst.total_weight()) / static_cast<double>(inst.capacity)
                 - 1.0;
  bias.p.resize(inst.n);
  for (int i = 0; i < inst.n; ++i) {
    // C > 0, so exp overflow to +inf gives p = 0 and underflow gives p = 1;
    // ratios far from r* saturate cleanly instead of producing NaNs.
    const double r = prof.ratios[i].as_double();
    bias.p[i] = 1.0 / (1.0 + bias.c_shift * std::exp(-k * (r - bias.r_star)));
  }
  return bias;
}

}  // namespace qkp
