#include "qkp/annealing.hpp"

#include <cmath>
#include <stdexcept>

#include "qkp/greedy.hpp"

namespace qkp {

std::vector<double> AnnealConfig::default_temperature_sweep() {
  std::vector<double> sweep;
  for (int t = 100; t <= 2000; t += 100) sweep.push_back(static_cast<double>(t));
  return sweep;
}

namespace {

bool metropolis_accept(std::int64_t delta, double temperature, RandomStream& stream) {
  if (delta >= 0) return true;
  return stream.next_double() < std::exp(static_cast<double>(delta) / temperature);
}

}  // namespace

std::int64_t simulated_annealing(const KnapsackInstance& inst, const AnnealConfig& cfg,
                                 const Bitstring& start, RandomStream& stream) {
  inst.validate();
  if (!is_feasible(inst, start))
    throw std::invalid_argument("simulated_annealing: start is infeasible");

  Bitstring x = start;
  std::int64_t weight = packed_weight(inst, x);
  std::int64_t value = objective_value(inst, x);
  std::int64_t best = value;
  std::vector<int> moves;
  moves.reserve(inst.n);

  for (int step = 0; step < cfg.steps; ++step) {
    moves.clear();
    for (int i = 0; i < inst.n; ++i) {
      if (x.bits[i] || weight + inst.weights[i] <= inst.capacity) moves.push_back(i);
    }
    if (moves.empty()) continue;
    const int i = moves[stream.uniform_u64(moves.size())];
    const std::int64_t delta = x.bits[i] ? -inst.values[i] : inst.values[i];
    if (metropolis_accept(delta, cfg.temperature, stream)) {
      if (x.bits[i]) {
        x.bits[i] = 0;
        weight -= inst.weights[i];
      } else {
        x.bits[i] = 1;
        weight += inst.weights[i];
      }
      value += delta;
      if (value > best) best = value;
    }
  }
  return best;
}

std::int64_t global_simulated_annealing(const KnapsackInstance& inst, const AnnealConfig& cfg,
                                        const Bitstring& start, RandomStream& stream) {
  inst.validate();
  if (!is_feasible(inst, start))
    throw std::invalid_argument("global_simulated_annealing: start is infeasible");

  Bitstring x = start;
  std::int64_t score = objective_value(inst, x);
  std::int64_t best = score;
  const double flip_prob = 1.0 / static_cast<double>(inst.n);

  for (int step = 0; step < cfg.steps; ++step) {
    Bitstring proposal = x;
    for (int i = 0; i < inst.n; ++i)
      if (stream.next_double() < flip_prob) proposal.bits[i] ^= 1;
    const std::int64_t proposal_score = objective_value(inst, proposal);
    if (metropolis_accept(proposal_score - score, cfg.temperature, stream)) {
      x = proposal;
      score = proposal_score;
      if (score > best) best = score;
    }
  }
  return best;
}

namespace {

using Walk = std::int64_t (*)(const KnapsackInstance&, const AnnealConfig&, const Bitstring&,
                              RandomStream&);

std::int64_t tuned_protocol(const KnapsackInstance& inst, const AnnealConfig& cfg,
                            RandomStream& stream, Walk walk) {
  if (cfg.temperature_sweep.empty())
    throw std::invalid_argument("annealing protocol: empty temperature sweep");
  const Bitstring warm = lazy_greedy(inst).x;

  double best_mean = -1.0;
  double best_temperature = cfg.temperature_sweep.front();
  for (double temperature : cfg.temperature_sweep) {
    AnnealConfig run_cfg = cfg;
    run_cfg.temperature = temperature;
    double total = 0.0;
    for (int run = 0; run < cfg.runs_per_temperature; ++run)
      total += static_cast<double>(walk(inst, run_cfg, warm, stream));
    const double mean = total / cfg.runs_per_temperature;
    if (mean > best_mean) {
      best_mean = mean;
      best_temperature = temperature;
    }
  }

  AnnealConfig final_cfg = cfg;
  final_cfg.temperature = best_temperature;
  return walk(inst, final_cfg, warm, stream);
}

}  // namespace

std::int64_t sa_protocol(const KnapsackInstance& inst, const AnnealConfig& cfg,
                         RandomStream& stream) {
  return tuned_protocol(inst, cfg, stream, &simulated_annealing);
}

std::int64_t gsa_protocol(const KnapsackInstance& inst, const AnnealConfig& cfg,
                          RandomStream& stream) {
  return tuned_protocol(inst, cfg, stream, &global_simulated_annealing);
}

}  // namespace qkp
