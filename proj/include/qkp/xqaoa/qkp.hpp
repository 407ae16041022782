#pragma once

#include <string>

#include "qkp/bias.hpp"
#include "qkp/greedy.hpp"
#include "qkp/qsim/state.hpp"
#include "qkp/xqaoa/mixers.hpp"

namespace qkp::xqaoa {

enum class MixerKind { Hourglass, CopulaRing };

std::string mixer_name(MixerKind kind);                    // hourglass | copula
MixerKind mixer_from_name(const std::string& name);

// Depth-1 circuit: logistic biased product state at steepness k, a cost
// phase at gamma, then the mixer at beta. theta only matters for the ring.
struct CircuitParams {
  MixerKind mixer = MixerKind::Hourglass;
  double beta = 0.0;
  double gamma = 0.0;
  double k = 15.0;
  double theta = 0.0;
};

// Builds the circuit state. The ring couples neighbors in descending ratio
// order. Throws TrivialInstance when every item fits at once and
// UnsupportedShape for an odd-n ring request.
qsim::StateVector qkp_state(const KnapsackInstance& inst, const CircuitParams& params);

struct RunResult {
  Bitstring x;
  std::int64_t value = 0;
};

// Samples `shots` assignments and keeps the best by objective value (first
// drawn wins ties). The overload without a shot count uses shots = inst.n.
RunResult qkp_run(const KnapsackInstance& inst, const CircuitParams& params, int shots,
                  RandomStream& stream);
RunResult qkp_run(const KnapsackInstance& inst, const CircuitParams& params,
                  RandomStream& stream);

// Exact distribution summaries for a best-of-N readout. Probabilities are
// computed from the full statevector, not sampled.
struct QkpMetrics {
  double expected_single = 0.0;  // E[f] of one shot
  double p_opt_single = 0.0;     // P(one shot hits the optimum)
  double p_opt_best = 0.0;       // P(best of N hits the optimum)
  double p_beat_lg = 0.0;        // P(best of N strictly beats lazy greedy)
  double p_beat_vg = 0.0;
  double expected_best = 0.0;    // E[max of N shots]
  double approx_ratio = 0.0;     // expected_best / optimum
};

// Precomputed per-instance tables shared by the circuit evaluators.
struct InstanceContext {
  KnapsackInstance inst;
  std::vector<std::int64_t> f;        // objective per basis mask
  std::vector<double> f_double;
  std::vector<std::uint32_t> value_order;  // masks sorted by ascending objective
  std::int64_t opt = 0;
  std::int64_t lg_value = 0;
  std::int64_t vg_value = 0;
  RatioProfile prof;

  static InstanceContext make(const KnapsackInstance& inst);
};

// Best-of-N summary of an explicit measurement distribution over masks.
QkpMetrics metrics_from_distribution(std::span<const double> probs, const InstanceContext& ctx,
                                     int shots);

QkpMetrics qkp_exact_metrics(const KnapsackInstance& inst, const CircuitParams& params,
                             int shots);

// Reusable evaluator for one (instance, mixer, k, theta) cell. Grid sweeps
// cache the cost-phased state per gamma and the mixer gates per beta.
class CircuitEvaluator {
public:
  CircuitEvaluator(const InstanceContext& ctx, MixerKind mixer, double k, double theta);

  // Mixer gates at a fixed beta, reusable across gamma columns.
  struct MixerPlan {
    double beta = 0.0;
    std::vector<qsim::Gate1Q> g1;  // hourglass: one per qubit
    std::vector<qsim::Gate2Q> g2;  // ring: one per pair, application order
  };

  MixerPlan mixer_plan(double beta) const;
  void prepare_gamma(double gamma);  // cache biased state with cost phase applied
  double eval_plan(const MixerPlan& plan);  // exact E[f] from the cached state
  double eval_plan_best(const MixerPlan& plan, int shots);  // exact E[best of shots]
  double eval_plan_sampled(const MixerPlan& plan, int shots, RandomStream& stream);

  double expected_objective(double beta, double gamma);
  double expected_best_objective(double beta, double gamma, int shots);
  double sampled_best(double beta, double gamma, int shots, RandomStream& stream);
  qsim::StateVector state_at(double beta, double gamma);
  QkpMetrics metrics_at(double beta, double gamma, int shots);

  const InstanceContext& ctx() const { return *ctx_; }
  const std::vector<double>& bias() const { return bias_.p; }

private:
  const InstanceContext* ctx_;
  MixerKind mixer_;
  double theta_;
  BiasVector bias_;
  std::vector<std::pair<int, int>> pairs_;  // ring pairs in application order
  qsim::StateVector psi0_, psi_gamma_, work_;
  std::vector<double> probs_;  // scratch for distribution-based objectives

  void apply_plan_to_work(const MixerPlan& plan);
};

}  // namespace qkp::xqaoa
