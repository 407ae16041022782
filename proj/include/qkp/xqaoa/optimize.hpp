#pragma once

#include <cstdint>
#include <vector>

#include "qkp/xqaoa/qkp.hpp"

namespace qkp::xqaoa {

// Expectation scores a cell by the exact single-shot E[f]; ExpectedBest by
// the exact E[best of `shots` measurements] (the order statistic of the
// value distribution, i.e. the quantity the benchmark reports); SampledBest
// by the best objective among `shots` simulated measurements (noisy, for
// protocol-faithful runs).
enum class ObjectiveMode { Expectation, ExpectedBest, SampledBest };

std::string objective_name(ObjectiveMode mode);  // expect | exp-best | sampled
ObjectiveMode objective_from_name(const std::string& name);

struct GridSpec {
  int n_beta = 50;   // beta_j  = pi j / n_beta,      j = 0..n_beta-1
  int n_gamma = 50;  // gamma_j = 2 pi j / n_gamma,   j = 0..n_gamma-1
};

struct ParamPoint {
  double beta = 0.0;
  double gamma = 0.0;
  double value = 0.0;
};

struct RefineSettings {
  int starts = 3;          // top grid cells fed to the simplex, >= 1
  int max_iterations = 200;
  double param_tol = 1e-7;
  double value_tol = 1e-12;
};

struct OptimizerSettings {
  GridSpec grid;
  std::vector<double> k_values = default_k_values();
  std::vector<double> theta_values = {0.0, -0.5, -1.0};
  ObjectiveMode objective = ObjectiveMode::Expectation;
  int shots = 10;
  RefineSettings refine;
  std::uint64_t sample_seed = 0;  // SampledBest draw stream

  static std::vector<double> default_k_values();  // 10, 11, ..., 24
};

// Full scan of the (beta, gamma) grid; ties resolve to the lexicographically
// smallest (beta, gamma). Deterministic for the Expectation and ExpectedBest
// objectives; for SampledBest the caller provides the stream.
ParamPoint grid_search(const InstanceContext& ctx, MixerKind mixer, double k, double theta,
                       const GridSpec& grid, ObjectiveMode mode = ObjectiveMode::Expectation,
                       int shots = 10, RandomStream* stream = nullptr);

// Local polish (Nelder-Mead) from a start point; the returned value is never
// worse than the start and parameters come back wrapped into [0, pi) x [0, 2 pi).
ParamPoint refine(const InstanceContext& ctx, MixerKind mixer, double k, double theta,
                  const ParamPoint& start, const RefineSettings& settings = {},
                  ObjectiveMode mode = ObjectiveMode::Expectation, int shots = 10,
                  RandomStream* stream = nullptr);

struct ComboResult {
  double k = 0.0;
  double theta = 0.0;
  ParamPoint point;
  QkpMetrics metrics;
};

struct OptimizeResult {
  CircuitParams params;
  double objective_value = 0.0;
  QkpMetrics metrics;
};

// Grid search plus multi-start refinement for every (k, theta) cell
// (hourglass ignores theta and runs each k once). Results are ordered by
// ascending k, then theta by distance from zero. The ring's theta = 0 cell is
// searched in the equivalent hourglass coordinate (angle 2 beta) and mapped
// back, so its optimized value matches the hourglass cell for the same k.
std::vector<ComboResult> optimize_sweep(const InstanceContext& ctx, MixerKind mixer,
                                        const OptimizerSettings& settings);

// Best cell of optimize_sweep; ties keep the earliest cell in sweep order
// (lowest k, then theta closest to zero).
OptimizeResult optimize_params(const InstanceContext& ctx, MixerKind mixer,
                               const OptimizerSettings& settings);
OptimizeResult optimize_params(const KnapsackInstance& inst, MixerKind mixer,
                               const OptimizerSettings& settings);

}  // namespace qkp::xqaoa
