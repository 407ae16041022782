#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qkp/annealing.hpp"
#include "qkp/generators.hpp"
#include "qkp/xqaoa/optimize.hpp"

namespace qkp::bench {

inline constexpr const char* kToolVersion = "0.1.0";

struct BenchPreset {
  std::string name;
  int instances_per_distribution = 100;
  int n_items = 10;
  xqaoa::OptimizerSettings optimizer;
  AnnealConfig anneal;
  int estimation_repetitions = 100;  // protocol reruns per instance for SA/GSA
};

// Full-size campaign: 100 instances per distribution, 50x50 grid,
// k in {10..24}, theta in {0, -0.5, -1}, best-of-10 readout, optimizing
// the exact expected best-of-10 value.
BenchPreset full_preset();
// Reduced smoke campaign: 20 instances, 20x20 grid, k in {10,14,18,22},
// theta in {0, -1}, same objective.
BenchPreset ci_preset();
BenchPreset preset_from_name(const std::string& name);

struct CampaignConfig {
  BenchPreset preset = full_preset();
  std::uint64_t seed = 1;
  int threads = 0;  // 0 = hardware concurrency
  std::vector<DistributionKind> distributions = all_distributions();
};

// One aggregate row of the solver comparison (a distribution/solver cell).
struct SolverRow {
  DistributionKind dist;
  std::string solver;  // lg, vg, sa, gsa, qkp_zx, qkp_cop
  double p_opt = 0.0;
  double p_beat_lg = 0.0;
  double p_beat_vg = 0.0;
  double expected_ratio = 0.0;
};

// Mean approximation ratio of one mixer at fixed (k, theta) over a corpus.
struct SweepRow {
  DistributionKind dist;
  std::string mixer;  // hourglass | copula
  double k = 0.0;
  double theta = 0.0;
  double mean_ratio = 0.0;
};

struct CampaignResult {
  CampaignConfig config;
  std::string kernel_name;
  std::vector<SolverRow> table;
  std::vector<SweepRow> sweep;
};

// Runs every solver on every generated instance. Deterministic for a fixed
// seed regardless of thread count: instance i of distribution d generates
// from substream 2d of the seed and solves from substream 2d+1, fanned out
// by instance index. Throws std::runtime_error if an aggregate leaves its
// valid range.
CampaignResult run_campaign(const CampaignConfig& config);

// The quantum (k, theta) sensitivity table alone, skipping the classical
// solver estimation.
std::vector<SweepRow> sweep_k_theta(const CampaignConfig& config);

// The classical rows (lg, vg, sa, gsa) alone, skipping the circuit sweeps;
// the result carries no sweep rows. Instance substreams match run_campaign,
// so a larger instances_per_distribution extends the same corpus rather than
// resampling it. Cheap enough for population-level estimates at thousands of
// instances per distribution.
CampaignResult classical_table(const CampaignConfig& config);

void write_tables_csv(const std::string& path, const CampaignResult& result);
void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& sweep);
void write_manifest_json(const std::string& path, const CampaignResult& result);

}  // namespace qkp::bench
