#include "qkp/bench/campaign.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "qkp/exact.hpp"
#include "qkp/greedy.hpp"

namespace qkp::bench {

using xqaoa::ComboResult;
using xqaoa::InstanceContext;
using xqaoa::MixerKind;

BenchPreset full_preset() {
  BenchPreset preset;
  preset.name = "full";
  preset.instances_per_distribution = 100;
  preset.optimizer.objective = xqaoa::ObjectiveMode::ExpectedBest;
  return preset;
}

BenchPreset ci_preset() {
  BenchPreset preset;
  preset.name = "ci";
  preset.instances_per_distribution = 20;
  preset.optimizer.grid = {20, 20};
  preset.optimizer.k_values = {10.0, 14.0, 18.0, 22.0};
  preset.optimizer.theta_values = {0.0, -1.0};
  preset.optimizer.objective = xqaoa::ObjectiveMode::ExpectedBest;
  return preset;
}

BenchPreset preset_from_name(const std::string& name) {
  if (name == "full") return full_preset();
  if (name == "ci") return ci_preset();
  throw std::invalid_argument("unknown preset: " + name);
}

namespace {

constexpr const char* kSolverNames[6] = {"lg", "vg", "sa", "gsa", "qkp_zx", "qkp_cop"};

enum class SolverSet { All, QuantumOnly, ClassicalOnly };

struct SolverStats {
  double p_opt = 0.0;
  double p_beat_lg = 0.0;
  double p_beat_vg = 0.0;
  double ratio = 0.0;
};

struct InstanceOutcome {
  SolverStats stats[6];
  std::vector<ComboResult> zx_combos;
  std::vector<ComboResult> cop_combos;
};

// Seed layout per (distribution d, instance i): generation runs on
// substream 2d of the campaign seed (instance i on its substream i, see
// sample_corpus); everything stochastic on the solver side hangs off
// substream 2d+1 -> i, with slot 0 for SA repetitions, 1 for GSA and 2 for
// sampled-objective draws.
std::uint64_t solver_base(std::uint64_t seed, int dist_index, int instance_index) {
  return substream_seed(substream_seed(seed, 2 * dist_index + 1), instance_index);
}

SolverStats protocol_stats(const KnapsackInstance& inst, const AnnealConfig& anneal,
                           int repetitions, std::uint64_t rep_base, bool global,
                           const InstanceContext& ctx) {
  SolverStats stats;
  double total = 0.0;
  for (int rep = 0; rep < repetitions; ++rep) {
    RandomStream stream(rep_base, static_cast<std::uint64_t>(rep));
    const std::int64_t value = global ? gsa_protocol(inst, anneal, stream)
                                      : sa_protocol(inst, anneal, stream);
    total += static_cast<double>(value);
    if (value == ctx.opt) stats.p_opt += 1.0;
    if (value > ctx.lg_value) stats.p_beat_lg += 1.0;
    if (value > ctx.vg_value) stats.p_beat_vg += 1.0;
  }
  stats.p_opt /= repetitions;
  stats.p_beat_lg /= repetitions;
  stats.p_beat_vg /= repetitions;
  stats.ratio = total / repetitions / static_cast<double>(ctx.opt);
  return stats;
}

SolverStats quantum_stats(const xqaoa::QkpMetrics& m) {
  return {m.p_opt_best, m.p_beat_lg, m.p_beat_vg, m.approx_ratio};
}

InstanceOutcome solve_instance(const KnapsackInstance& inst, const BenchPreset& preset,
                               std::uint64_t base, SolverSet set) {
  InstanceOutcome out;
  const InstanceContext ctx = InstanceContext::make(inst);
  const auto opt = static_cast<double>(ctx.opt);

  if (set != SolverSet::QuantumOnly) {
    const auto lg = static_cast<double>(ctx.lg_value);
    const auto vg = static_cast<double>(ctx.vg_value);
    out.stats[0] = {lg == opt ? 1.0 : 0.0, 0.0, lg > vg ? 1.0 : 0.0, lg / opt};
    out.stats[1] = {vg == opt ? 1.0 : 0.0, vg > lg ? 1.0 : 0.0, 0.0, vg / opt};
    out.stats[2] = protocol_stats(inst, preset.anneal, preset.estimation_repetitions,
                                  substream_seed(base, 0), false, ctx);
    out.stats[3] = protocol_stats(inst, preset.anneal, preset.estimation_repetitions,
                                  substream_seed(base, 1), true, ctx);
  }

  if (set != SolverSet::ClassicalOnly) {
    xqaoa::OptimizerSettings settings = preset.optimizer;
    settings.sample_seed = substream_seed(base, 2);
    out.zx_combos = optimize_sweep(ctx, MixerKind::Hourglass, settings);
    out.cop_combos = optimize_sweep(ctx, MixerKind::CopulaRing, settings);

    auto best_metrics = [](const std::vector<ComboResult>& combos) {
      const ComboResult* best = &combos.front();
      for (const ComboResult& combo : combos)
        if (combo.point.value > best->point.value) best = &combo;
      return best->metrics;
    };
    out.stats[4] = quantum_stats(best_metrics(out.zx_combos));
    out.stats[5] = quantum_stats(best_metrics(out.cop_combos));
  }
  return out;
}

std::vector<InstanceOutcome> run_distribution(const CampaignConfig& config, int dist_index,
                                              DistributionKind kind, int threads,
                                              SolverSet set) {
  GeneratorConfig gen;
  gen.kind = kind;
  gen.n_items = config.preset.n_items;
  gen.seed = substream_seed(config.seed, 2 * dist_index);
  const std::vector<KnapsackInstance> corpus =
      sample_corpus(gen, config.preset.instances_per_distribution);

  std::vector<InstanceOutcome> outcomes(corpus.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= corpus.size()) return;
      try {
        outcomes[i] = solve_instance(corpus[i], config.preset,
                                     solver_base(config.seed, dist_index, static_cast<int>(i)),
                                     set);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return outcomes;
}

void check_fraction(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0 + 1e-9))
    throw std::runtime_error(std::string("campaign invariant violated: ") + what);
}

std::vector<SweepRow> sweep_rows_for(DistributionKind kind,
                                     const std::vector<InstanceOutcome>& outcomes) {
  std::vector<SweepRow> rows;
  if (outcomes.empty()) return rows;
  auto add_rows = [&](const char* mixer,
                      std::vector<ComboResult> InstanceOutcome::*member) {
    const std::vector<ComboResult>& shape = outcomes.front().*member;
    for (std::size_t c = 0; c < shape.size(); ++c) {
      SweepRow row{kind, mixer, shape[c].k, shape[c].theta, 0.0};
      for (const InstanceOutcome& out : outcomes) {
        const ComboResult& combo = (out.*member)[c];
        row.mean_ratio += combo.metrics.approx_ratio;
      }
      row.mean_ratio /= static_cast<double>(outcomes.size());
      check_fraction(row.mean_ratio, "sweep mean ratio");
      rows.push_back(row);
    }
  };
  add_rows("hourglass", &InstanceOutcome::zx_combos);
  add_rows("copula", &InstanceOutcome::cop_combos);
  return rows;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

CampaignResult run_impl(const CampaignConfig& config, SolverSet set) {
  if (config.preset.instances_per_distribution < 1)
    throw std::invalid_argument("campaign: need at least one instance per distribution");
  if (config.distributions.empty())
    throw std::invalid_argument("campaign: empty distribution list");

  CampaignResult result;
  result.config = config;
  result.kernel_name = qsim::active_kernels().name;
  const int threads = resolve_threads(config.threads);

  for (std::size_t d = 0; d < config.distributions.size(); ++d) {
    const DistributionKind kind = config.distributions[d];
    const std::vector<InstanceOutcome> outcomes =
        run_distribution(config, static_cast<int>(d), kind, threads, set);

    const int solver_lo = set == SolverSet::QuantumOnly ? 4 : 0;
    const int solver_hi = set == SolverSet::ClassicalOnly ? 4 : 6;
    for (int s = solver_lo; s < solver_hi; ++s) {
      SolverRow row{kind, kSolverNames[s], 0.0, 0.0, 0.0, 0.0};
      for (const InstanceOutcome& out : outcomes) {
        row.p_opt += out.stats[s].p_opt;
        row.p_beat_lg += out.stats[s].p_beat_lg;
        row.p_beat_vg += out.stats[s].p_beat_vg;
        row.expected_ratio += out.stats[s].ratio;
      }
      const auto count = static_cast<double>(outcomes.size());
      row.p_opt /= count;
      row.p_beat_lg /= count;
      row.p_beat_vg /= count;
      row.expected_ratio /= count;
      check_fraction(row.p_opt, "p_opt");
      check_fraction(row.p_beat_lg, "p_beat_lg");
      check_fraction(row.p_beat_vg, "p_beat_vg");
      check_fraction(row.expected_ratio, "expected ratio");
      result.table.push_back(row);
    }

    if (set != SolverSet::ClassicalOnly) {
      const std::vector<SweepRow> rows = sweep_rows_for(kind, outcomes);
      result.sweep.insert(result.sweep.end(), rows.begin(), rows.end());
    }
  }
  return result;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace

CampaignResult run_campaign(const CampaignConfig& config) {
  return run_impl(config, SolverSet::All);
}

std::vector<SweepRow> sweep_k_theta(const CampaignConfig& config) {
  return run_impl(config, SolverSet::QuantumOnly).sweep;
}

CampaignResult classical_table(const CampaignConfig& config) {
  return run_impl(config, SolverSet::ClassicalOnly);
}

void write_tables_csv(const std::string& path, const CampaignResult& result) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "dist,solver,p_opt,p_beat_lg,p_beat_vg,expected_ratio\n";
  for (const SolverRow& row : result.table)
    out << distribution_name(row.dist) << ',' << row.solver << ',' << format_double(row.p_opt)
        << ',' << format_double(row.p_beat_lg) << ',' << format_double(row.p_beat_vg) << ','
        << format_double(row.expected_ratio) << '\n';
}

void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& sweep) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "dist,mixer,k,theta,mean_ratio\n";
  for (const SweepRow& row : sweep)
    out << distribution_name(row.dist) << ',' << row.mixer << ',' << format_double(row.k) << ','
        << format_double(row.theta) << ',' << format_double(row.mean_ratio) << '\n';
}

void write_manifest_json(const std::string& path, const CampaignResult& result) {
  nlohmann::json j;
  j["version"] = kToolVersion;
  j["preset"] = result.config.preset.name;
  j["seed"] = result.config.seed;
  j["threads"] = result.config.threads;
  j["kernels"] = result.kernel_name;
  j["n_items"] = result.config.preset.n_items;
  j["instances_per_distribution"] = result.config.preset.instances_per_distribution;
  std::vector<std::string> dists;
  for (DistributionKind kind : result.config.distributions)
    dists.push_back(distribution_name(kind));
  j["distributions"] = dists;
  const xqaoa::OptimizerSettings& opt = result.config.preset.optimizer;
  j["optimizer"] = {
      {"n_beta", opt.grid.n_beta},
      {"n_gamma", opt.grid.n_gamma},
      {"k_values", opt.k_values},
      {"theta_values", opt.theta_values},
      {"objective", objective_name(opt.objective)},
      {"shots", opt.shots},
      {"refine_starts", opt.refine.starts},
  };
  j["anneal"] = {
      {"steps", result.config.preset.anneal.steps},
      {"runs_per_temperature", result.config.preset.anneal.runs_per_temperature},
      {"temperature_sweep", result.config.preset.anneal.temperature_sweep},
      {"estimation_repetitions", result.config.preset.estimation_repetitions},
  };
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << j.dump(2) << '\n';
}

}  // namespace qkp::bench
