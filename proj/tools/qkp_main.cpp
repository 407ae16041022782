#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qkp/annealing.hpp"
#include "qkp/bench/campaign.hpp"
#include "qkp/bias.hpp"
#include "qkp/errors.hpp"
#include "qkp/exact.hpp"
#include "qkp/generators.hpp"
#include "qkp/greedy.hpp"
#include "qkp/xqaoa/optimize.hpp"

namespace {

using namespace qkp;

std::vector<double> parse_double_list(const std::string& text, const char* what) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      values.push_back(std::stod(token));
    } catch (const std::exception&) {
      throw CLI::ValidationError(std::string(what) + ": bad number '" + token + "'");
    }
  }
  if (values.empty()) throw CLI::ValidationError(std::string(what) + ": empty list");
  return values;
}

// "10:24" (inclusive integer range) or a comma list "10,12,14"
std::vector<double> parse_k_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return parse_double_list(text, "--k-range");
  const int lo = std::stoi(text.substr(0, colon));
  const int hi = std::stoi(text.substr(colon + 1));
  if (hi < lo) throw CLI::ValidationError("--k-range: upper bound below lower bound");
  std::vector<double> values;
  for (int k = lo; k <= hi; ++k) values.push_back(static_cast<double>(k));
  return values;
}

xqaoa::GridSpec parse_grid(const std::string& text) {
  const auto x = text.find('x');
  if (x == std::string::npos) throw CLI::ValidationError("--grid: expected NxM");
  xqaoa::GridSpec grid;
  grid.n_beta = std::stoi(text.substr(0, x));
  grid.n_gamma = std::stoi(text.substr(x + 1));
  if (grid.n_beta < 1 || grid.n_gamma < 1)
    throw CLI::ValidationError("--grid: dimensions must be positive");
  return grid;
}

int cmd_gen(const std::string& dist, int n, int count, std::uint64_t seed,
            const std::string& out, bool endpoints_only) {
  GeneratorConfig cfg;
  cfg.kind = distribution_from_name(dist);
  cfg.n_items = n;
  cfg.seed = seed;
  cfg.inv_strong_endpoints_only = endpoints_only;
  save_corpus_file(out, sample_corpus(cfg, count));
  return 0;
}

int cmd_solve(const std::string& algo, const std::string& in, std::uint64_t seed,
              const std::string& out) {
  const std::vector<KnapsackInstance> corpus = load_corpus_file(in);
  std::ofstream os(out);
  if (!os) throw std::runtime_error("cannot open " + out);
  os << "instance,algo,value\n";
  const AnnealConfig anneal;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const KnapsackInstance& inst = corpus[i];
    std::int64_t value = 0;
    if (algo == "lg") {
      value = lazy_greedy(inst).value;
    } else if (algo == "vg") {
      value = very_greedy(inst).value;
    } else if (algo == "sa" || algo == "gsa") {
      RandomStream stream(seed, i);
      value = algo == "sa" ? sa_protocol(inst, anneal, stream)
                           : gsa_protocol(inst, anneal, stream);
    } else if (algo == "bf") {
      value = brute_force_opt(inst).value;
    } else if (algo == "dp") {
      value = dp_opt(inst).value;
    } else {
      throw CLI::ValidationError("--algo: unknown algorithm '" + algo + "'");
    }
    os << i << ',' << algo << ',' << value << '\n';
  }
  return 0;
}

int cmd_bias(const std::string& in, const std::string& kind, double k, const std::string& out) {
  const std::vector<KnapsackInstance> corpus = load_corpus_file(in);
  if (corpus.empty()) throw std::runtime_error(in + ": no instances");
  const KnapsackInstance& inst = corpus.front();

  const BiasKind bias_kind = bias_kind_from_name(kind);
  BiasVector bias;
  switch (bias_kind) {
    case BiasKind::Constant: bias = constant_bias(inst); break;
    case BiasKind::LazyGreedy: bias = lazy_greedy_bias(inst); break;
    case BiasKind::Logistic: bias = logistic_bias(inst, k); break;
  }

  const RatioProfile prof = ratios(inst);
  std::ofstream os(out);
  if (!os) throw std::runtime_error("cannot open " + out);
  os << "i,ratio,p\n";
  char buf[64];
  for (int i = 0; i < inst.n; ++i) {
    std::snprintf(buf, sizeof buf, "%d,%.9f,%.9f\n", i, prof.ratios[i].as_double(), bias.p[i]);
    os << buf;
  }
  return 0;
}

int cmd_qkp(const std::string& mixer_name_arg, const std::string& in, const std::string& k_range,
            const std::string& theta_list, const std::string& grid_text, int shots,
            const std::string& objective, std::uint64_t seed, const std::string& out) {
  const xqaoa::MixerKind mixer = xqaoa::mixer_from_name(mixer_name_arg);
  xqaoa::OptimizerSettings settings;
  settings.grid = parse_grid(grid_text);
  settings.k_values = parse_k_range(k_range);
  settings.theta_values = parse_double_list(theta_list, "--theta");
  settings.shots = shots;
  try {
    settings.objective = xqaoa::objective_from_name(objective);
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError("--objective: expected expect, exp-best, or sampled");
  }

  const std::vector<KnapsackInstance> corpus = load_corpus_file(in);
  std::ofstream os(out);
  if (!os) throw std::runtime_error("cannot open " + out);
  os << "instance,mixer,k,theta,beta,gamma,objective,expected_best,p_opt_best,approx_ratio\n";
  char buf[256];
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    settings.sample_seed = substream_seed(seed, i);
    try {
      const xqaoa::OptimizeResult res = optimize_params(corpus[i], mixer, settings);
      std::snprintf(buf, sizeof buf, "%zu,%s,%g,%g,%.9f,%.9f,%.6f,%.6f,%.6f,%.6f\n", i,
                    mixer_name_arg.c_str(), res.params.k, res.params.theta, res.params.beta,
                    res.params.gamma, res.objective_value, res.metrics.expected_best,
                    res.metrics.p_opt_best, res.metrics.approx_ratio);
      os << buf;
    } catch (const TrivialInstance&) {
      std::cerr << "instance " << i << ": every item fits at once, skipped\n";
    }
  }
  return 0;
}

int cmd_bench(const std::string& preset_name, const std::string& dist, std::uint64_t seed,
              const std::string& out_dir, int threads, int instances_override,
              const std::string& grid_override, const std::string& k_override,
              const std::string& theta_override, int repetitions_override) {
  bench::CampaignConfig config;
  config.preset = bench::preset_from_name(preset_name);
  config.seed = seed;
  config.threads = threads;
  if (dist != "all") config.distributions = {distribution_from_name(dist)};
  if (instances_override > 0) config.preset.instances_per_distribution = instances_override;
  if (!grid_override.empty()) config.preset.optimizer.grid = parse_grid(grid_override);
  if (!k_override.empty()) config.preset.optimizer.k_values = parse_k_range(k_override);
  if (!theta_override.empty())
    config.preset.optimizer.theta_values = parse_double_list(theta_override, "--theta");
  if (repetitions_override > 0) config.preset.estimation_repetitions = repetitions_override;

  std::filesystem::create_directories(out_dir);
  const bench::CampaignResult result = bench::run_campaign(config);
  const std::filesystem::path dir(out_dir);
  bench::write_tables_csv((dir / "tables.csv").string(), result);
  bench::write_sweep_csv((dir / "sweep.csv").string(), result.sweep);
  bench::write_manifest_json((dir / "manifest.json").string(), result);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"0/1 knapsack toolkit: hard-instance generators, classical baselines, and "
               "biased depth-1 quantum circuits"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a corpus of knapsack instances");
  std::string gen_dist = "strong", gen_out;
  int gen_n = 10, gen_count = 100;
  std::uint64_t gen_seed = 1;
  bool gen_endpoints = false;
  gen->add_option("--dist", gen_dist,
                  "distribution: strong|inv-strong|profit|strong-spanner|profit-spanner")
      ->required();
  gen->add_option("--n", gen_n, "items per instance");
  gen->add_option("--count", gen_count, "number of instances");
  gen->add_option("--seed", gen_seed, "corpus seed");
  gen->add_option("--out", gen_out, "output file (one JSON instance per line)")->required();
  gen->add_flag("--inv-strong-endpoints", gen_endpoints,
                "restrict the inv-strong weight offset to {98, 102}");

  // solve
  auto* solve = app.add_subcommand("solve", "run a classical solver over a corpus");
  std::string solve_algo, solve_in, solve_out;
  std::uint64_t solve_seed = 1;
  solve->add_option("--algo", solve_algo, "lg|vg|sa|gsa|bf|dp")->required();
  solve->add_option("--in", solve_in, "corpus file")->required();
  solve->add_option("--seed", solve_seed, "seed for sa/gsa (instance i uses substream i)");
  solve->add_option("--out", solve_out, "output CSV")->required();

  // bias
  auto* bias = app.add_subcommand("bias", "per-item selection probabilities for one instance");
  std::string bias_in, bias_kind = "logistic", bias_out;
  double bias_k = 15.0;
  bias->add_option("--in", bias_in, "instance file (first line is used)")->required();
  bias->add_option("--kind", bias_kind, "constant|lg|logistic");
  bias->add_option("--k", bias_k, "logistic steepness");
  bias->add_option("--out", bias_out, "output CSV (i,ratio,p)")->required();

  // qkp
  auto* qkp = app.add_subcommand("qkp", "optimize the depth-1 circuit over a corpus");
  std::string qkp_mixer = "hourglass", qkp_in, qkp_out, qkp_krange = "10:24";
  std::string qkp_theta = "0,-0.5,-1", qkp_grid = "50x50", qkp_objective = "expect";
  int qkp_shots = 10;
  std::uint64_t qkp_seed = 1;
  qkp->add_option("--mixer", qkp_mixer, "hourglass|copula")->required();
  qkp->add_option("--in", qkp_in, "corpus file")->required();
  qkp->add_option("--k-range", qkp_krange, "steepness range a:b or comma list");
  qkp->add_option("--theta", qkp_theta, "comma list of copula couplings");
  qkp->add_option("--grid", qkp_grid, "beta x gamma grid, e.g. 50x50");
  qkp->add_option("--shots", qkp_shots, "readout shots (best-of-N)");
  qkp->add_option("--objective", qkp_objective,
                  "expect = exact single-shot E[f], exp-best = exact E[best of --shots], "
                  "sampled = best of --shots draws");
  qkp->add_option("--seed", qkp_seed, "sampling seed (sampled objective)");
  qkp->add_option("--out", qkp_out, "output CSV")->required();

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "full benchmark campaign");
  std::string bench_preset = "full", bench_dist = "all", bench_out;
  std::uint64_t bench_seed = 1;
  int bench_threads = 0, bench_instances = 0, bench_reps = 0;
  std::string bench_grid, bench_k, bench_theta;
  bench_cmd->add_option("--preset", bench_preset, "full | ci (reduced smoke scale)");
  bench_cmd->add_option("--dist", bench_dist, "all or one distribution name");
  bench_cmd->add_option("--seed", bench_seed, "campaign seed");
  bench_cmd->add_option("--out", bench_out, "output directory")->required();
  bench_cmd->add_option("--threads", bench_threads, "worker threads (0 = hardware)");
  bench_cmd->add_option("--instances", bench_instances, "override instances per distribution");
  bench_cmd->add_option("--grid", bench_grid, "override the optimizer grid");
  bench_cmd->add_option("--k-range", bench_k, "override the steepness sweep");
  bench_cmd->add_option("--theta", bench_theta, "override the coupling sweep");
  bench_cmd->add_option("--repetitions", bench_reps, "override SA/GSA estimation repetitions");

  try {
    app.parse(argc, argv);
    if (gen->parsed())
      return cmd_gen(gen_dist, gen_n, gen_count, gen_seed, gen_out, gen_endpoints);
    if (solve->parsed()) return cmd_solve(solve_algo, solve_in, solve_seed, solve_out);
    if (bias->parsed()) return cmd_bias(bias_in, bias_kind, bias_k, bias_out);
    if (qkp->parsed())
      return cmd_qkp(qkp_mixer, qkp_in, qkp_krange, qkp_theta, qkp_grid, qkp_shots,
                     qkp_objective, qkp_seed, qkp_out);
    if (bench_cmd->parsed())
      return cmd_bench(bench_preset, bench_dist, bench_seed, bench_out, bench_threads,
                       bench_instances, bench_grid, bench_k, bench_theta, bench_reps);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
