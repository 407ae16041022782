#include "qkp/xqaoa/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace qkp::xqaoa {

std::string objective_name(ObjectiveMode mode) {
  switch (mode) {
    case ObjectiveMode::Expectation: return "expect";
    case ObjectiveMode::ExpectedBest: return "exp-best";
    case ObjectiveMode::SampledBest: return "sampled";
  }
  throw std::invalid_argument("unknown objective mode");
}

ObjectiveMode objective_from_name(const std::string& name) {
  if (name == "expect") return ObjectiveMode::Expectation;
  if (name == "exp-best") return ObjectiveMode::ExpectedBest;
  if (name == "sampled") return ObjectiveMode::SampledBest;
  throw std::invalid_argument("unknown objective: " + name);
}

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_into(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0.0) r += period;
  return r;
}

struct CellValue {
  double value;
  int ib, ig;
};

double eval_cell(CircuitEvaluator& ev, const CircuitEvaluator::MixerPlan& plan,
                 ObjectiveMode mode, int shots, RandomStream* stream) {
  switch (mode) {
    case ObjectiveMode::Expectation: return ev.eval_plan(plan);
    case ObjectiveMode::ExpectedBest: return ev.eval_plan_best(plan, shots);
    case ObjectiveMode::SampledBest: return ev.eval_plan_sampled(plan, shots, *stream);
  }
  throw std::invalid_argument("unknown objective mode");
}

double eval_point(CircuitEvaluator& ev, double beta, double gamma, ObjectiveMode mode,
                  int shots, RandomStream* stream) {
  switch (mode) {
    case ObjectiveMode::Expectation: return ev.expected_objective(beta, gamma);
    case ObjectiveMode::ExpectedBest: return ev.expected_best_objective(beta, gamma, shots);
    case ObjectiveMode::SampledBest: return ev.sampled_best(beta, gamma, shots, *stream);
  }
  throw std::invalid_argument("unknown objective mode");
}

// Evaluates every grid cell. Returns cells sorted by descending value; ties
// by ascending (beta, gamma). Gamma is the outer sweep so the cost-phased
// state is built once per column; mixer plans are shared across columns.
std::vector<CellValue> scan_grid(CircuitEvaluator& ev, const GridSpec& grid, ObjectiveMode mode,
                                 int shots, RandomStream* stream) {
  if (grid.n_beta < 1 || grid.n_gamma < 1)
    throw std::invalid_argument("grid_search: grid dimensions must be positive");
  if (mode == ObjectiveMode::SampledBest && stream == nullptr)
    throw std::invalid_argument("grid_search: sampled objective needs a stream");

  std::vector<CircuitEvaluator::MixerPlan> plans;
  plans.reserve(grid.n_beta);
  for (int ib = 0; ib < grid.n_beta; ++ib)
    plans.push_back(ev.mixer_plan(kPi * ib / grid.n_beta));

  std::vector<CellValue> cells;
  cells.reserve(static_cast<std::size_t>(grid.n_beta) * grid.n_gamma);
  for (int ig = 0; ig < grid.n_gamma; ++ig) {
    ev.prepare_gamma(2.0 * kPi * ig / grid.n_gamma);
    for (int ib = 0; ib < grid.n_beta; ++ib) {
      cells.push_back({eval_cell(ev, plans[ib], mode, shots, stream), ib, ig});
    }
  }
  std::sort(cells.begin(), cells.end(), [](const CellValue& a, const CellValue& b) {
    if (a.value != b.value) return a.value > b.value;
    if (a.ib != b.ib) return a.ib < b.ib;
    return a.ig < b.ig;
  });
  return cells;
}

ParamPoint cell_point(const CellValue& cell, const GridSpec& grid) {
  return {kPi * cell.ib / grid.n_beta, 2.0 * kPi * cell.ig / grid.n_gamma, cell.value};
}

int ring_distance(int a, int b, int n) {
  const int d = std::abs(a - b);
  return std::min(d, n - d);
}

// Top cells separated by at least two grid steps in both directions, so the
// simplex starts explore distinct basins.
std::vector<CellValue> pick_starts(const std::vector<CellValue>& sorted, const GridSpec& grid,
                                   int count) {
  std::vector<CellValue> picked;
  for (const CellValue& cell : sorted) {
    if (static_cast<int>(picked.size()) >= count) break;
    const bool crowded =
        std::any_of(picked.begin(), picked.end(), [&](const CellValue& other) {
          return ring_distance(cell.ib, other.ib, grid.n_beta) < 2 &&
                 ring_distance(cell.ig, other.ig, grid.n_gamma) < 2;
        });
    if (!crowded) picked.push_back(cell);
  }
  return picked;
}

struct Vertex {
  double b, g, value;
};

// Maximizing Nelder-Mead on the wrapped objective. Tracks the best point ever
// evaluated, so the result can only improve on the start.
ParamPoint nelder_mead(CircuitEvaluator& ev, ObjectiveMode mode, int shots,
                       RandomStream* stream, const ParamPoint& start, double step_b,
                       double step_g, const RefineSettings& settings) {
  ParamPoint best = start;
  auto eval = [&](double b, double g) {
    const double bw = wrap_into(b, kPi);
    const double gw = wrap_into(g, 2.0 * kPi);
    const double value = eval_point(ev, bw, gw, mode, shots, stream);
    if (value > best.value) best = {bw, gw, value};
    return value;
  };

  Vertex v[3];
  v[0] = {start.beta, start.gamma, eval(start.beta, start.gamma)};
  v[1] = {start.beta + step_b, start.gamma, eval(start.beta + step_b, start.gamma)};
  v[2] = {start.beta, start.gamma + step_g, eval(start.beta, start.gamma + step_g)};

  for (int iter = 0; iter < settings.max_iterations; ++iter) {
    std::sort(v, v + 3, [](const Vertex& a, const Vertex& b) { return a.value > b.value; });
    const double spread = std::max({std::abs(v[0].b - v[1].b), std::abs(v[0].b - v[2].b),
                                    std::abs(v[0].g - v[1].g), std::abs(v[0].g - v[2].g)});
    if (spread < settings.param_tol && v[0].value - v[2].value < settings.value_tol) break;

    const double cb = 0.5 * (v[0].b + v[1].b);
    const double cg = 0.5 * (v[0].g + v[1].g);
    const double rb = cb + (cb - v[2].b);
    const double rg = cg + (cg - v[2].g);
    const double rv = eval(rb, rg);

    if (rv > v[0].value) {
      const double eb = cb + 2.0 * (cb - v[2].b);
      const double eg = cg + 2.0 * (cg - v[2].g);
      const double evv = eval(eb, eg);
      v[2] = evv > rv ? Vertex{eb, eg, evv} : Vertex{rb, rg, rv};
    } else if (rv > v[1].value) {
      v[2] = {rb, rg, rv};
    } else {
      const bool outside = rv > v[2].value;
      const double xb = outside ? cb + 0.5 * (rb - cb) : cb - 0.5 * (cb - v[2].b);
      const double xg = outside ? cg + 0.5 * (rg - cg) : cg - 0.5 * (cg - v[2].g);
      const double xv = eval(xb, xg);
      if (xv > (outside ? rv : v[2].value)) {
        v[2] = {xb, xg, xv};
      } else {
        for (int i = 1; i < 3; ++i) {
          v[i].b = v[0].b + 0.5 * (v[i].b - v[0].b);
          v[i].g = v[0].g + 0.5 * (v[i].g - v[0].g);
          v[i].value = eval(v[i].b, v[i].g);
        }
      }
    }
  }
  return best;
}

std::vector<double> thetas_for(MixerKind mixer, const OptimizerSettings& settings) {
  if (mixer == MixerKind::Hourglass) return {0.0};
  std::vector<double> thetas = settings.theta_values;
  if (thetas.empty()) throw std::invalid_argument("optimize: empty theta list");
  std::stable_sort(thetas.begin(), thetas.end(),
                   [](double a, double b) { return std::abs(a) < std::abs(b); });
  return thetas;
}

}  // namespace

std::vector<double> OptimizerSettings::default_k_values() {
  std::vector<double> ks;
  for (int k = 10; k <= 24; ++k) ks.push_back(static_cast<double>(k));
  return ks;
}

ParamPoint grid_search(const InstanceContext& ctx, MixerKind mixer, double k, double theta,
                       const GridSpec& grid, ObjectiveMode mode, int shots,
                       RandomStream* stream) {
  CircuitEvaluator ev(ctx, mixer, k, theta);
  const std::vector<CellValue> cells = scan_grid(ev, grid, mode, shots, stream);
  return cell_point(cells.front(), grid);
}

ParamPoint refine(const InstanceContext& ctx, MixerKind mixer, double k, double theta,
                  const ParamPoint& start, const RefineSettings& settings, ObjectiveMode mode,
                  int shots, RandomStream* stream) {
  if (mode == ObjectiveMode::SampledBest && stream == nullptr)
    throw std::invalid_argument("refine: sampled objective needs a stream");
  CircuitEvaluator ev(ctx, mixer, k, theta);
  ParamPoint anchored = start;
  anchored.beta = wrap_into(start.beta, kPi);
  anchored.gamma = wrap_into(start.gamma, 2.0 * kPi);
  anchored.value = eval_point(ev, anchored.beta, anchored.gamma, mode, shots, stream);
  return nelder_mead(ev, mode, shots, stream, anchored, kPi / 100.0, 2.0 * kPi / 100.0,
                     settings);
}

std::vector<ComboResult> optimize_sweep(const InstanceContext& ctx, MixerKind mixer,
                                        const OptimizerSettings& settings) {
  if (settings.k_values.empty()) throw std::invalid_argument("optimize: empty k list");
  if (settings.refine.starts < 1)
    throw std::invalid_argument("optimize: refine needs at least one start");
  const std::vector<double> thetas = thetas_for(mixer, settings);
  std::vector<double> k_values = settings.k_values;
  std::sort(k_values.begin(), k_values.end());

  std::vector<ComboResult> combos;
  combos.reserve(k_values.size() * thetas.size());
  std::uint64_t combo_ordinal = 0;
  for (double k : k_values) {
    for (double theta : thetas) {
      RandomStream stream(settings.sample_seed, combo_ordinal++);
      RandomStream* sp = settings.objective == ObjectiveMode::SampledBest ? &stream : nullptr;

      CircuitEvaluator ev(ctx, mixer, k, theta);

      // At theta = 0 the ring equals the hourglass mixer at twice the angle,
      // but its beta axis double-covers the landscape, so an independent
      // search lands on different local maxima than the hourglass run does.
      // Searching in the doubled-angle coordinate and halving beta afterwards
      // keeps the theta = 0 column exactly on the hourglass column.
      std::optional<CircuitEvaluator> doubled;
      if (mixer == MixerKind::CopulaRing && theta == 0.0)
        doubled.emplace(ctx, MixerKind::Hourglass, k, theta);
      CircuitEvaluator& search = doubled ? *doubled : ev;

      const std::vector<CellValue> cells =
          scan_grid(search, settings.grid, settings.objective, settings.shots, sp);
      const std::vector<CellValue> starts =
          pick_starts(cells, settings.grid, settings.refine.starts);

      ParamPoint champion = cell_point(cells.front(), settings.grid);
      const double step_b = 0.5 * kPi / settings.grid.n_beta;
      const double step_g = kPi / settings.grid.n_gamma;
      for (const CellValue& cell : starts) {
        const ParamPoint polished =
            nelder_mead(search, settings.objective, settings.shots, sp,
                        cell_point(cell, settings.grid), step_b, step_g, settings.refine);
        if (polished.value > champion.value) champion = polished;
      }
      if (doubled) champion.beta *= 0.5;

      ComboResult combo;
      combo.k = k;
      combo.theta = mixer == MixerKind::Hourglass ? 0.0 : theta;
      combo.point = champion;
      combo.metrics = ev.metrics_at(champion.beta, champion.gamma, settings.shots);
      combos.push_back(combo);
    }
  }
  return combos;
}

OptimizeResult optimize_params(const InstanceContext& ctx, MixerKind mixer,
                               const OptimizerSettings& settings) {
  const std::vector<ComboResult> combos = optimize_sweep(ctx, mixer, settings);
  const ComboResult* best = &combos.front();
  for (const ComboResult& combo : combos)
    if (combo.point.value > best->point.value) best = &combo;

  OptimizeResult result;
  result.params.mixer = mixer;
  result.params.beta = best->point.beta;
  result.params.gamma = best->point.gamma;
  result.params.k = best->k;
  result.params.theta = best->theta;
  result.objective_value = best->point.value;
  result.metrics = best->metrics;
  return result;
}

OptimizeResult optimize_params(const KnapsackInstance& inst, MixerKind mixer,
                               const OptimizerSettings& settings) {
  const InstanceContext ctx = InstanceContext::make(inst);
  return optimize_params(ctx, mixer, settings);
}

}  // namespace qkp::xqaoa
