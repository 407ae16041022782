#include "qkp/xqaoa/qkp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qkp/errors.hpp"

namespace qkp::xqaoa {

std::string mixer_name(MixerKind kind) {
  switch (kind) {
    case MixerKind::Hourglass: return "hourglass";
    case MixerKind::CopulaRing: return "copula";
  }
  throw std::invalid_argument("unknown mixer kind");
}

MixerKind mixer_from_name(const std::string& name) {
  if (name == "hourglass") return MixerKind::Hourglass;
  if (name == "copula") return MixerKind::CopulaRing;
  throw std::invalid_argument("unknown mixer: " + name);
}

qsim::StateVector qkp_state(const KnapsackInstance& inst, const CircuitParams& params) {
  const BiasVector bias = logistic_bias(inst, params.k);
  qsim::StateVector state = qsim::StateVector::biased_product(bias.p);
  state.apply_cost_phase(params.gamma, inst.values);
  if (params.mixer == MixerKind::Hourglass) {
    apply_hourglass_mixer(state, bias.p, params.beta);
  } else {
    const RatioProfile prof = ratios(inst);
    apply_ring_copula(state, bias.p, params.theta, params.beta, prof.order);
  }
  return state;
}

RunResult qkp_run(const KnapsackInstance& inst, const CircuitParams& params, int shots,
                  RandomStream& stream) {
  if (shots < 1) throw std::invalid_argument("qkp_run: shots must be positive");
  const qsim::StateVector state = qkp_state(inst, params);
  const std::vector<Bitstring> draws = qsim::sample(state, shots, stream);
  RunResult best;
  best.x = draws.front();
  best.value = objective_value(inst, best.x);
  for (int s = 1; s < shots; ++s) {
    const std::int64_t value = objective_value(inst, draws[s]);
    if (value > best.value) {
      best.value = value;
      best.x = draws[s];
    }
  }
  return best;
}

RunResult qkp_run(const KnapsackInstance& inst, const CircuitParams& params,
                  RandomStream& stream) {
  return qkp_run(inst, params, inst.n, stream);
}

InstanceContext InstanceContext::make(const KnapsackInstance& inst) {
  inst.validate();
  if (is_trivial(inst)) throw TrivialInstance("InstanceContext: all items fit at once");
  InstanceContext ctx;
  ctx.inst = inst;
  ctx.f = qsim::objective_table(inst);
  ctx.f_double.assign(ctx.f.begin(), ctx.f.end());
  ctx.value_order.resize(ctx.f.size());
  std::iota(ctx.value_order.begin(), ctx.value_order.end(), 0u);
  std::stable_sort(ctx.value_order.begin(), ctx.value_order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return ctx.f[a] < ctx.f[b]; });
  ctx.opt = ctx.f[ctx.value_order.back()];
  ctx.lg_value = lazy_greedy(inst).value;
  ctx.vg_value = very_greedy(inst).value;
  ctx.prof = ratios(inst);
  return ctx;
}

namespace {

double ipow(double base, int exp) {
  double result = 1.0;
  for (int i = 0; i < exp; ++i) result *= base;
  return result;
}

}  // namespace

QkpMetrics metrics_from_distribution(std::span<const double> probs, const InstanceContext& ctx,
                                     int shots) {
  if (probs.size() != ctx.f.size())
    throw std::invalid_argument("metrics_from_distribution: size mismatch");
  if (shots < 1) throw std::invalid_argument("metrics_from_distribution: shots must be positive");

  QkpMetrics m;
  double p_single_gt_lg = 0.0, p_single_gt_vg = 0.0;
  double cdf_prev = 0.0, cdf = 0.0;
  double pow_prev = 0.0;
  std::size_t i = 0;
  // walk masks in ascending objective order, one run of equal values at a time
  while (i < ctx.value_order.size()) {
    const std::int64_t value = ctx.f[ctx.value_order[i]];
    double mass = 0.0;
    while (i < ctx.value_order.size() && ctx.f[ctx.value_order[i]] == value) {
      mass += probs[ctx.value_order[i]];
      ++i;
    }
    cdf = cdf_prev + mass;
    const double pow_now = ipow(cdf, shots);
    m.expected_single += mass * static_cast<double>(value);
    m.expected_best += (pow_now - pow_prev) * static_cast<double>(value);
    if (value == ctx.opt) m.p_opt_single += mass;
    if (value > ctx.lg_value) p_single_gt_lg += mass;
    if (value > ctx.vg_value) p_single_gt_vg += mass;
    cdf_prev = cdf;
    pow_prev = pow_now;
  }
  m.p_opt_best = 1.0 - ipow(1.0 - m.p_opt_single, shots);
  m.p_beat_lg = 1.0 - ipow(1.0 - p_single_gt_lg, shots);
  m.p_beat_vg = 1.0 - ipow(1.0 - p_single_gt_vg, shots);
  m.approx_ratio = m.expected_best / static_cast<double>(ctx.opt);
  return m;
}

QkpMetrics qkp_exact_metrics(const KnapsackInstance& inst, const CircuitParams& params,
                             int shots) {
  const InstanceContext ctx = InstanceContext::make(inst);
  const qsim::StateVector state = qkp_state(inst, params);
  return metrics_from_distribution(state.probabilities(), ctx, shots);
}

CircuitEvaluator::CircuitEvaluator(const InstanceContext& ctx, MixerKind mixer, double k,
                                   double theta)
    : ctx_(&ctx),
      mixer_(mixer),
      theta_(theta),
      bias_(logistic_bias(ctx.inst, k)),
      psi0_(qsim::StateVector::biased_product(bias_.p)),
      psi_gamma_(psi0_),
      work_(psi0_) {
  if (mixer_ == MixerKind::CopulaRing) {
    const int n = ctx.inst.n;
    if (n % 2 != 0)
      throw UnsupportedShape("CircuitEvaluator: ring pairing needs an even item count");
    const std::vector<int>& order = ctx.prof.order;
    for (int j = 0; j + 1 < n; j += 2) pairs_.emplace_back(order[j], order[j + 1]);
    for (int j = 1; j + 1 < n; j += 2) pairs_.emplace_back(order[j], order[j + 1]);
    pairs_.emplace_back(order[n - 1], order[0]);
  }
}

CircuitEvaluator::MixerPlan CircuitEvaluator::mixer_plan(double beta) const {
  MixerPlan plan;
  plan.beta = beta;
  if (mixer_ == MixerKind::Hourglass) {
    plan.g1.reserve(ctx_->inst.n);
    for (int q = 0; q < ctx_->inst.n; ++q)
      plan.g1.push_back(hourglass_evolution(bias_.p[q], beta));
  } else {
    plan.g2.reserve(pairs_.size());
    for (const auto& [qa, qb] : pairs_)
      plan.g2.push_back(
          copula_pair_evolution(copula_joint(bias_.p[qa], bias_.p[qb], theta_), beta));
  }
  return plan;
}

void CircuitEvaluator::prepare_gamma(double gamma) {
  psi_gamma_ = psi0_;
  psi_gamma_.apply_cost_phase(gamma, ctx_->inst.values);
}

void CircuitEvaluator::apply_plan_to_work(const MixerPlan& plan) {
  work_ = psi_gamma_;
  if (mixer_ == MixerKind::Hourglass) {
    for (int q = 0; q < ctx_->inst.n; ++q) work_.apply_1q(q, plan.g1[q]);
  } else {
    for (std::size_t t = 0; t < pairs_.size(); ++t)
      work_.apply_2q(pairs_[t].first, pairs_[t].second, plan.g2[t]);
  }
}

double CircuitEvaluator::eval_plan(const MixerPlan& plan) {
  apply_plan_to_work(plan);
  return work_.expectation(ctx_->f_double);
}

double CircuitEvaluator::eval_plan_best(const MixerPlan& plan, int shots) {
  apply_plan_to_work(plan);
  probs_.resize(work_.size());
  qsim::active_kernels().probabilities(work_.amplitudes().data(), work_.size(), probs_.data());
  return metrics_from_distribution(probs_, *ctx_, shots).expected_best;
}

double CircuitEvaluator::eval_plan_sampled(const MixerPlan& plan, int shots,
                                           RandomStream& stream) {
  apply_plan_to_work(plan);
  const std::vector<Bitstring> draws = qsim::sample(work_, shots, stream);
  std::int64_t best = 0;
  bool first = true;
  for (const Bitstring& x : draws) {
    const std::int64_t value = ctx_->f[to_mask(x)];
    if (first || value > best) {
      best = value;
      first = false;
    }
  }
  return static_cast<double>(best);
}

double CircuitEvaluator::expected_objective(double beta, double gamma) {
  prepare_gamma(gamma);
  return eval_plan(mixer_plan(beta));
}

double CircuitEvaluator::expected_best_objective(double beta, double gamma, int shots) {
  prepare_gamma(gamma);
  return eval_plan_best(mixer_plan(beta), shots);
}

double CircuitEvaluator::sampled_best(double beta, double gamma, int shots,
                                      RandomStream& stream) {
  prepare_gamma(gamma);
  return eval_plan_sampled(mixer_plan(beta), shots, stream);
}

qsim::StateVector CircuitEvaluator::state_at(double beta, double gamma) {
  prepare_gamma(gamma);
  apply_plan_to_work(mixer_plan(beta));
  return work_;
}

QkpMetrics CircuitEvaluator::metrics_at(double beta, double gamma, int shots) {
  prepare_gamma(gamma);
  apply_plan_to_work(mixer_plan(beta));
  return metrics_from_distribution(work_.probabilities(), *ctx_, shots);
}

}  // namespace qkp::xqaoa
