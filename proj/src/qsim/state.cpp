#include "qkp/qsim/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace qkp::qsim {

namespace {

// max |(U U+ - I)_{jk}| for an n x n row-major matrix
template <std::size_t N>
double unitarity_defect(const std::array<c64, N * N>& m) {
  double defect = 0.0;
  for (std::size_t j = 0; j < N; ++j) {
    for (std::size_t k = 0; k < N; ++k) {
      c64 dot = 0.0;
      for (std::size_t t = 0; t < N; ++t) dot += m[j * N + t] * std::conj(m[k * N + t]);
      if (j == k) dot -= 1.0;
      defect = std::max(defect, std::abs(dot));
    }
  }
  return defect;
}

}  // namespace

Gate1Q Gate1Q::checked(const std::array<c64, 4>& m, double tol) {
  if (unitarity_defect<2>(m) > tol) throw std::invalid_argument("Gate1Q: matrix not unitary");
  return Gate1Q{m};
}

Gate2Q Gate2Q::checked(const std::array<c64, 16>& m, double tol) {
  if (unitarity_defect<4>(m) > tol) throw std::invalid_argument("Gate2Q: matrix not unitary");
  return Gate2Q{m};
}

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 26)
    throw std::invalid_argument("StateVector: n_qubits out of range [1, 26]");
  amps_.assign(std::size_t{1} << n_qubits, c64{0.0, 0.0});
  amps_[0] = 1.0;
}

StateVector StateVector::biased_product(std::span<const double> p) {
  StateVector state(static_cast<int>(p.size()));
  for (double pi : p)
    if (!(pi >= 0.0 && pi <= 1.0))
      throw std::invalid_argument("biased_product: probabilities must lie in [0,1]");
  // grow one qubit at a time; amplitudes stay real and non-negative
  std::size_t filled = 1;
  for (std::size_t q = 0; q < p.size(); ++q) {
    const double a0 = std::sqrt(1.0 - p[q]);
    const double a1 = std::sqrt(p[q]);
    for (std::size_t i = 0; i < filled; ++i) {
      state.amps_[filled + i] = state.amps_[i] * a1;
      state.amps_[i] *= a0;
    }
    filled *= 2;
  }
  return state;
}

void StateVector::check_qubit(int qubit) const {
  if (qubit < 0 || qubit >= n_qubits_) throw std::invalid_argument("qubit index out of range");
}

void StateVector::apply_1q(int qubit, const Gate1Q& g) {
  check_qubit(qubit);
  active_kernels().apply_1q(amps_.data(), amps_.size(), qubit, g.m.data());
}

void StateVector::apply_2q(int q0, int q1, const Gate2Q& g) {
  check_qubit(q0);
  check_qubit(q1);
  if (q0 == q1) throw std::invalid_argument("apply_2q: qubits must differ");
  active_kernels().apply_2q(amps_.data(), amps_.size(), q0, q1, g.m.data());
}

void StateVector::apply_phase_bit(int qubit, c64 phase) {
  check_qubit(qubit);
  if (std::abs(std::abs(phase) - 1.0) > 1e-10)
    throw std::invalid_argument("apply_phase_bit: |phase| must be 1");
  active_kernels().apply_phase_bit(amps_.data(), amps_.size(), qubit, phase);
}

void StateVector::apply_cost_phase(double gamma, std::span<const std::int64_t> values) {
  if (static_cast<int>(values.size()) != n_qubits_)
    throw std::invalid_argument("apply_cost_phase: values length != n_qubits");
  for (int q = 0; q < n_qubits_; ++q) {
    const double angle = -gamma * static_cast<double>(values[q]);
    active_kernels().apply_phase_bit(amps_.data(), amps_.size(), q,
                                     c64{std::cos(angle), std::sin(angle)});
  }
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> probs(amps_.size());
  active_kernels().probabilities(amps_.data(), amps_.size(), probs.data());
  return probs;
}

double StateVector::expectation(std::span<const double> f) const {
  if (f.size() != amps_.size())
    throw std::invalid_argument("expectation: table length != 2^n_qubits");
  return active_kernels().expectation(amps_.data(), amps_.size(), f.data());
}

double StateVector::norm_sqr() const {
  double total = 0.0;
  for (const c64& a : amps_) total += a.real() * a.real() + a.imag() * a.imag();
  return total;
}

std::vector<Bitstring> sample(const StateVector& state, int shots, RandomStream& stream) {
  if (shots < 0) throw std::invalid_argument("sample: negative shot count");
  const std::vector<double> probs = state.probabilities();
  std::vector<double> cdf(probs.size());
  double run = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    run += probs[i];
    cdf[i] = run;
  }
  std::vector<Bitstring> draws;
  draws.reserve(shots);
  for (int shot = 0; shot < shots; ++shot) {
    const double u = stream.next_double() * run;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t idx = static_cast<std::size_t>(it - cdf.begin());
    if (idx >= probs.size()) idx = probs.size() - 1;
    draws.push_back(from_mask(static_cast<std::uint32_t>(idx), state.n_qubits()));
  }
  return draws;
}

std::vector<std::int64_t> objective_table(const KnapsackInstance& inst) {
  inst.validate();
  if (inst.n > 26) throw std::invalid_argument("objective_table: n > 26");
  const std::size_t size = std::size_t{1} << inst.n;
  std::vector<std::int64_t> weight(size), value(size), f(size);
  weight[0] = value[0] = f[0] = 0;
  for (std::size_t x = 1; x < size; ++x) {
    const int bit = std::countr_zero(x);
    const std::size_t parent = x & (x - 1);
    weight[x] = weight[parent] + inst.weights[bit];
    value[x] = value[parent] + inst.values[bit];
    f[x] = weight[x] <= inst.capacity ? value[x] : 0;
  }
  return f;
}

ObjectiveStats exact_objective_stats(const StateVector& state, const KnapsackInstance& inst) {
  if (state.n_qubits() != inst.n)
    throw std::invalid_argument("exact_objective_stats: qubit count != n");
  const std::vector<std::int64_t> f = objective_table(inst);
  const std::vector<double> probs = state.probabilities();
  ObjectiveStats stats;
  for (std::size_t x = 0; x < probs.size(); ++x) {
    stats.value_distribution[f[x]] += probs[x];
    stats.expected += probs[x] * static_cast<double>(f[x]);
  }
  return stats;
}

}  // namespace qkp::qsim
