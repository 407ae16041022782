#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "qkp/instance.hpp"
#include "qkp/qsim/kernels.hpp"
#include "qkp/random.hpp"

namespace qkp::qsim {

// Single-qubit gate, row major. The checked factory enforces unitarity.
struct Gate1Q {
  std::array<c64, 4> m;

  static Gate1Q checked(const std::array<c64, 4>& m, double tol = 1e-10);
};

// Two-qubit gate in the local basis l = bit(q0) + 2*bit(q1), row major.
struct Gate2Q {
  std::array<c64, 16> m;

  static Gate2Q checked(const std::array<c64, 16>& m, double tol = 1e-10);
};

// Dense statevector, little endian: bit i of a basis index is qubit i.
// Operations mutate in place and preserve the norm to 1e-10.
class StateVector {
public:
  explicit StateVector(int n_qubits);  // |0...0>

  // prod_i (sqrt(1-p_i)|0> + sqrt(p_i)|1>); each p_i must lie in [0,1]
  static StateVector biased_product(std::span<const double> p);

  int n_qubits() const { return n_qubits_; }
  std::size_t size() const { return amps_.size(); }
  std::span<c64> amplitudes() { return amps_; }
  std::span<const c64> amplitudes() const { return amps_; }

  void apply_1q(int qubit, const Gate1Q& g);
  void apply_2q(int q0, int q1, const Gate2Q& g);
  void apply_phase_bit(int qubit, c64 phase);
  // Multiplies amplitude of |x> by exp(-i gamma sum_i values[i] x_i); one
  // diagonal pass per qubit, so it commutes with any other diagonal operation.
  void apply_cost_phase(double gamma, std::span<const std::int64_t> values);

  std::vector<double> probabilities() const;
  double expectation(std::span<const double> f) const;  // sum |amp_x|^2 f[x]
  double norm_sqr() const;

private:
  int n_qubits_;
  std::vector<c64> amps_;

  void check_qubit(int qubit) const;
};

// shots independent draws from the measurement distribution; deterministic
// given the stream state.
std::vector<Bitstring> sample(const StateVector& state, int shots, RandomStream& stream);

struct ObjectiveStats {
  double expected = 0.0;
  std::map<std::int64_t, double> value_distribution;  // value -> probability
};

// Requires state.n_qubits() == inst.n. Infeasible assignments contribute
// value 0, so `expected` is an unconditional expectation.
ObjectiveStats exact_objective_stats(const StateVector& state, const KnapsackInstance& inst);

// f[mask] = objective_value(inst, mask) for every mask; requires n <= 26.
std::vector<std::int64_t> objective_table(const KnapsackInstance& inst);

}  // namespace qkp::qsim
