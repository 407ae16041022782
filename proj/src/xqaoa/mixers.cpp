#include "qkp/xqaoa/mixers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qkp/errors.hpp"

namespace qkp::xqaoa {

namespace {

void check_prob(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument(std::string(what) + " not in [0,1]");
}

// [[sqrt(1-q), -sqrt(q)], [sqrt(q), sqrt(1-q)]]: rotates |0> to the biased
// qubit with P(1) = q. Rounding guard keeps tiny negatives out of the sqrt.
std::array<double, 4> ry_from_prob(double q) {
  const double qq = std::clamp(q, 0.0, 1.0);
  const double c = std::sqrt(1.0 - qq);
  const double s = std::sqrt(qq);
  return {c, -s, s, c};
}

}  // namespace

qsim::Gate1Q hourglass_matrix(double p) {
  check_prob(p, "hourglass_matrix: p");
  const double c = 1.0 - 2.0 * p;
  const double s = 2.0 * std::sqrt(p * (1.0 - p));
  return qsim::Gate1Q::checked({c64{-c, 0.0}, c64{-s, 0.0}, c64{-s, 0.0}, c64{c, 0.0}});
}

qsim::Gate1Q hourglass_evolution(double p, double beta) {
  check_prob(p, "hourglass_evolution: p");
  const double c = 1.0 - 2.0 * p;
  const double s = 2.0 * std::sqrt(p * (1.0 - p));
  const double cb = std::cos(beta);
  const double sb = std::sin(beta);
  // cos(beta) I - i sin(beta) [[-c,-s],[-s,c]]
  return qsim::Gate1Q::checked(
      {c64{cb, sb * c}, c64{0.0, sb * s}, c64{0.0, sb * s}, c64{cb, -sb * c}});
}

void apply_hourglass_mixer(qsim::StateVector& state, std::span<const double> p, double beta) {
  if (static_cast<int>(p.size()) != state.n_qubits())
    throw std::invalid_argument("apply_hourglass_mixer: p length != n_qubits");
  for (int q = 0; q < state.n_qubits(); ++q)
    state.apply_1q(q, hourglass_evolution(p[q], beta));
}

CopulaJoint copula_joint(double p1, double p2, double theta) {
  check_prob(p1, "copula_joint: p1");
  check_prob(p2, "copula_joint: p2");
  if (!(theta >= -1.0 && theta <= 1.0))
    throw std::invalid_argument("copula_joint: theta not in [-1,1]");
  CopulaJoint j;
  j.p1 = p1;
  j.p2 = p2;
  j.theta = theta;
  const double q1 = 1.0 - p1;
  const double q2 = 1.0 - p2;
  j.delta = theta * p1 * p2 * q1 * q2;
  j.c[0] = q1 * q2 * (1.0 + theta * p1 * p2);  // c(0,0)
  j.c[1] = q1 * p2 * (1.0 - theta * p1 * q2);  // c(0,1)
  j.c[2] = p1 * q2 * (1.0 - theta * q1 * p2);  // c(1,0)
  j.c[3] = p1 * p2 * (1.0 + theta * q1 * q2);  // c(1,1)
  j.cond_given1 = p2 * (1.0 + theta * q1 * q2);
  j.cond_given0 = p2 * (1.0 - theta * p1 * q2);
  return j;
}

qsim::Gate2Q r_p12_gate(const CopulaJoint& joint) {
  const std::array<double, 4> first = ry_from_prob(joint.p1);
  const std::array<double, 4> on1 = ry_from_prob(joint.cond_given1);
  const std::array<double, 4> on0 = ry_from_prob(joint.cond_given0);
  // (conditioned rotation on x2) * (marginal rotation on x1), basis l = x1 + 2 x2
  std::array<c64, 16> m{};
  for (int x1r = 0; x1r < 2; ++x1r) {
    const std::array<double, 4>& cond = x1r == 1 ? on1 : on0;
    for (int x2r = 0; x2r < 2; ++x2r)
      for (int x1c = 0; x1c < 2; ++x1c)
        for (int x2c = 0; x2c < 2; ++x2c)
          m[(x1r + 2 * x2r) * 4 + (x1c + 2 * x2c)] =
              cond[x2r * 2 + x2c] * first[x1r * 2 + x1c];
  }
  return qsim::Gate2Q::checked(m);
}

qsim::Gate2Q copula_pair_evolution(const CopulaJoint& joint, double beta) {
  const qsim::Gate2Q r = r_p12_gate(joint);
  const c64 d[4] = {std::polar(1.0, 2.0 * beta), 1.0, 1.0, std::polar(1.0, -2.0 * beta)};
  // R diag(d) R^T; R is real orthogonal
  std::array<c64, 16> m{};
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) {
      c64 sum = 0.0;
      for (int l = 0; l < 4; ++l) sum += r.m[j * 4 + l] * d[l] * r.m[k * 4 + l];
      m[j * 4 + k] = sum;
    }
  return qsim::Gate2Q::checked(m);
}

void apply_copula_pair(qsim::StateVector& state, int q_first, int q_second, double p_first,
                       double p_second, double theta, double beta) {
  state.apply_2q(q_first, q_second,
                 copula_pair_evolution(copula_joint(p_first, p_second, theta), beta));
}

namespace {

std::vector<int> resolve_ring(int n, std::span<const int> ring) {
  std::vector<int> order;
  if (ring.empty()) {
    order.resize(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    return order;
  }
  if (static_cast<int>(ring.size()) != n)
    throw std::invalid_argument("apply_ring_copula: ring length != n_qubits");
  std::vector<char> seen(n, 0);
  for (int q : ring) {
    if (q < 0 || q >= n || seen[q])
      throw std::invalid_argument("apply_ring_copula: ring is not a permutation");
    seen[q] = 1;
  }
  return {ring.begin(), ring.end()};
}

}  // namespace

void apply_ring_copula(qsim::StateVector& state, std::span<const double> p,
                       std::span<const double> thetas, double beta, std::span<const int> ring) {
  const int n = state.n_qubits();
  if (static_cast<int>(p.size()) != n)
    throw std::invalid_argument("apply_ring_copula: p length != n_qubits");
  if (n % 2 != 0)
    throw UnsupportedShape("apply_ring_copula: ring pairing needs an even qubit count");
  if (static_cast<int>(thetas.size()) != n)
    throw std::invalid_argument("apply_ring_copula: need one theta per pair (n total)");
  const std::vector<int> order = resolve_ring(n, ring);

  int pair_index = 0;
  auto couple = [&](int pos_a, int pos_b) {
    const int qa = order[pos_a];
    const int qb = order[pos_b];
    apply_copula_pair(state, qa, qb, p[qa], p[qb], thetas[pair_index++], beta);
  };

  for (int j = 0; j + 1 < n; j += 2) couple(j, j + 1);
  for (int j = 1; j + 1 < n; j += 2) couple(j, j + 1);
  couple(n - 1, 0);
}

void apply_ring_copula(qsim::StateVector& state, std::span<const double> p, double theta,
                       double beta, std::span<const int> ring) {
  const std::vector<double> thetas(state.n_qubits(), theta);
  apply_ring_copula(state, p, thetas, beta, ring);
}

}  // namespace qkp::xqaoa
