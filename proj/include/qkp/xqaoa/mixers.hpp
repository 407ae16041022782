#pragma once

#include <span>

#include "qkp/qsim/state.hpp"

namespace qkp::xqaoa {

using qsim::c64;

// The 2x2 involution -(1-2p) Z - 2 sqrt(p(1-p)) X. Its -1 eigenvector is the
// biased qubit sqrt(1-p)|0> + sqrt(p)|1>, its +1 eigenvector the orthogonal
// complement; p = 0 gives -Z and p = 1/2 gives -X.
qsim::Gate1Q hourglass_matrix(double p);

// exp(-i beta H) for the involution above: cos(beta) I - i sin(beta) H.
// pi-periodic up to global phase (adding pi flips the overall sign).
qsim::Gate1Q hourglass_evolution(double p, double beta);

// One hourglass evolution per qubit, biased by p[q].
void apply_hourglass_mixer(qsim::StateVector& state, std::span<const double> p, double beta);

// Joint distribution of two Bernoulli marginals coupled by the FGM copula
// with parameter theta in [-1, 1]:
//   c(x1,x2) = marginal product +- delta,  delta = theta p1 p2 (1-p1)(1-p2).
// Stored in factored form so the entries are products of non-negative terms.
struct CopulaJoint {
  double p1 = 0.0;
  double p2 = 0.0;
  double theta = 0.0;
  double delta = 0.0;
  std::array<double, 4> c{};  // c[2*x1 + x2]

  double operator()(int x1, int x2) const { return c[2 * x1 + x2]; }
  // P(x2=1 | x1), in closed form so degenerate marginals stay defined:
  //   given x1=1: p2 (1 + theta (1-p1)(1-p2));  given x1=0: p2 (1 - theta p1 (1-p2))
  double cond_given1 = 0.0;
  double cond_given0 = 0.0;
};

CopulaJoint copula_joint(double p1, double p2, double theta);

// Real orthogonal 4x4 preparing sqrt(c(x1,x2)) from |00>: a y-rotation on the
// first qubit to its marginal, then y-rotations on the second conditioned on
// the first.
qsim::Gate2Q r_p12_gate(const CopulaJoint& joint);

// exp(-i beta B) where B has eigenvalues (-2, 0, 0, +2) in the rotated basis,
// with the copula state R|00> at -2. Exactly pi-periodic in beta. theta = 0
// factors into the two single-qubit hourglass evolutions.
qsim::Gate2Q copula_pair_evolution(const CopulaJoint& joint, double beta);

void apply_copula_pair(qsim::StateVector& state, int q_first, int q_second, double p_first,
                       double p_second, double theta, double beta);

// Trotterized ring: pairs (ring[0],ring[1]), (ring[2],ring[3]), ... first,
// then the offset layer (ring[1],ring[2]), ..., (ring[n-1],ring[0]).
// Needs an even qubit count. ring must be a permutation of 0..n-1; when
// empty, the identity order is used. At theta = 0 one ring application
// equals the hourglass mixer at angle 2*beta, because every qubit appears in
// exactly one pair per layer.
void apply_ring_copula(qsim::StateVector& state, std::span<const double> p, double theta,
                       double beta, std::span<const int> ring = {});

// Per-pair coupling parameters, indexed in application order: the n/2 pairs
// of the first layer, then the n/2 pairs of the offset layer.
void apply_ring_copula(qsim::StateVector& state, std::span<const double> p,
                       std::span<const double> thetas, double beta,
                       std::span<const int> ring = {});

}  // namespace qkp::xqaoa
