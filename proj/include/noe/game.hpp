#pragma once

// Per-receiver rate utilities, their own-variable gradients, the
// pseudo-gradient, the weighted social functions f and sigma, and the
// diagonal-strict-concavity bilinear form. Rates are in nats.

#include <vector>

#include "noe/channel.hpp"

namespace noe {

struct Scheme {
  enum class Kind { LinearPrecoding, Dpc };
  Kind kind = Kind::Dpc;
  // Encoding order, 0-based, encoding_order[0] encoded first. Empty means the
  // default (K-1, K-2, ..., 0): receiver K first, receiver 1 last.
  std::vector<int> encoding_order;

  static Scheme linear_precoding() { return {Kind::LinearPrecoding, {}}; }
  static Scheme dpc() { return {Kind::Dpc, {}}; }
  static Scheme dpc_with_order(std::vector<int> order) {
    return {Kind::Dpc, std::move(order)};
  }
};

// Strictly positive weights r in R_++^K indexing the normalized-equilibrium
// family.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> r);
  int size() const { return static_cast<int>(r_.size()); }
  double operator[](int i) const { return r_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& values() const { return r_; }
  WeightVector scaled(double c) const;

 private:
  std::vector<double> r_;
};

struct PseudoGradient {
  std::vector<SymMatrix> blocks;  // block i = r_i * grad_i v_i(Q), t x t
  double fro_norm() const;
};

// Rate of receiver k (0-based) at profile Q; >= 0 on the feasible set.
double utility(const BroadcastChannel& ch, const Scheme& scheme,
               const StrategyProfile& q, int k);

// d v_k / d Q_k; symmetric PSD.
SymMatrix grad_utility(const BroadcastChannel& ch, const Scheme& scheme,
                       const StrategyProfile& q, int k);

PseudoGradient pseudo_gradient(const BroadcastChannel& ch, const Scheme& scheme,
                               const StrategyProfile& q, const WeightVector& r);

// f(P,Q,r) = sum_i r_i v_i(Q_1,...,Q_{i-1},P_i,Q_{i+1},...,Q_K)
double social_f(const BroadcastChannel& ch, const Scheme& scheme,
                const StrategyProfile& p, const StrategyProfile& q,
                const WeightVector& r);

// sigma(Q,r) = sum_i r_i v_i(Q)
double sigma_weighted(const BroadcastChannel& ch, const Scheme& scheme,
                      const StrategyProfile& q, const WeightVector& r);

// Tr[ sum_i (Q1_i - Q0_i) g_i(Q0,r) + (Q0_i - Q1_i) g_i(Q1,r) ]; symmetric in
// (Q0,Q1); positivity over separated pairs certifies NoE uniqueness at r.
double dsc_bilinear(const BroadcastChannel& ch, const Scheme& scheme,
                    const StrategyProfile& q0, const StrategyProfile& q1,
                    const WeightVector& r);

// Receivers whose signals interfere with k under the scheme (those encoded
// after k for DPC; everyone else for linear precoding).
std::vector<int> interference_set(const Scheme& scheme, int players, int k);

// H X H^T (r x r) and H^T X H (t x t); identity gains short-circuit.
SymMatrix congruence_hxh(const Mat& h, const SymMatrix& x);
SymMatrix congruence_htxh(const Mat& h, const SymMatrix& x);

// N_k + H_k (sum of interfering Q_j) H_k^T, the P-independent part of
// receiver k's covariance at profile Q.
SymMatrix interference_noise(const BroadcastChannel& ch, const Scheme& scheme,
                             const StrategyProfile& q, int k);

}  // namespace noe
