#include "noe/game.hpp"

#include <algorithm>
#include <cmath>

namespace noe {

WeightVector::WeightVector(std::vector<double> r) : r_(std::move(r)) {
  if (r_.empty()) throw DimensionError("WeightVector: empty");
  for (double v : r_)
    if (!(v > 0.0)) throw DomainError("WeightVector: weights must be positive");
}

WeightVector WeightVector::scaled(double c) const {
  std::vector<double> s = r_;
  for (double& v : s) v *= c;
  return WeightVector(std::move(s));
}

double PseudoGradient::fro_norm() const {
  double s = 0.0;
  for (const auto& b : blocks) s += kernels::sumsq(b.data(), b.size());
  return std::sqrt(s);
}

namespace {

void check_scheme(const Scheme& scheme, int players) {
  if (scheme.kind == Scheme::Kind::Dpc && !scheme.encoding_order.empty()) {
    if (static_cast<int>(scheme.encoding_order.size()) != players)
      throw DimensionError("Scheme: encoding order length does not equal K");
    std::vector<int> seen(players, 0);
    for (int e : scheme.encoding_order) {
      if (e < 0 || e >= players || seen[e]++)
        throw DomainError("Scheme: encoding order is not a permutation");
    }
  }
}

bool is_identity(const Mat& h) {
  if (h.rows != h.cols) return false;
  for (int i = 0; i < h.rows; ++i)
    for (int j = 0; j < h.cols; ++j)
      if (h(i, j) != (i == j ? 1.0 : 0.0)) return false;
  return true;
}

}  // namespace

SymMatrix congruence_hxh(const Mat& h, const SymMatrix& x) {
  if (h.cols != x.dim()) throw DimensionError("congruence_hxh: shape mismatch");
  if (is_identity(h)) return x;
  const Mat hx = matmul(h, x.to_mat());  // r x t
  Mat hxt(h.cols, h.rows);
  for (int i = 0; i < h.rows; ++i)
    for (int j = 0; j < h.cols; ++j) hxt(j, i) = hx(i, j);
  return symmetrize(matmul(h, hxt));  // (H X H^T)^T symmetrized
}

SymMatrix congruence_htxh(const Mat& h, const SymMatrix& x) {
  if (h.rows != x.dim()) throw DimensionError("congruence_htxh: shape mismatch");
  if (is_identity(h)) return x;
  const Mat xh = matmul(x.to_mat(), h);  // r x t
  return symmetrize(matmul_tn(h, xh));   // t x t
}

std::vector<int> interference_set(const Scheme& scheme, int players, int k) {
  std::vector<int> out;
  if (scheme.kind == Scheme::Kind::LinearPrecoding) {
    for (int i = 0; i < players; ++i)
      if (i != k) out.push_back(i);
    return out;
  }
  if (scheme.encoding_order.empty()) {
    // default order (K, K-1, ..., 1): interference from receivers 1..k-1
    for (int i = 0; i < k; ++i) out.push_back(i);
    return out;
  }
  const auto& order = scheme.encoding_order;
  const auto pos = std::find(order.begin(), order.end(), k);
  for (auto it = pos + 1; it != order.end(); ++it) out.push_back(*it);
  return out;
}

SymMatrix interference_noise(const BroadcastChannel& ch, const Scheme& scheme,
                             const StrategyProfile& q, int k) {
  check_scheme(scheme, ch.K);
  SymMatrix interf(ch.t);
  for (int i : interference_set(scheme, ch.K, k)) interf += q[i];
  return ch.N[k] + congruence_hxh(ch.H[k], interf);
}

double utility(const BroadcastChannel& ch, const Scheme& scheme,
               const StrategyProfile& q, int k) {
  const SymMatrix den = interference_noise(ch, scheme, q, k);
  const SymMatrix num = den + congruence_hxh(ch.H[k], q[k]);
  return logdet_pd(num) - logdet_pd(den);
}

SymMatrix grad_utility(const BroadcastChannel& ch, const Scheme& scheme,
                       const StrategyProfile& q, int k) {
  const SymMatrix cov =
      interference_noise(ch, scheme, q, k) + congruence_hxh(ch.H[k], q[k]);
  return congruence_htxh(ch.H[k], inverse_spd(cov));
}

PseudoGradient pseudo_gradient(const BroadcastChannel& ch, const Scheme& scheme,
                               const StrategyProfile& q, const WeightVector& r) {
  if (r.size() != ch.K)
    throw DimensionError("pseudo_gradient: weight count does not equal K");
  PseudoGradient g;
  g.blocks.reserve(ch.K);
  for (int i = 0; i < ch.K; ++i) {
    SymMatrix b = grad_utility(ch, scheme, q, i);
    b *= r[i];
    g.blocks.push_back(std::move(b));
  }
  return g;
}

double social_f(const BroadcastChannel& ch, const Scheme& scheme,
                const StrategyProfile& p, const StrategyProfile& q,
                const WeightVector& r) {
  p.require_same_shape(q);
  if (r.size() != ch.K)
    throw DimensionError("social_f: weight count does not equal K");
  double acc = 0.0;
  StrategyProfile mixed = q;
  for (int i = 0; i < ch.K; ++i) {
    mixed[i] = p[i];
    acc += r[i] * utility(ch, scheme, mixed, i);
    mixed[i] = q[i];
  }
  return acc;
}

double sigma_weighted(const BroadcastChannel& ch, const Scheme& scheme,
                      const StrategyProfile& q, const WeightVector& r) {
  if (r.size() != ch.K)
    throw DimensionError("sigma_weighted: weight count does not equal K");
  double acc = 0.0;
  for (int i = 0; i < ch.K; ++i) acc += r[i] * utility(ch, scheme, q, i);
  return acc;
}

double dsc_bilinear(const BroadcastChannel& ch, const Scheme& scheme,
                    const StrategyProfile& q0, const StrategyProfile& q1,
                    const WeightVector& r) {
  q0.require_same_shape(q1);
  const PseudoGradient g0 = pseudo_gradient(ch, scheme, q0, r);
  const PseudoGradient g1 = pseudo_gradient(ch, scheme, q1, r);
  double acc = 0.0;
  for (int i = 0; i < ch.K; ++i) {
    const SymMatrix diff = q1[i] - q0[i];
    acc += SymMatrix::dot(diff, g0.blocks[i]) - SymMatrix::dot(diff, g1.blocks[i]);
  }
  return acc;
}

}  // namespace noe
