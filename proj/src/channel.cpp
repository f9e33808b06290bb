#include "noe/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "noe/rng.hpp"

namespace noe {

ValidationReport validate(const BroadcastChannel& ch) {
  ValidationReport rep;
  auto flag = [&](const std::string& s) { rep.violations.push_back(s); };

  if (ch.K < 1) flag("K must be >= 1");
  if (ch.t < 1) flag("t must be >= 1");
  if (static_cast<int>(ch.rx_dims.size()) != ch.K)
    flag("rx_dims length does not equal K");
  if (static_cast<int>(ch.H.size()) != ch.K) flag("H list length does not equal K");
  if (static_cast<int>(ch.N.size()) != ch.K) flag("N list length does not equal K");

  const int k = std::min({ch.K, static_cast<int>(ch.rx_dims.size()),
                          static_cast<int>(ch.H.size()),
                          static_cast<int>(ch.N.size())});
  for (int i = 0; i < k; ++i) {
    std::ostringstream who;
    who << "receiver " << (i + 1) << ": ";
    if (ch.rx_dims[i] < 1) flag(who.str() + "rx dim must be >= 1");
    if (ch.H[i].rows != ch.rx_dims[i] || ch.H[i].cols != ch.t) {
      std::ostringstream os;
      os << who.str() << "H has shape " << ch.H[i].rows << "x" << ch.H[i].cols
         << ", expected " << ch.rx_dims[i] << "x" << ch.t;
      flag(os.str());
    }
    if (ch.N[i].dim() != ch.rx_dims[i]) {
      flag(who.str() + "noise covariance dimension does not match rx dim");
    } else {
      const double mineig = min_eigenvalue(ch.N[i]);
      if (mineig <= 1e-12 * std::max(1.0, ch.N[i].fro_norm()))
        flag(who.str() + "noise covariance not positive definite");
    }
  }

  if (const auto* cap = std::get_if<CovarianceCap>(&ch.constraint)) {
    if (cap->S.dim() != ch.t)
      flag("constraint: S dimension does not match t");
    else if (!is_psd(cap->S))
      flag("constraint: S is not PSD");
  } else {
    const auto& pw = std::get<SumPower>(ch.constraint);
    if (!(pw.p_tot > 0.0)) flag("constraint: p_tot must be positive");
  }
  return rep;
}

namespace {

bool is_identity(const Mat& h, double tol) {
  if (h.rows != h.cols) return false;
  for (int i = 0; i < h.rows; ++i)
    for (int j = 0; j < h.cols; ++j)
      if (std::fabs(h(i, j) - (i == j ? 1.0 : 0.0)) > tol) return false;
  return true;
}

bool chain_ordered(const std::vector<SymMatrix>& n, const std::vector<int>& order) {
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    if (!loewner_leq(n[order[i]], n[order[i + 1]], kPsdTol)) return false;
  return true;
}

}  // namespace

ChannelClass classify(const BroadcastChannel& ch) {
  const ValidationReport rep = validate(ch);
  if (!rep.ok())
    throw DomainError("classify: invalid channel: " + rep.violations.front());

  ChannelClass cls;
  for (int i = 0; i < ch.K; ++i)
    if (ch.rx_dims[i] != ch.t || !is_identity(ch.H[i], 1e-12)) {
      cls.tag = ChannelTag::General;
      return cls;
    }
  cls.tag = ChannelTag::Aligned;

  // Loewner order is partial; a trace sort is a candidate linear extension.
  // If the sorted chain fails, fall back to exhaustive search for K <= 8.
  std::vector<int> order(ch.K);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return ch.N[a].trace() < ch.N[b].trace();
  });
  if (chain_ordered(ch.N, order)) {
    cls.tag = ChannelTag::AlignedDegraded;
    cls.degraded_order = order;
    return cls;
  }
  if (ch.K <= 8) {
    std::iota(order.begin(), order.end(), 0);
    do {
      if (chain_ordered(ch.N, order)) {
        cls.tag = ChannelTag::AlignedDegraded;
        cls.degraded_order = order;
        return cls;
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return cls;
}

BroadcastChannel make_adbc(const std::vector<SymMatrix>& noise,
                           const SymMatrix& s) {
  if (noise.empty()) throw DimensionError("make_adbc: empty noise list");
  const int t = noise.front().dim();
  for (std::size_t i = 0; i + 1 < noise.size(); ++i)
    if (!loewner_leq(noise[i], noise[i + 1], kPsdTol)) {
      std::ostringstream os;
      os << "make_adbc: degradedness violated at pair (" << (i + 1) << ","
         << (i + 2) << ")";
      throw DomainError(os.str());
    }

  BroadcastChannel ch;
  ch.K = static_cast<int>(noise.size());
  ch.t = t;
  ch.rx_dims.assign(ch.K, t);
  ch.N = noise;
  for (int i = 0; i < ch.K; ++i) ch.H.push_back(Mat::identity(t));
  ch.constraint = CovarianceCap{s};

  const ValidationReport rep = validate(ch);
  if (!rep.ok())
    throw DomainError("make_adbc: invalid inputs: " + rep.violations.front());
  return ch;
}

namespace {

SymMatrix random_gram(Rng& rng, int t) {
  Mat a(t, t);
  for (auto& v : a.a) v = rng.normal();
  Mat at(t, t);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) at(i, j) = a(j, i);
  return symmetrize(matmul(a, at));
}

}  // namespace

BroadcastChannel random_instance(std::uint64_t seed, ChannelTag cls, int K,
                                 int t, double spread) {
  if (K < 1 || t < 1) throw DimensionError("random_instance: K,t must be >= 1");
  Rng rng(seed);

  BroadcastChannel ch;
  ch.K = K;
  ch.t = t;
  ch.rx_dims.assign(K, t);
  ch.constraint = CovarianceCap{SymMatrix::scaled_identity(t, static_cast<double>(t))};

  switch (cls) {
    case ChannelTag::AlignedDegraded: {
      SymMatrix n = random_gram(rng, t);
      n += SymMatrix::scaled_identity(t, 0.1);
      ch.N.push_back(n);
      for (int k = 1; k < K; ++k) {
        n.add_scaled(spread, random_gram(rng, t));
        ch.N.push_back(n);
      }
      for (int i = 0; i < K; ++i) ch.H.push_back(Mat::identity(t));
      break;
    }
    case ChannelTag::Aligned: {
      for (int i = 0; i < K; ++i) {
        SymMatrix n = random_gram(rng, t);
        n += SymMatrix::scaled_identity(t, 0.1);
        ch.N.push_back(n);
        ch.H.push_back(Mat::identity(t));
      }
      break;
    }
    case ChannelTag::General: {
      for (int i = 0; i < K; ++i) {
        SymMatrix n = random_gram(rng, t);
        n += SymMatrix::scaled_identity(t, 0.1);
        ch.N.push_back(n);
        Mat h(t, t);
        for (auto& v : h.a) v = rng.normal();
        ch.H.push_back(std::move(h));
      }
      break;
    }
  }
  return ch;
}

Projection project_feasible(const StrategyProfile& qhat, const Constraint& c,
                            const ProjectOptions& opts) {
  if (const auto* cap = std::get_if<CovarianceCap>(&c))
    return project_feasible(qhat, cap->S, opts);
  return project_feasible_sum_power(qhat, std::get<SumPower>(c).p_tot, opts);
}

bool is_feasible(const StrategyProfile& q, const Constraint& c, double tol) {
  if (const auto* cap = std::get_if<CovarianceCap>(&c))
    return is_feasible(q, cap->S, tol);
  return is_feasible_sum_power(q, std::get<SumPower>(c).p_tot, tol);
}

}  // namespace noe
