#include "noe/matrix_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace noe {

SymMatrix symmetrize(const Mat& m) {
  if (m.rows != m.cols) throw DimensionError("symmetrize: input not square");
  return SymMatrix::from_rows(m.rows, m.a);
}

double SymMatrix::fro_norm() const {
  return std::sqrt(kernels::sumsq(a_.data(), a_.size()));
}

double SymMatrix::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::fabs(v));
  return m;
}

double SymMatrix::dist(const SymMatrix& x, const SymMatrix& y) {
  x.require_same_dim(y);
  return std::sqrt(kernels::sumsq_diff(x.a_.data(), y.a_.data(), x.a_.size()));
}

double StrategyProfile::fro_norm() const {
  double s = 0.0;
  for (const auto& m : mats_) s += kernels::sumsq(m.data(), m.size());
  return std::sqrt(s);
}

double StrategyProfile::dist(const StrategyProfile& x, const StrategyProfile& y) {
  x.require_same_shape(y);
  double s = 0.0;
  for (int i = 0; i < x.players(); ++i)
    s += kernels::sumsq_diff(x[i].data(), y[i].data(), x[i].size());
  return std::sqrt(s);
}

namespace {

constexpr int kMaxJacobiSweeps = 64;

double offdiag_norm(const Mat& a) {
  const int n = a.rows;
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
  return std::sqrt(2.0 * s);
}

}  // namespace

EigResult eig_sym(const SymMatrix& m) {
  const int n = m.dim();
  Mat a = m.to_mat();
  Mat v = Mat::identity(n);

  const double fro = m.fro_norm();
  const double stop = 1e-15 * (fro + 1e-300);

  int sweep = 0;
  for (; sweep < kMaxJacobiSweeps; ++sweep) {
    if (offdiag_norm(a) <= stop) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::fabs(apq) <= 1e-300) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        const double theta = 0.5 * (aqq - app) / apq;
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // A <- J^T A J with J the (p,q) rotation
        for (int i = 0; i < n; ++i) {
          const double aip = a(i, p);
          const double aiq = a(i, q);
          a(i, p) = c * aip - s * aiq;
          a(i, q) = s * aip + c * aiq;
        }
        for (int i = 0; i < n; ++i) {
          const double api = a(p, i);
          const double aqi = a(q, i);
          a(p, i) = c * api - s * aqi;
          a(q, i) = s * api + c * aqi;
        }
        // rotations commute with exact symmetry only in exact arithmetic
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        for (int i = 0; i < n; ++i) {
          const double vip = v(i, p);
          const double viq = v(i, q);
          v(i, p) = c * vip - s * viq;
          v(i, q) = s * vip + c * viq;
        }
      }
    }
  }

  if (sweep == kMaxJacobiSweeps && offdiag_norm(a) > stop * 1e3) {
    std::ostringstream os;
    os << "eig_sym: Jacobi failed to converge in " << kMaxJacobiSweeps
       << " sweeps (dim=" << n << ", ||M||_F=" << fro
       << ", off-diagonal residual=" << offdiag_norm(a) << ")";
    throw NumericalError(os.str());
  }

  EigResult r;
  r.values.resize(n);
  for (int i = 0; i < n; ++i) r.values[i] = a(i, i);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return r.values[x] > r.values[y]; });

  EigResult out;
  out.values.resize(n);
  out.vectors = Mat(n, n);
  for (int j = 0; j < n; ++j) {
    out.values[j] = r.values[order[j]];
    for (int i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  return out;
}

double min_eigenvalue(const SymMatrix& m) {
  return eig_sym(m).values.back();
}

bool is_psd(const SymMatrix& m, double tol) {
  return min_eigenvalue(m) >= -tol;
}

bool loewner_leq(const SymMatrix& a, const SymMatrix& b, double tol) {
  return is_psd(b - a, tol);
}

double logdet_pd(const SymMatrix& m) {
  const EigResult e = eig_sym(m);
  const double floor = 1e-12 * std::max(1.0, m.fro_norm());
  if (e.values.back() <= floor) {
    std::ostringstream os;
    os << "logdet_pd: matrix not positive definite (min eigenvalue "
       << e.values.back() << ", required > " << floor << ")";
    throw DomainError(os.str());
  }
  double s = 0.0;
  for (double v : e.values) s += std::log(v);
  return s;
}

namespace {

// V diag(f(lambda)) V^T, symmetrized.
template <class F>
SymMatrix spectral_map(const SymMatrix& m, F&& f) {
  const int n = m.dim();
  const EigResult e = eig_sym(m);
  // scale columns of V by f(lambda), multiply by V^T
  Mat scaled = e.vectors;
  for (int j = 0; j < n; ++j) {
    const double fj = f(e.values[j]);
    for (int i = 0; i < n; ++i) scaled(i, j) *= fj;
  }
  Mat vt(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) vt(i, j) = e.vectors(j, i);
  return symmetrize(matmul(scaled, vt));
}

}  // namespace

SymMatrix psd_part(const SymMatrix& m) {
  return spectral_map(m, [](double l) { return std::max(l, 0.0); });
}

SymMatrix inverse_spd(const SymMatrix& m) {
  const double floor = 1e-12 * std::max(1.0, m.fro_norm());
  return spectral_map(m, [&](double l) {
    if (l <= floor) {
      std::ostringstream os;
      os << "inverse_spd: matrix not positive definite (eigenvalue " << l << ")";
      throw DomainError(os.str());
    }
    return 1.0 / l;
  });
}

SymMatrix sqrt_psd(const SymMatrix& m) {
  return spectral_map(m, [](double l) { return std::sqrt(std::max(l, 0.0)); });
}

namespace {

// Exact projection onto {(Q_i) : sum Q_i <= S}: common shift by
// Lambda = psd_part(sum Q_i - S)/K.
void project_cap(StrategyProfile& q, const SymMatrix& s) {
  SymMatrix excess = q.sum() - s;
  const SymMatrix lambda = psd_part(excess);
  if (lambda.max_abs() == 0.0) return;
  const double inv_k = 1.0 / q.players();
  for (int i = 0; i < q.players(); ++i) q[i].add_scaled(-inv_k, lambda);
}

void project_power(StrategyProfile& q, double p_tot) {
  double tr = 0.0;
  for (int i = 0; i < q.players(); ++i) tr += q[i].trace();
  const double excess = tr - p_tot;
  if (excess <= 0.0) return;
  const double shift = excess / (static_cast<double>(q.players()) * q.dim());
  for (int i = 0; i < q.players(); ++i)
    for (int d = 0; d < q.dim(); ++d) q[i].set(d, d, q[i](d, d) - shift);
}

template <class CapProj>
Projection dykstra(const StrategyProfile& qhat, CapProj&& cap_proj,
                   const ProjectOptions& opts) {
  const int k = qhat.players();
  const int t = qhat.dim();
  StrategyProfile x = qhat;
  StrategyProfile p(k, t);  // cone correction
  StrategyProfile q(k, t);  // cap correction

  Projection out;
  for (int sweep = 1; sweep <= opts.max_iter; ++sweep) {
    StrategyProfile y = x;
    y += p;
    for (int i = 0; i < k; ++i) {
      const SymMatrix yi = y[i];
      y[i] = psd_part(yi);
      p[i] = yi - y[i];
    }
    StrategyProfile xn = y;
    xn += q;
    const StrategyProfile pre_cap = xn;
    cap_proj(xn);
    for (int i = 0; i < k; ++i) q[i] = pre_cap[i] - xn[i];

    const double delta = StrategyProfile::dist(xn, x);
    x = xn;
    out.sweeps = sweep;
    out.last_delta = delta;
    if (delta < opts.tol) {
      out.converged = true;
      break;
    }
  }
  out.profile = std::move(x);
  return out;
}

}  // namespace

Projection project_feasible(const StrategyProfile& qhat, const SymMatrix& s,
                            const ProjectOptions& opts) {
  if (s.dim() != qhat.dim())
    throw DimensionError("project_feasible: S dimension does not match profile");
  if (!is_psd(s))
    throw DomainError("project_feasible: constraint matrix S is not PSD");
  return dykstra(qhat, [&](StrategyProfile& q) { project_cap(q, s); }, opts);
}

Projection project_feasible_sum_power(const StrategyProfile& qhat, double p_tot,
                                      const ProjectOptions& opts) {
  if (!(p_tot > 0.0))
    throw DomainError("project_feasible_sum_power: p_tot must be positive");
  return dykstra(qhat, [&](StrategyProfile& q) { project_power(q, p_tot); }, opts);
}

bool is_feasible(const StrategyProfile& q, const SymMatrix& s, double tol) {
  for (int i = 0; i < q.players(); ++i)
    if (!is_psd(q[i], tol)) return false;
  return loewner_leq(q.sum(), s, tol);
}

bool is_feasible_sum_power(const StrategyProfile& q, double p_tot, double tol) {
  double tr = 0.0;
  for (int i = 0; i < q.players(); ++i) {
    if (!is_psd(q[i], tol)) return false;
    tr += q[i].trace();
  }
  return tr <= p_tot + tol;
}

}  // namespace noe
