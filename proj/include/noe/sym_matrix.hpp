#pragma once

#include <cstddef>
#include <vector>

#include "noe/errors.hpp"
#include "noe/kernels.hpp"

namespace noe {

// General rectangular matrix, row-major. Used for channel gains and
// intermediate products; symmetric data lives in SymMatrix.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

  double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  double* data() { return a.data(); }
  const double* data() const { return a.data(); }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
};

// C = A * B
inline Mat matmul(const Mat& A, const Mat& B) {
  if (A.cols != B.rows) throw DimensionError("matmul: inner dimensions differ");
  Mat C(A.rows, B.cols);
  kernels::matmul(A.data(), B.data(), C.data(), A.rows, A.cols, B.cols);
  return C;
}

// C = A^T * B
inline Mat matmul_tn(const Mat& A, const Mat& B) {
  if (A.rows != B.rows) throw DimensionError("matmul_tn: row counts differ");
  Mat C(A.cols, B.cols);
  kernels::matmul_tn(A.data(), B.data(), C.data(), A.cols, A.rows, B.cols);
  return C;
}

// Real symmetric matrix with the symmetry invariant enforced at every write:
// entries(i,j) == entries(j,i) exactly. Stored dense row-major.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int dim)
      : dim_(dim), a_(static_cast<std::size_t>(check_dim(dim)) * dim, 0.0) {}

  static SymMatrix identity(int dim) {
    SymMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.a_[idx(i, i, dim)] = 1.0;
    return m;
  }

  static SymMatrix diag(const std::vector<double>& d) {
    SymMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim_; ++i) m.a_[idx(i, i, m.dim_)] = d[i];
    return m;
  }

  static SymMatrix scaled_identity(int dim, double c) {
    SymMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.a_[idx(i, i, dim)] = c;
    return m;
  }

  // Builds from row-major data, symmetrizing as (M + M^T)/2.
  static SymMatrix from_rows(int dim, const std::vector<double>& rows) {
    check_dim(dim);
    if (rows.size() != static_cast<std::size_t>(dim) * dim)
      throw DimensionError("SymMatrix::from_rows: data size does not match dim^2");
    SymMatrix m(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        const double v = 0.5 * (rows[idx(i, j, dim)] + rows[idx(j, i, dim)]);
        m.a_[idx(i, j, dim)] = v;
      }
    return m;
  }

  int dim() const { return dim_; }
  bool empty() const { return dim_ == 0; }
  std::size_t size() const { return a_.size(); }
  const double* data() const { return a_.data(); }
  double* data() { return a_.data(); }  // callers must preserve symmetry
  const std::vector<double>& entries() const { return a_; }

  double operator()(int i, int j) const { return a_[idx(i, j, dim_)]; }
  void set(int i, int j, double v) {
    a_[idx(i, j, dim_)] = v;
    a_[idx(j, i, dim_)] = v;
  }

  SymMatrix& operator+=(const SymMatrix& o) {
    require_same_dim(o);
    kernels::axpy(1.0, o.a_.data(), a_.data(), a_.size());
    return *this;
  }
  SymMatrix& operator-=(const SymMatrix& o) {
    require_same_dim(o);
    kernels::axpy(-1.0, o.a_.data(), a_.data(), a_.size());
    return *this;
  }
  SymMatrix& operator*=(double c) {
    kernels::scal(c, a_.data(), a_.size());
    return *this;
  }
  SymMatrix& add_scaled(double c, const SymMatrix& o) {
    require_same_dim(o);
    kernels::axpy(c, o.a_.data(), a_.data(), a_.size());
    return *this;
  }

  friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
  friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
  friend SymMatrix operator*(double c, SymMatrix a) { return a *= c; }

  double trace() const {
    double t = 0.0;
    for (int i = 0; i < dim_; ++i) t += a_[idx(i, i, dim_)];
    return t;
  }

  double fro_norm() const;
  double max_abs() const;

  // Frobenius inner product <A,B> = Tr(A B) for symmetric A, B.
  static double dot(const SymMatrix& x, const SymMatrix& y) {
    x.require_same_dim(y);
    return kernels::dot(x.a_.data(), y.a_.data(), x.a_.size());
  }

  static double dist(const SymMatrix& x, const SymMatrix& y);

  Mat to_mat() const {
    Mat m(dim_, dim_);
    m.a = a_;
    return m;
  }

 private:
  static int check_dim(int dim) {
    if (dim < 1) throw DimensionError("SymMatrix: dim must be >= 1");
    return dim;
  }
  static std::size_t idx(int i, int j, int dim) {
    return static_cast<std::size_t>(i) * dim + j;
  }
  void require_same_dim(const SymMatrix& o) const {
    if (dim_ != o.dim_) throw DimensionError("SymMatrix: dimension mismatch");
  }

  int dim_ = 0;
  std::vector<double> a_;
};

// Ordered K-tuple of transmit covariances, all of one dimension t. The joint
// control variable of the game; feasibility is a checkable property, never
// presumed.
class StrategyProfile {
 public:
  StrategyProfile() = default;
  StrategyProfile(int players, int dim)
      : mats_(check_players(players), SymMatrix(dim)) {}
  explicit StrategyProfile(std::vector<SymMatrix> mats) : mats_(std::move(mats)) {
    check_players(static_cast<int>(mats_.size()));
    for (const auto& m : mats_)
      if (m.dim() != mats_.front().dim())
        throw DimensionError("StrategyProfile: matrices must share one dimension");
  }

  int players() const { return static_cast<int>(mats_.size()); }
  int dim() const { return mats_.empty() ? 0 : mats_.front().dim(); }

  SymMatrix& operator[](int i) { return mats_[static_cast<std::size_t>(i)]; }
  const SymMatrix& operator[](int i) const { return mats_[static_cast<std::size_t>(i)]; }
  const std::vector<SymMatrix>& mats() const { return mats_; }

  SymMatrix sum() const {
    SymMatrix s(dim());
    for (const auto& m : mats_) s += m;
    return s;
  }

  StrategyProfile& operator+=(const StrategyProfile& o) {
    require_same_shape(o);
    for (int i = 0; i < players(); ++i) mats_[i] += o.mats_[i];
    return *this;
  }
  StrategyProfile& operator*=(double c) {
    for (auto& m : mats_) m *= c;
    return *this;
  }
  StrategyProfile& add_scaled(double c, const StrategyProfile& o) {
    require_same_shape(o);
    for (int i = 0; i < players(); ++i) mats_[i].add_scaled(c, o.mats_[i]);
    return *this;
  }

  double fro_norm() const;
  static double dist(const StrategyProfile& x, const StrategyProfile& y);

  void require_same_shape(const StrategyProfile& o) const {
    if (players() != o.players() || dim() != o.dim())
      throw DimensionError("StrategyProfile: shape mismatch");
  }

 private:
  static int check_players(int k) {
    if (k < 1) throw DimensionError("StrategyProfile: K must be >= 1");
    return k;
  }
  std::vector<SymMatrix> mats_;
};

}  // namespace noe
