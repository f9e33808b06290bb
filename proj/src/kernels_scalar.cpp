#include "noe/kernels.hpp"

#include <cstring>

namespace noe::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scal_scalar(double alpha, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

double sumsq_scalar(const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * a[i];
  return acc;
}

double sumsq_diff_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

// saxpy-form gemm: accumulate rows of B scaled by entries of A.
void matmul_scalar(const double* a, const double* b, double* c, std::size_t m,
                   std::size_t k, std::size_t n) {
  std::memset(c, 0, m * n * sizeof(double));
  for (std::size_t i = 0; i < m; ++i) {
    double* ci = c + i * n;
    for (std::size_t l = 0; l < k; ++l) {
      const double ail = a[i * k + l];
      if (ail == 0.0) continue;
      const double* bl = b + l * n;
      for (std::size_t j = 0; j < n; ++j) ci[j] += ail * bl[j];
    }
  }
}

void matmul_tn_scalar(const double* a, const double* b, double* c,
                      std::size_t m, std::size_t k, std::size_t n) {
  std::memset(c, 0, m * n * sizeof(double));
  for (std::size_t l = 0; l < k; ++l) {
    const double* al = a + l * m;
    const double* bl = b + l * n;
    for (std::size_t i = 0; i < m; ++i) {
      const double ali = al[i];
      if (ali == 0.0) continue;
      double* ci = c + i * n;
      for (std::size_t j = 0; j < n; ++j) ci[j] += ali * bl[j];
    }
  }
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops = {dot_scalar,   axpy_scalar,   scal_scalar,
                          sumsq_scalar, sumsq_diff_scalar,
                          matmul_scalar, matmul_tn_scalar, "scalar"};
  return ops;
}

}  // namespace noe::kernels
