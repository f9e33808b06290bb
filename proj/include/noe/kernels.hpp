#pragma once

// Dense kernels behind all matrix arithmetic. Scalar reference
// implementations plus an AVX2 lane selected at runtime; the active lane is
// process-global and resolved on first use. Set NOE_KERNELS=scalar to force
// the reference lane.

#include <cstddef>

namespace noe::kernels {

struct Ops {
  // sum_i a[i]*b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // x[i] *= alpha
  void (*scal)(double alpha, double* x, std::size_t n);
  // sum_i a[i]^2
  double (*sumsq)(const double* a, std::size_t n);
  // sum_i (a[i]-b[i])^2
  double (*sumsq_diff)(const double* a, const double* b, std::size_t n);
  // C[m x n] = A[m x k] * B[k x n], row-major, C overwritten
  void (*matmul)(const double* a, const double* b, double* c, std::size_t m,
                 std::size_t k, std::size_t n);
  // C[m x n] = A^T * B with A stored [k x m] row-major, C overwritten
  void (*matmul_tn)(const double* a, const double* b, double* c, std::size_t m,
                    std::size_t k, std::size_t n);
  const char* name;
};

// Reference lane; always available.
const Ops& scalar_ops();

// AVX2+FMA lane; null when unsupported by the CPU or not compiled in.
const Ops* avx2_ops();

// Lane picked at startup (honors NOE_KERNELS).
const Ops& active();

inline double dot(const double* a, const double* b, std::size_t n) {
  return active().dot(a, b, n);
}
inline void axpy(double alpha, const double* x, double* y, std::size_t n) {
  active().axpy(alpha, x, y, n);
}
inline void scal(double alpha, double* x, std::size_t n) {
  active().scal(alpha, x, n);
}
inline double sumsq(const double* a, std::size_t n) {
  return active().sumsq(a, n);
}
inline double sumsq_diff(const double* a, const double* b, std::size_t n) {
  return active().sumsq_diff(a, b, n);
}
inline void matmul(const double* a, const double* b, double* c, std::size_t m,
                   std::size_t k, std::size_t n) {
  active().matmul(a, b, c, m, k, n);
}
inline void matmul_tn(const double* a, const double* b, double* c,
                      std::size_t m, std::size_t k, std::size_t n) {
  active().matmul_tn(a, b, c, m, k, n);
}

}  // namespace noe::kernels
