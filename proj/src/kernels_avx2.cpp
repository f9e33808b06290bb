// AVX2+FMA kernel lane. This translation unit is compiled with -mavx2 -mfma
// on x86-64; avx2_ops() returns null elsewhere.

#include "noe/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <cstring>

namespace noe::kernels {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
  double r = hsum(acc);
  for (; i < n; ++i) r += a[i] * b[i];
  return r;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scal_avx2(double alpha, double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) x[i] *= alpha;
}

double sumsq_avx2(const double* a, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(a + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double r = hsum(acc);
  for (; i < n; ++i) r += a[i] * a[i];
  return r;
}

double sumsq_diff_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d =
        _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_fmadd_pd(d, d, acc);
  }
  double r = hsum(acc);
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    r += d * d;
  }
  return r;
}

inline void row_axpy(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    __m256d vy = _mm256_loadu_pd(y + j);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + j), vy);
    _mm256_storeu_pd(y + j, vy);
  }
  for (; j < n; ++j) y[j] += alpha * x[j];
}

void matmul_avx2(const double* a, const double* b, double* c, std::size_t m,
                 std::size_t k, std::size_t n) {
  std::memset(c, 0, m * n * sizeof(double));
  for (std::size_t i = 0; i < m; ++i) {
    double* ci = c + i * n;
    for (std::size_t l = 0; l < k; ++l) {
      const double ail = a[i * k + l];
      if (ail == 0.0) continue;
      row_axpy(ail, b + l * n, ci, n);
    }
  }
}

void matmul_tn_avx2(const double* a, const double* b, double* c, std::size_t m,
                    std::size_t k, std::size_t n) {
  std::memset(c, 0, m * n * sizeof(double));
  for (std::size_t l = 0; l < k; ++l) {
    const double* al = a + l * m;
    const double* bl = b + l * n;
    for (std::size_t i = 0; i < m; ++i) {
      if (al[i] == 0.0) continue;
      row_axpy(al[i], bl, c + i * n, n);
    }
  }
}

}  // namespace

const Ops* avx2_ops() {
  if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma"))
    return nullptr;
  static const Ops ops = {dot_avx2,   axpy_avx2,   scal_avx2,
                          sumsq_avx2, sumsq_diff_avx2,
                          matmul_avx2, matmul_tn_avx2, "avx2"};
  return &ops;
}

}  // namespace noe::kernels

#else

namespace noe::kernels {
const Ops* avx2_ops() { return nullptr; }
}  // namespace noe::kernels

#endif
