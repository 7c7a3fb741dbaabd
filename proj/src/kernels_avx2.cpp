// AVX2/FMA variants of the reduction kernels. This translation unit is the
// only one compiled with -mavx2 -mfma; entry is gated by a runtime cpuid
// check in kernels.cpp, so the rest of the library stays baseline-ISA.
#if defined(__x86_64__)

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace riv::kernels::avx2 {

bool available() {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

inline double hmax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_max_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

const __m256d kAbsMask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));

}  // namespace

double sum(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  double s = hsum(acc);
  for (; i < n; ++i) s += x[i];
  return s;
}

double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
  double s = hsum(acc);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

double max_product(const double* a, const double* b, std::size_t n) {
  double m = a[0] * b[0];
  std::size_t i = 0;
  if (n >= 4) {
    __m256d acc = _mm256_mul_pd(_mm256_loadu_pd(a), _mm256_loadu_pd(b));
    for (i = 4; i + 4 <= n; i += 4)
      acc = _mm256_max_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    m = hmax(acc);
  }
  for (; i < n; ++i) m = std::max(m, a[i] * b[i]);
  return m;
}

void accumulate_square(double* dst, const double* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d s = _mm256_loadu_pd(src + i);
    _mm256_storeu_pd(dst + i, _mm256_fmadd_pd(s, s, _mm256_loadu_pd(dst + i)));
  }
  for (; i < n; ++i) dst[i] += src[i] * src[i];
}

double weighted_pow_sum(const double* v, const double* w, std::size_t n, double q) {
  std::size_t i = 0;
  __m256d acc = _mm256_setzero_pd();
  if (q == 1.0) {
    for (; i + 4 <= n; i += 4) {
      __m256d x = _mm256_and_pd(_mm256_loadu_pd(v + i), kAbsMask);
      acc = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), x, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += w[i] * std::fabs(v[i]);
    return s;
  }
  if (q == 2.0) {
    for (; i + 4 <= n; i += 4) {
      __m256d x = _mm256_loadu_pd(v + i);
      acc = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), _mm256_mul_pd(x, x), acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += w[i] * v[i] * v[i];
    return s;
  }
  if (q == 3.0) {
    for (; i + 4 <= n; i += 4) {
      __m256d x = _mm256_and_pd(_mm256_loadu_pd(v + i), kAbsMask);
      acc = _mm256_fmadd_pd(_mm256_loadu_pd(w + i),
                            _mm256_mul_pd(_mm256_mul_pd(x, x), x), acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) {
      const double a = std::fabs(v[i]);
      s += w[i] * a * a * a;
    }
    return s;
  }
  // General exponent: no vector pow; identical scalar loop on every backend.
  double s = 0.0;
  for (; i < n; ++i) s += w[i] * std::pow(std::fabs(v[i]), q);
  return s;
}

}  // namespace riv::kernels::avx2

#endif  // __x86_64__
