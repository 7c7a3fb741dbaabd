#include "riv/kernels.hpp"

#include <algorithm>
#include <cmath>

#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace riv::kernels {

namespace scalar {

double sum(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i];
  return s;
}

double dot(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double max_product(const double* a, const double* b, std::size_t n) {
  double m = a[0] * b[0];
  for (std::size_t i = 1; i < n; ++i) m = std::max(m, a[i] * b[i]);
  return m;
}

void accumulate_square(double* dst, const double* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] += src[i] * src[i];
}

double weighted_pow_sum(const double* v, const double* w, std::size_t n, double q) {
  double s = 0.0;
  if (q == 1.0) {
    for (std::size_t i = 0; i < n; ++i) s += w[i] * std::fabs(v[i]);
  } else if (q == 2.0) {
    for (std::size_t i = 0; i < n; ++i) s += w[i] * v[i] * v[i];
  } else if (q == 3.0) {
    for (std::size_t i = 0; i < n; ++i) {
      const double a = std::fabs(v[i]);
      s += w[i] * a * a * a;
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) s += w[i] * std::pow(std::fabs(v[i]), q);
  }
  return s;
}

}  // namespace scalar

#if defined(__aarch64__)
namespace neon {

double sum(const double* x, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vld1q_f64(x + i));
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) s += x[i];
  return s;
}

double dot(const double* a, const double* b, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vfmaq_f64(acc, vld1q_f64(a + i), vld1q_f64(b + i));
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

double max_product(const double* a, const double* b, std::size_t n) {
  double m = a[0] * b[0];
  std::size_t i = 0;
  if (n >= 2) {
    float64x2_t acc = vmulq_f64(vld1q_f64(a), vld1q_f64(b));
    for (i = 2; i + 2 <= n; i += 2)
      acc = vmaxq_f64(acc, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    m = vmaxvq_f64(acc);
  }
  for (; i < n; ++i) m = std::max(m, a[i] * b[i]);
  return m;
}

void accumulate_square(double* dst, const double* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t s = vld1q_f64(src + i);
    vst1q_f64(dst + i, vfmaq_f64(vld1q_f64(dst + i), s, s));
  }
  for (; i < n; ++i) dst[i] += src[i] * src[i];
}

double weighted_pow_sum(const double* v, const double* w, std::size_t n, double q) {
  if (q == 1.0) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
      acc = vfmaq_f64(acc, vld1q_f64(w + i), vabsq_f64(vld1q_f64(v + i)));
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += w[i] * std::fabs(v[i]);
    return s;
  }
  if (q == 2.0) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
      float64x2_t x = vld1q_f64(v + i);
      acc = vfmaq_f64(acc, vld1q_f64(w + i), vmulq_f64(x, x));
    }
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += w[i] * v[i] * v[i];
    return s;
  }
  if (q == 3.0) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
      float64x2_t x = vabsq_f64(vld1q_f64(v + i));
      acc = vfmaq_f64(acc, vld1q_f64(w + i), vmulq_f64(vmulq_f64(x, x), x));
    }
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) {
      const double a = std::fabs(v[i]);
      s += w[i] * a * a * a;
    }
    return s;
  }
  return scalar::weighted_pow_sum(v, w, n, q);
}

}  // namespace neon
#endif  // __aarch64__

#if defined(__x86_64__)
// Implemented in kernels_avx2.cpp, compiled with -mavx2 -mfma.
namespace avx2 {
double sum(const double*, std::size_t);
double dot(const double*, const double*, std::size_t);
double max_product(const double*, const double*, std::size_t);
void accumulate_square(double*, const double*, std::size_t);
double weighted_pow_sum(const double*, const double*, std::size_t, double);
bool available();
}  // namespace avx2
#endif

namespace {

struct Dispatch {
  double (*sum)(const double*, std::size_t);
  double (*dot)(const double*, const double*, std::size_t);
  double (*max_product)(const double*, const double*, std::size_t);
  void (*accumulate_square)(double*, const double*, std::size_t);
  double (*weighted_pow_sum)(const double*, const double*, std::size_t, double);
  const char* name;
};

Dispatch select_backend() {
#if defined(__x86_64__)
  if (avx2::available()) {
    return {avx2::sum, avx2::dot, avx2::max_product, avx2::accumulate_square,
            avx2::weighted_pow_sum, "avx2"};
  }
#elif defined(__aarch64__)
  return {neon::sum, neon::dot, neon::max_product, neon::accumulate_square,
          neon::weighted_pow_sum, "neon"};
#endif
  return {scalar::sum, scalar::dot, scalar::max_product, scalar::accumulate_square,
          scalar::weighted_pow_sum, "scalar"};
}

const Dispatch& table() {
  static const Dispatch d = select_backend();
  return d;
}

}  // namespace

const char* active_backend() { return table().name; }

double sum(const double* x, std::size_t n) { return table().sum(x, n); }

double dot(const double* a, const double* b, std::size_t n) { return table().dot(a, b, n); }

double max_product(const double* a, const double* b, std::size_t n) {
  return table().max_product(a, b, n);
}

void accumulate_square(double* dst, const double* src, std::size_t n) {
  table().accumulate_square(dst, src, n);
}

double weighted_pow_sum(const double* v, const double* w, std::size_t n, double q) {
  return table().weighted_pow_sum(v, w, n, q);
}

}  // namespace riv::kernels
