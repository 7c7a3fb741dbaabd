#pragma once
// Reduction kernels for the hot inner loops (step-function integrals,
// weighted power sums, grid suprema). Scalar reference implementations
// plus SIMD variants selected once at startup from CPU capabilities.
// The dispatched functions and the scalar references must agree to
// rounding (see tests/test_kernels.cpp).

#include <cstddef>
#include <span>

namespace riv::kernels {

// Active backend name: "scalar", "avx2" or "neon".
const char* active_backend();

// sum_i x[i]
double sum(const double* x, std::size_t n);

// sum_i a[i]*b[i]
double dot(const double* a, const double* b, std::size_t n);

// max_i a[i]*b[i]; n must be >= 1
double max_product(const double* a, const double* b, std::size_t n);

// dst[i] += src[i]^2
void accumulate_square(double* dst, const double* src, std::size_t n);

// sum_i w[i]*|v[i]|^q. q in {1,2,3} takes the vector path; other q falls
// back to a scalar pow loop on every backend.
double weighted_pow_sum(const double* v, const double* w, std::size_t n, double q);

inline double sum(std::span<const double> x) { return sum(x.data(), x.size()); }
inline double dot(std::span<const double> a, std::span<const double> b) {
  return dot(a.data(), b.data(), a.size());
}
inline double max_product(std::span<const double> a, std::span<const double> b) {
  return max_product(a.data(), b.data(), a.size());
}
inline double weighted_pow_sum(std::span<const double> v, std::span<const double> w, double q) {
  return weighted_pow_sum(v.data(), w.data(), v.size(), q);
}

// Scalar reference implementations, always available; the dispatch tables
// fall back to these and the equivalence tests compare against them.
namespace scalar {
double sum(const double* x, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
double max_product(const double* a, const double* b, std::size_t n);
void accumulate_square(double* dst, const double* src, std::size_t n);
double weighted_pow_sum(const double* v, const double* w, std::size_t n, double q);
}  // namespace scalar

}  // namespace riv::kernels
