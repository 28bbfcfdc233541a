// Compiled with -mavx2 -mfma; only dispatched to when the CPU reports AVX2.

#include "openworld/simd/vec_ops.hpp"

#include <immintrin.h>

namespace openworld::simd::detail {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d shuf = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

// Floats are widened to double lanes before accumulating so scalar and AVX2
// results agree to rounding of the summation order alone.
double dot_avx2(const float* a, const float* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256d a_lo = _mm256_cvtps_pd(_mm_loadu_ps(a + i));
        __m256d a_hi = _mm256_cvtps_pd(_mm_loadu_ps(a + i + 4));
        __m256d b_lo = _mm256_cvtps_pd(_mm_loadu_ps(b + i));
        __m256d b_hi = _mm256_cvtps_pd(_mm_loadu_ps(b + i + 4));
        acc0 = _mm256_fmadd_pd(a_lo, b_lo, acc0);
        acc1 = _mm256_fmadd_pd(a_hi, b_hi, acc1);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) {
        acc += static_cast<double>(a[i]) * static_cast<double>(b[i]);
    }
    return acc;
}

double squared_norm_avx2(const float* a, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256d lo = _mm256_cvtps_pd(_mm_loadu_ps(a + i));
        __m256d hi = _mm256_cvtps_pd(_mm_loadu_ps(a + i + 4));
        acc0 = _mm256_fmadd_pd(lo, lo, acc0);
        acc1 = _mm256_fmadd_pd(hi, hi, acc1);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) {
        acc += static_cast<double>(a[i]) * static_cast<double>(a[i]);
    }
    return acc;
}

}  // namespace

const Kernels avx2_kernels{dot_avx2, squared_norm_avx2};

}  // namespace openworld::simd::detail
