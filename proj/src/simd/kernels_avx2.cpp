// Compiled with -mavx2 on x86-64 only; reached through runtime dispatch.
#include "fstar/simd/kernels.hpp"

#include <immintrin.h>

namespace fstar::simd::avx2 {

constexpr std::size_t kLanes = 4;

std::size_t count_above(const double* xs, std::size_t n, double threshold) noexcept {
    const __m256d t = _mm256_set1_pd(threshold);
    const std::size_t n_aligned = n / (4 * kLanes) * (4 * kLanes);
    std::size_t count = 0;
    std::size_t i = 0;
    // Four independent compares per iteration; movemask packs each into 4 bits.
    for (; i < n_aligned; i += 4 * kLanes) {
        const int m0 = _mm256_movemask_pd(_mm256_cmp_pd(_mm256_loadu_pd(xs + i), t, _CMP_GT_OQ));
        const int m1 = _mm256_movemask_pd(_mm256_cmp_pd(_mm256_loadu_pd(xs + i + 4), t, _CMP_GT_OQ));
        const int m2 = _mm256_movemask_pd(_mm256_cmp_pd(_mm256_loadu_pd(xs + i + 8), t, _CMP_GT_OQ));
        const int m3 = _mm256_movemask_pd(_mm256_cmp_pd(_mm256_loadu_pd(xs + i + 12), t, _CMP_GT_OQ));
        const unsigned bits = static_cast<unsigned>(m0 | (m1 << 4) | (m2 << 8) | (m3 << 12));
        count += static_cast<std::size_t>(__builtin_popcount(bits));
    }
    for (; i + kLanes <= n; i += kLanes) {
        const int m = _mm256_movemask_pd(_mm256_cmp_pd(_mm256_loadu_pd(xs + i), t, _CMP_GT_OQ));
        count += static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(m)));
    }
    for (; i < n; ++i) {
        count += xs[i] > threshold ? 1 : 0;
    }
    return count;
}

void f_to_fstar(const double* in, double* out, std::size_t n) noexcept {
    const __m256d two = _mm256_set1_pd(2.0);
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256d f = _mm256_loadu_pd(in + i);
        _mm256_storeu_pd(out + i, _mm256_div_pd(f, _mm256_sub_pd(two, f)));
    }
    for (; i < n; ++i) {
        out[i] = in[i] / (2.0 - in[i]);
    }
}

void fstar_to_f(const double* in, double* out, std::size_t n) noexcept {
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d two = _mm256_set1_pd(2.0);
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256d s = _mm256_loadu_pd(in + i);
        _mm256_storeu_pd(out + i, _mm256_div_pd(_mm256_mul_pd(two, s), _mm256_add_pd(one, s)));
    }
    for (; i < n; ++i) {
        out[i] = (2.0 * in[i]) / (1.0 + in[i]);
    }
}

}  // namespace fstar::simd::avx2
