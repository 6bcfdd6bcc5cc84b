// Compiled on aarch64 only; NEON is baseline there.
#include "fstar/simd/kernels.hpp"

#include <arm_neon.h>

namespace fstar::simd::neon {

constexpr std::size_t kLanes = 2;

std::size_t count_above(const double* xs, std::size_t n, double threshold) noexcept {
    const float64x2_t t = vdupq_n_f64(threshold);
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        // All-ones lanes where x > t; shift down to 0/1 and accumulate.
        acc = vaddq_u64(acc, vshrq_n_u64(vcgtq_f64(vld1q_f64(xs + i), t), 63));
    }
    std::size_t count = static_cast<std::size_t>(vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1));
    for (; i < n; ++i) {
        count += xs[i] > threshold ? 1 : 0;
    }
    return count;
}

void f_to_fstar(const double* in, double* out, std::size_t n) noexcept {
    const float64x2_t two = vdupq_n_f64(2.0);
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const float64x2_t f = vld1q_f64(in + i);
        vst1q_f64(out + i, vdivq_f64(f, vsubq_f64(two, f)));
    }
    for (; i < n; ++i) {
        out[i] = in[i] / (2.0 - in[i]);
    }
}

void fstar_to_f(const double* in, double* out, std::size_t n) noexcept {
    const float64x2_t one = vdupq_n_f64(1.0);
    const float64x2_t two = vdupq_n_f64(2.0);
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const float64x2_t s = vld1q_f64(in + i);
        vst1q_f64(out + i, vdivq_f64(vmulq_f64(two, s), vaddq_f64(one, s)));
    }
    for (; i < n; ++i) {
        out[i] = (2.0 * in[i]) / (1.0 + in[i]);
    }
}

}  // namespace fstar::simd::neon
