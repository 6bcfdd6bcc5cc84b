#include "fstar/simd/kernels.hpp"

namespace fstar::simd::scalar {

std::size_t count_above(const double* xs, std::size_t n, double threshold) noexcept {
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        count += xs[i] > threshold ? 1 : 0;
    }
    return count;
}

void f_to_fstar(const double* in, double* out, std::size_t n) noexcept {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = in[i] / (2.0 - in[i]);
    }
}

void fstar_to_f(const double* in, double* out, std::size_t n) noexcept {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = (2.0 * in[i]) / (1.0 + in[i]);
    }
}

}  // namespace fstar::simd::scalar
