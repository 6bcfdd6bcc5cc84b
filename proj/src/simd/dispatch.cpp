#include <cstdlib>
#include <cstring>

#include "fstar/simd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define FSTAR_X86 1
#else
#define FSTAR_X86 0
#endif

#if defined(__aarch64__)
#define FSTAR_ARM64 1
#else
#define FSTAR_ARM64 0
#endif

namespace fstar::simd {

std::string_view backend_name(Backend b) noexcept {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
        case Backend::Neon: return "neon";
    }
    return "unknown";
}

bool backend_available(Backend b) noexcept {
    switch (b) {
        case Backend::Scalar: return true;
        case Backend::Avx2:
#if FSTAR_X86 && defined(FSTAR_HAVE_AVX2_KERNELS)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Backend::Neon:
#if FSTAR_ARM64 && defined(FSTAR_HAVE_NEON_KERNELS)
            return true;
#else
            return false;
#endif
    }
    return false;
}

namespace {

Backend detect() noexcept {
    if (const char* forced = std::getenv("FSTAR_SIMD"); forced && std::strcmp(forced, "scalar") == 0) {
        return Backend::Scalar;
    }
    if (backend_available(Backend::Avx2)) return Backend::Avx2;
    if (backend_available(Backend::Neon)) return Backend::Neon;
    return Backend::Scalar;
}

// Unavailable backends fall through to the scalar reference.
Backend usable(Backend b) noexcept { return backend_available(b) ? b : Backend::Scalar; }

}  // namespace

Backend active_backend() noexcept {
    static const Backend selected = detect();
    return selected;
}

std::size_t count_above(Backend b, std::span<const double> xs, double threshold) noexcept {
    switch (usable(b)) {
#if FSTAR_X86 && defined(FSTAR_HAVE_AVX2_KERNELS)
        case Backend::Avx2: return avx2::count_above(xs.data(), xs.size(), threshold);
#endif
#if FSTAR_ARM64 && defined(FSTAR_HAVE_NEON_KERNELS)
        case Backend::Neon: return neon::count_above(xs.data(), xs.size(), threshold);
#endif
        default: return scalar::count_above(xs.data(), xs.size(), threshold);
    }
}

void f_to_fstar(Backend b, std::span<const double> in, std::span<double> out) noexcept {
    switch (usable(b)) {
#if FSTAR_X86 && defined(FSTAR_HAVE_AVX2_KERNELS)
        case Backend::Avx2: avx2::f_to_fstar(in.data(), out.data(), in.size()); return;
#endif
#if FSTAR_ARM64 && defined(FSTAR_HAVE_NEON_KERNELS)
        case Backend::Neon: neon::f_to_fstar(in.data(), out.data(), in.size()); return;
#endif
        default: scalar::f_to_fstar(in.data(), out.data(), in.size()); return;
    }
}

void fstar_to_f(Backend b, std::span<const double> in, std::span<double> out) noexcept {
    switch (usable(b)) {
#if FSTAR_X86 && defined(FSTAR_HAVE_AVX2_KERNELS)
        case Backend::Avx2: avx2::fstar_to_f(in.data(), out.data(), in.size()); return;
#endif
#if FSTAR_ARM64 && defined(FSTAR_HAVE_NEON_KERNELS)
        case Backend::Neon: neon::fstar_to_f(in.data(), out.data(), in.size()); return;
#endif
        default: scalar::fstar_to_f(in.data(), out.data(), in.size()); return;
    }
}

std::size_t count_above(std::span<const double> xs, double threshold) noexcept {
    return count_above(active_backend(), xs, threshold);
}

void f_to_fstar(std::span<const double> in, std::span<double> out) noexcept {
    f_to_fstar(active_backend(), in, out);
}

void fstar_to_f(std::span<const double> in, std::span<double> out) noexcept {
    fstar_to_f(active_backend(), in, out);
}

}  // namespace fstar::simd
