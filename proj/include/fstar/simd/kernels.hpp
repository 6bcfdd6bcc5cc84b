#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace fstar::simd {

enum class Backend { Scalar, Avx2, Neon };

std::string_view backend_name(Backend b) noexcept;

// Best backend the running CPU supports. FSTAR_SIMD=scalar in the
// environment forces the scalar reference.
Backend active_backend() noexcept;
bool backend_available(Backend b) noexcept;

// Number of xs strictly greater than threshold. Inputs must be finite.
std::size_t count_above(std::span<const double> xs, double threshold) noexcept;
std::size_t count_above(Backend b, std::span<const double> xs, double threshold) noexcept;

// out[i] = in[i] / (2 - in[i]). in and out must have equal length.
void f_to_fstar(std::span<const double> in, std::span<double> out) noexcept;
void f_to_fstar(Backend b, std::span<const double> in, std::span<double> out) noexcept;

// out[i] = 2 in[i] / (1 + in[i]).
void fstar_to_f(std::span<const double> in, std::span<double> out) noexcept;
void fstar_to_f(Backend b, std::span<const double> in, std::span<double> out) noexcept;

// Per-backend entry points. Calling a backend the CPU lacks is undefined;
// go through the dispatching overloads above.
namespace scalar {
std::size_t count_above(const double* xs, std::size_t n, double threshold) noexcept;
void f_to_fstar(const double* in, double* out, std::size_t n) noexcept;
void fstar_to_f(const double* in, double* out, std::size_t n) noexcept;
}  // namespace scalar

namespace avx2 {
std::size_t count_above(const double* xs, std::size_t n, double threshold) noexcept;
void f_to_fstar(const double* in, double* out, std::size_t n) noexcept;
void fstar_to_f(const double* in, double* out, std::size_t n) noexcept;
}  // namespace avx2

namespace neon {
std::size_t count_above(const double* xs, std::size_t n, double threshold) noexcept;
void f_to_fstar(const double* in, double* out, std::size_t n) noexcept;
void fstar_to_f(const double* in, double* out, std::size_t n) noexcept;
}  // namespace neon

}  // namespace fstar::simd
