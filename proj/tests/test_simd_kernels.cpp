#include <gtest/gtest.h>

#include <limits>
#include <vector>

#include "fstar/simd/kernels.hpp"
#include "support/generators.hpp"

namespace fstar::simd {
namespace {

std::vector<Backend> available_backends() {
    std::vector<Backend> out;
    for (auto b : {Backend::Scalar, Backend::Avx2, Backend::Neon}) {
        if (backend_available(b)) out.push_back(b);
    }
    return out;
}

TEST(Kernels, ReportsBackends) {
    EXPECT_TRUE(backend_available(Backend::Scalar));
    EXPECT_TRUE(backend_available(active_backend()));
    std::cout << "active backend: " << backend_name(active_backend()) << "\n";
}

TEST(Kernels, CountAboveEdgeCases) {
    const std::vector<double> xs{0.5, 0.5, 0.49999999999999994, 0.5000000000000001, -0.0, 0.0,
                                 std::numeric_limits<double>::max(), -std::numeric_limits<double>::max()};
    for (auto b : available_backends()) {
        EXPECT_EQ(count_above(b, xs, 0.5), 2u) << backend_name(b);
        EXPECT_EQ(count_above(b, xs, 0.0), 5u) << backend_name(b);
        EXPECT_EQ(count_above(b, xs, -0.0), 5u) << backend_name(b);
        EXPECT_EQ(count_above(b, std::span<const double>{}, 0.0), 0u) << backend_name(b);
    }
}

// Every length 0..70 exercises the unrolled body, the single-vector loop and
// the scalar tail in each combination.
TEST(Kernels, CountAboveMatchesScalarReference) {
    fstar::testing::Rng rng(42);
    for (std::size_t n = 0; n <= 70; ++n) {
        for (int rep = 0; rep < 20; ++rep) {
            std::vector<double> xs(n);
            for (auto& x : xs) x = static_cast<double>(rng.below(21)) / 20.0;
            const double t = static_cast<double>(rng.below(23)) / 20.0 - 0.05;
            const auto expected = scalar::count_above(xs.data(), xs.size(), t);
            for (auto b : available_backends()) {
                ASSERT_EQ(count_above(b, xs, t), expected) << backend_name(b) << " n=" << n;
            }
        }
    }
}

TEST(Kernels, CountAboveLargeUnaligned) {
    fstar::testing::Rng rng(43);
    std::vector<double> storage(100'003);
    for (auto& x : storage) x = rng.unit();
    const std::span<const double> xs(storage.data() + 1, storage.size() - 1);
    for (double t : {0.0, 0.25, 0.5, 0.999}) {
        const auto expected = scalar::count_above(xs.data(), xs.size(), t);
        for (auto b : available_backends()) EXPECT_EQ(count_above(b, xs, t), expected) << backend_name(b);
    }
}

TEST(Kernels, TransformsBitIdenticalAcrossBackends) {
    fstar::testing::Rng rng(44);
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 17u, 1000u, 4099u}) {
        std::vector<double> in(n);
        for (auto& x : in) x = rng.unit();
        if (n > 2) {
            in[0] = 0.0;
            in[1] = 1.0;
        }
        std::vector<double> ref_fs(n), ref_f(n);
        scalar::f_to_fstar(in.data(), ref_fs.data(), n);
        scalar::fstar_to_f(in.data(), ref_f.data(), n);
        for (auto b : available_backends()) {
            std::vector<double> fs(n), f(n);
            f_to_fstar(b, in, fs);
            fstar_to_f(b, in, f);
            ASSERT_EQ(fs, ref_fs) << backend_name(b);
            ASSERT_EQ(f, ref_f) << backend_name(b);
        }
    }
}

TEST(Kernels, UnavailableBackendFallsBack) {
    const std::vector<double> xs{0.1, 0.9, 0.7};
    for (auto b : {Backend::Avx2, Backend::Neon}) EXPECT_EQ(count_above(b, xs, 0.5), 2u);
}

}  // namespace
}  // namespace fstar::simd
