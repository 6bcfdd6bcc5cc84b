#include <gtest/gtest.h>

#include <cmath>

#include "fstar/error.hpp"
#include "fstar/ranking.hpp"
#include "fstar/synth.hpp"

namespace fstar {
namespace {

double beta_pdf(double x, double a, double b) {
    const double log_norm = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b);
    return std::exp(log_norm + (a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x));
}

// P(X0 < X1) = integral of pdf1(x) * cdf0(x), midpoint rule with the CDF
// accumulated alongside.
double auc_by_quadrature(BetaShape d0, BetaShape d1) {
    constexpr int kSteps = 200'000;
    const double h = 1.0 / kSteps;
    double cdf0 = 0.0;
    double total = 0.0;
    for (int i = 0; i < kSteps; ++i) {
        const double x = (i + 0.5) * h;
        const double half = 0.5 * h * beta_pdf(x, d0.alpha, d0.beta);
        cdf0 += half;
        total += h * beta_pdf(x, d1.alpha, d1.beta) * cdf0;
        cdf0 += half;
    }
    return total;
}

TEST(Synth, EmptySpec) {
    GeneratorSpec spec;
    EXPECT_TRUE(generate_scores(spec).empty());
}

TEST(Synth, DeterministicPerSeed) {
    GeneratorSpec spec{3, 2, {2.0, 5.0}, {5.0, 2.0}, 7};
    EXPECT_EQ(generate_scores(spec), generate_scores(spec));
    GeneratorSpec other = spec;
    other.seed = 8;
    EXPECT_NE(generate_scores(spec), generate_scores(other));
}

TEST(Synth, PinnedFixture) {
    // Frozen output of generator version 1; a change here breaks fixtures.
    GeneratorSpec spec{2, 2, {2.0, 5.0}, {5.0, 2.0}, 7};
    const auto r = generate_scores(spec);
    ASSERT_EQ(r.size(), 4u);
    EXPECT_EQ(kGeneratorVersion, 1);
    const double expected[] = {0.0931195779753488, 0.2832336221426265, 0.8375106468090494, 0.8643521596803058};
    for (int i = 0; i < 4; ++i) EXPECT_EQ(r[i].score, expected[i]) << i;
}

TEST(Synth, CountsAndRange) {
    for (double shape : {0.3, 1.0, 7.5}) {
        GeneratorSpec spec{400, 250, {shape, 2.0}, {1.0, shape}, 11};
        const auto records = generate_scores(spec);
        ASSERT_EQ(records.size(), 650u);
        std::size_t ones = 0;
        for (std::size_t i = 0; i < records.size(); ++i) {
            ASSERT_GT(records[i].score, 0.0);
            ASSERT_LT(records[i].score, 1.0);
            ASSERT_EQ(records[i].label, i < 400 ? ClassLabel::Zero : ClassLabel::One);
            ones += records[i].label == ClassLabel::One;
        }
        EXPECT_EQ(ones, 250u);
    }
}

TEST(Synth, SampleMeanMatchesBetaMean) {
    GeneratorSpec spec{20'000, 0, {2.0, 5.0}, {1.0, 1.0}, 3};
    double sum = 0.0;
    for (const auto& r : generate_scores(spec)) sum += r.score;
    // mean 2/7, sd ~0.16, standard error ~0.0011
    EXPECT_NEAR(sum / 20'000.0, 2.0 / 7.0, 0.006);
}

TEST(Synth, SeparatedDistributionsGiveHighAuc) {
    const BetaShape low{2.0, 5.0};
    const BetaShape high{5.0, 2.0};
    const double oracle = auc_by_quadrature(low, high);
    EXPECT_NEAR(oracle, 0.95996, 1e-4);
    GeneratorSpec spec{1000, 1000, low, high, 2024};
    const double a = auc(generate_scores(spec)).value();
    EXPECT_GT(a, 0.8);
    EXPECT_NEAR(a, oracle, 0.01);
}

TEST(Synth, RejectsBadShapes) {
    GeneratorSpec spec{1, 1, {0.0, 1.0}, {1.0, 1.0}, 0};
    EXPECT_THROW(generate_scores(spec), ValidationError);
    spec.dist0 = {1.0, 1.0};
    spec.dist1 = {1.0, -2.0};
    EXPECT_THROW(generate_scores(spec), ValidationError);
    spec.dist1 = {std::nan(""), 1.0};
    EXPECT_THROW(generate_scores(spec), ValidationError);
}

}  // namespace
}  // namespace fstar
