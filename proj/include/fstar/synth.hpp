#pragma once

#include <cstdint>
#include <vector>

#include "fstar/confusion.hpp"

namespace fstar {

struct BetaShape {
    double alpha = 1.0;
    double beta = 1.0;
};

struct GeneratorSpec {
    Count n0 = 0;
    Count n1 = 0;
    BetaShape dist0{2.0, 5.0};
    BetaShape dist1{5.0, 2.0};
    std::uint64_t seed = 0;
};

// Throws ValidationError on a non-positive or non-finite shape parameter.
void validate(const GeneratorSpec& spec);

/// n0 class-0 records followed by n1 class-1 records, scores drawn from the
/// two Beta distributions. All scores lie strictly inside (0, 1).
///
/// Generator, pinned for portable fixtures (version 1):
///   engine   std::mt19937_64 seeded with spec.seed
///   uniform  (x >> 11) * 2^-53, redrawn when 0
///   normal   Marsaglia polar method
///   gamma    Marsaglia-Tsang; shape < 1 boosted by U^(1/shape)
///   beta     X / (X + Y), X ~ Gamma(alpha), Y ~ Gamma(beta); redrawn if 0 or 1
/// All class-0 draws come before class-1 draws from a single engine.
std::vector<ScoredRecord> generate_scores(const GeneratorSpec& spec);

inline constexpr int kGeneratorVersion = 1;

}  // namespace fstar
