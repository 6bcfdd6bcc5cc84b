#include "fstar/synth.hpp"

#include <cmath>
#include <random>

#include "fstar/error.hpp"

namespace fstar {

namespace {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    // Uniform on (0, 1) with 53 random bits.
    double uniform() {
        while (true) {
            const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
            if (u > 0.0) return u;
        }
    }

    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double x, y, s;
        do {
            x = 2.0 * uniform() - 1.0;
            y = 2.0 * uniform() - 1.0;
            s = x * x + y * y;
        } while (s >= 1.0 || s == 0.0);
        const double scale = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = y * scale;
        has_spare_ = true;
        return x * scale;
    }

    // Marsaglia & Tsang (2000).
    double gamma(double shape) {
        if (shape < 1.0) {
            const double boost = std::pow(uniform(), 1.0 / shape);
            return gamma(shape + 1.0) * boost;
        }
        const double dd = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * dd);
        while (true) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform();
            if (u < 1.0 - 0.0331 * (x * x) * (x * x)) return dd * v;
            if (std::log(u) < 0.5 * x * x + dd * (1.0 - v + std::log(v))) return dd * v;
        }
    }

    double beta(const BetaShape& shape) {
        while (true) {
            const double x = gamma(shape.alpha);
            const double y = gamma(shape.beta);
            const double b = x / (x + y);
            if (b > 0.0 && b < 1.0) return b;
        }
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

void check_shape(const BetaShape& s, const char* alpha_field, const char* beta_field) {
    if (!std::isfinite(s.alpha) || s.alpha <= 0.0) throw ValidationError(alpha_field, "must be finite and > 0");
    if (!std::isfinite(s.beta) || s.beta <= 0.0) throw ValidationError(beta_field, "must be finite and > 0");
}

}  // namespace

void validate(const GeneratorSpec& spec) {
    check_shape(spec.dist0, "alpha0", "beta0");
    check_shape(spec.dist1, "alpha1", "beta1");
}

std::vector<ScoredRecord> generate_scores(const GeneratorSpec& spec) {
    validate(spec);
    std::vector<ScoredRecord> out;
    out.reserve(static_cast<std::size_t>(spec.n0 + spec.n1));
    Sampler sampler(spec.seed);
    for (Count i = 0; i < spec.n0; ++i) out.push_back({sampler.beta(spec.dist0), ClassLabel::Zero});
    for (Count i = 0; i < spec.n1; ++i) out.push_back({sampler.beta(spec.dist1), ClassLabel::One});
    return out;
}

}  // namespace fstar
