// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fstar/io_report.hpp"
#include "fstar/point_metrics.hpp"
#include "fstar/ranking.hpp"
#include "fstar/simd/kernels.hpp"
#include "fstar/sweep.hpp"
#include "fstar/synth.hpp"
#include "support/generators.hpp"
#include "support/xml_check.hpp"

namespace {

using namespace fstar;
using fstar::testing::Rng;

struct Outcome {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, format, a, b, c);
    return buf;
}

// Four closed forms of F* on 10,000 matrices, |diff| <= 1e-12, < 5 s.
Outcome identity_suite() {
    const auto start = Clock::now();
    Rng rng(20'210'901);
    double worst = 0.0;
    int pr_checked = 0;
    for (int i = 0; i < 10'000; ++i) {
        const auto m = fstar::testing::random_relevant_matrix(rng);
        const double direct = f_star(m).value();
        const double f = f_measure(m).value();
        worst = std::max(worst, std::abs(direct - f / (2.0 - f)));
        worst = std::max(worst, std::abs(direct - static_cast<double>(m.tp()) / static_cast<double>(m.n() - m.tn())));
        const auto p = precision(m);
        const auto r = recall(m);
        if (p.is_defined() && r.is_defined() && p.value() + r.value() > 0.0) {
            const double pr = p.value() * r.value();
            worst = std::max(worst, std::abs(direct - pr / (p.value() + r.value() - pr)));
            ++pr_checked;
        }
    }
    const double elapsed = seconds_since(start);
    return {worst <= 1e-12 && elapsed < 5.0,
            fmt("max |diff| %.3g over 10000 matrices (%.0f with P,R form), %.3f s", worst, pr_checked, elapsed)};
}

// tp/(fn+fp) == F/(2(1-F)) where both defined, |diff| <= 1e-12.
Outcome f_prime_identity() {
    Rng rng(4242);
    double worst = 0.0;
    double worst_rel = 0.0;
    double smallest_violating = INFINITY;
    int compared = 0;
    int violations = 0;
    for (int i = 0; i < 10'000; ++i) {
        const auto m = fstar::testing::random_relevant_matrix(rng);
        const auto fp = f_prime(m);
        const double f = f_measure(m).value();
        if (!fp.is_defined() || f >= 1.0) continue;
        const double other = 0.5 * f / (1.0 - f);
        const double diff = std::abs(fp.value() - other);
        worst = std::max(worst, diff);
        worst_rel = std::max(worst_rel, diff / std::max(1.0, fp.value()));
        if (diff > 1e-12) {
            ++violations;
            smallest_violating = std::min(smallest_violating, fp.value());
        }
        ++compared;
    }
    std::string detail = fmt("%.0f of %.0f matrices over 1e-12, max |diff| %.3g", violations, compared, worst) +
                         fmt(" (max rel %.3g)", worst_rel);
    if (violations > 0) detail += fmt(", smallest violating F' %.4g", smallest_violating);
    return {violations == 0, detail};
}

// 0->0, 1->1, 0.5->1/3 to 1e-15; round trip on 10^6 points within 1e-12; < 1 s.
Outcome transform_fixed_points() {
    const auto start = Clock::now();
    const bool fixed = transform_f_to_fstar(0.0) == 0.0 && transform_f_to_fstar(1.0) == 1.0 &&
                       std::abs(transform_f_to_fstar(0.5) - 1.0 / 3.0) <= 1e-15 &&
                       transform_fstar_to_f(0.0) == 0.0 && transform_fstar_to_f(1.0) == 1.0;
    constexpr std::size_t kPoints = 1'000'000;
    std::vector<double> grid(kPoints + 1), fs(kPoints + 1), back(kPoints + 1);
    for (std::size_t i = 0; i <= kPoints; ++i) grid[i] = static_cast<double>(i) / kPoints;
    simd::f_to_fstar(grid, fs);
    simd::fstar_to_f(fs, back);
    double worst = 0.0;
    for (std::size_t i = 0; i <= kPoints; ++i) worst = std::max(worst, std::abs(back[i] - grid[i]));
    // the inverse direction too: s -> F -> s
    simd::fstar_to_f(grid, fs);
    simd::f_to_fstar(fs, back);
    for (std::size_t i = 0; i <= kPoints; ++i) worst = std::max(worst, std::abs(back[i] - grid[i]));
    const double elapsed = seconds_since(start);
    return {fixed && worst <= 1e-12 && elapsed < 1.0,
            std::string("fixed points ") + (fixed ? "ok" : "BAD") +
                fmt(", round-trip max |diff| %.3g on 10^6+1 points, %.3f s", worst, elapsed)};
}

// max(F - F*) on a 1e-6 grid is 3 - 2 sqrt(2) at F = 2 - sqrt(2).
Outcome maximum_gap() {
    constexpr std::size_t kPoints = 1'000'000;
    double best_gap = -1.0;
    double best_f = 0.0;
    for (std::size_t i = 0; i <= kPoints; ++i) {
        const double f = static_cast<double>(i) / kPoints;
        const double gap = f - transform_f_to_fstar(f);
        if (gap > best_gap) {
            best_gap = gap;
            best_f = f;
        }
    }
    const double gap_expected = 3.0 - 2.0 * std::sqrt(2.0);
    const double f_expected = 2.0 - std::sqrt(2.0);
    return {std::abs(best_gap - gap_expected) <= 1e-6 && std::abs(best_f - f_expected) <= 1e-3,
            fmt("gap %.9f (expected %.9f) at F = %.6f", best_gap, gap_expected, best_f)};
}

Outcome order_preservation() {
    Rng rng(777);
    int exceptions = 0;
    int strict = 0;
    for (int i = 0; i < 10'000; ++i) {
        const auto a = fstar::testing::random_relevant_matrix(rng);
        const auto b = fstar::testing::random_relevant_matrix(rng);
        const double df = f_measure(a).value() - f_measure(b).value();
        const double ds = f_star(a).value() - f_star(b).value();
        if ((df > 0) - (df < 0) != (ds > 0) - (ds < 0)) ++exceptions;
        if (df != 0.0) ++strict;
    }
    return {exceptions == 0, fmt("%.0f exceptions in 10000 pairs (%.0f with F_A != F_B)", exceptions, strict)};
}

// 100 synthetic classifier pairs on the default grid; F and F* crossing
// brackets identical; < 30 s.
Outcome crossing_invariance() {
    const auto start = Clock::now();
    Rng rng(31'337);
    const ThresholdGrid grid;
    const std::vector<MetricId> ids{MetricId::F, MetricId::FStar};
    int mismatches = 0;
    int with_crossings = 0;
    std::size_t total_brackets = 0;
    for (int pair = 0; pair < 100; ++pair) {
        const auto shape = [&] { return BetaShape{0.5 + 5.0 * rng.unit(), 0.5 + 5.0 * rng.unit()}; };
        const Count n0 = 100 + rng.below(900);
        const Count n1 = 50 + rng.below(450);
        const BetaShape negatives = shape();
        const GeneratorSpec a{n0, n1, negatives, shape(), rng.below(1ull << 40)};
        const GeneratorSpec b{n0, n1, shape(), shape(), rng.below(1ull << 40)};
        const auto ca = sweep(generate_scores(a), grid, ids);
        const auto cb = sweep(generate_scores(b), grid, ids);
        const auto f_brackets = find_crossings(ca[0], cb[0]);
        const auto s_brackets = find_crossings(ca[1], cb[1]);
        if (f_brackets != s_brackets) ++mismatches;
        if (!f_brackets.empty()) ++with_crossings;
        total_brackets += f_brackets.size();
    }
    const double elapsed = seconds_since(start);
    return {mismatches == 0 && elapsed < 30.0,
            fmt("%.0f mismatching pairs of 100; %.0f pairs cross", mismatches, with_crossings) +
                fmt(" (%.0f brackets), %.3f s", static_cast<double>(total_brackets), elapsed)};
}

Outcome auc_oracle() {
    Rng rng(1'000);
    double worst = 0.0;
    int undefined_mismatch = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto records = fstar::testing::random_records(rng, 1 + rng.below(200), trial % 2 == 0);
        const double expected = fstar::testing::brute_force_auc(records);
        const auto got = auc(records);
        if (std::isnan(expected) || got.is_undefined()) {
            undefined_mismatch += std::isnan(expected) != got.is_undefined();
            continue;
        }
        worst = std::max(worst, std::abs(got.value() - expected));
    }
    return {worst <= 1e-12 && undefined_mismatch == 0,
            fmt("max |rank - brute force| %.3g over 1000 inputs, %.0f state mismatches", worst, undefined_mismatch)};
}

// Fractions worked by hand for tp=8, fp=3, fn=1, tn=5 (n=17):
//   F  = 2*8/(2*8+1+3) = 16/20           F' = 8/(1+3) = 2
//   F* = 8/(8+1+3)     = 2/3             misclassification = 4/17
//   kappa: p_o = 13/17, p_e = (11*9 + 6*8)/289 = 147/289 -> 37/71
//   Youden = 8/9 + 5/8 - 1 = 37/72
//   MCC = (8*5 - 3*1)/sqrt(11*9*8*6) = 37/sqrt(4752)
Outcome hand_value_panel() {
    const auto m = from_counts(8, 3, 1, 5);
    const std::vector<std::pair<std::string, std::pair<MetricValue, double>>> rows{
        {"F", {f_measure(m), 0.8}},
        {"F'", {f_prime(m), 2.0}},
        {"F*", {f_star(m), 2.0 / 3.0}},
        {"misclassification", {misclassification_rate(m), 4.0 / 17.0}},
        {"kappa", {cohen_kappa(m), 37.0 / 71.0}},
        {"youden", {youden_index(m), 37.0 / 72.0}},
        {"mcc", {matthews_coefficient(m), 37.0 / std::sqrt(4752.0)}},
    };
    std::string failures;
    double worst = 0.0;
    for (const auto& [name, pair] : rows) {
        const auto& [value, expected] = pair;
        const double diff = value.is_defined() ? std::abs(value.value() - expected) : 1.0;
        worst = std::max(worst, diff);
        if (diff > 1e-9) failures += " " + name;
    }
    return {failures.empty(), failures.empty() ? fmt("7 values, max |diff| %.3g", worst) : "off:" + failures};
}

Outcome beta_reduction() {
    Rng rng(5150);
    const BetaWeight one(1.0);
    int inexact = 0;
    for (int i = 0; i < 10'000; ++i) {
        const auto m = fstar::testing::random_matrix(rng);
        if (!(f_beta(m, one) == f_measure(m))) ++inexact;
        if (!(f_star_beta(m, one) == f_star(m))) ++inexact;
        if (!(f_prime_beta(m, one) == f_prime(m))) ++inexact;
    }
    const auto m = from_counts(5, 5, 0, 0);
    const BetaWeight two(2.0);
    const double fb = f_beta(m, two).value();
    const double sb = f_star_beta(m, two).value();
    const double pb = f_prime_beta(m, two).value();
    const bool example = std::abs(fb - 5.0 / 6.0) <= 1e-12 && std::abs(sb - 5.0 / 7.0) <= 1e-12 &&
                         std::abs(pb - 2.5) <= 1e-12;
    return {inexact == 0 && example,
            fmt("%.0f inexact reductions in 30000; beta=2: F=%.15f F*=%.15f", inexact, fb, sb) +
                fmt(" F'=%.15f", pb)};
}

Outcome transform_svg_artifact() {
    const auto path = std::filesystem::temp_directory_path() / "fstar_acceptance_transform.svg";
    render_transform_svg(path);
    const std::string doc = read_text_file(path);
    std::filesystem::remove(path);
    const std::string problem = fstar::testing::xml_problem(doc);
    const auto d_start = doc.find(" d=\"");
    if (!problem.empty() || d_start == std::string::npos) return {false, "malformed SVG: " + problem};
    std::string d = doc.substr(d_start + 4, doc.find('"', d_start + 4) - d_start - 4);
    std::replace(d.begin(), d.end(), 'M', ' ');
    std::replace(d.begin(), d.end(), 'L', ' ');
    std::istringstream ss(d);
    double x, y, worst = 0.0;
    int samples = 0;
    while (ss >> x >> y) {
        const double f = (x - kPlotLeft) / kPlotSize;
        const double s = 1.0 - (y - kPlotTop) / kPlotSize;
        worst = std::max(worst, std::abs(s - f / (2.0 - f)));
        ++samples;
    }
    return {samples == kTransformSamples && worst <= 1e-3,
            fmt("well-formed, %.0f samples, max |F* - F/(2-F)| %.3g", samples, worst)};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"identity suite (four F* forms)", identity_suite},
        {"F' identity", f_prime_identity},
        {"transform fixed points and round trip", transform_fixed_points},
        {"maximum transform gap", maximum_gap},
        {"order preservation", order_preservation},
        {"crossing invariance", crossing_invariance},
        {"AUC rank vs brute force", auc_oracle},
        {"hand-value panel", hand_value_panel},
        {"beta reduction", beta_reduction},
        {"transform SVG artifact", transform_svg_artifact},
    };
    std::printf("simd backend: %s\n", std::string(simd::backend_name(simd::active_backend())).c_str());
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::printf("[%s] %-40s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
