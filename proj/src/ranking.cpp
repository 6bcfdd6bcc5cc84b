#include "fstar/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fstar/error.hpp"

namespace fstar {

MetricValue auc(std::span<const ScoredRecord> records) {
    std::vector<ScoredRecord> sorted(records.begin(), records.end());
    for (const auto& r : sorted) {
        if (!std::isfinite(r.score)) throw ValidationError("score", "must be finite");
    }
    std::sort(sorted.begin(), sorted.end(),
              [](const ScoredRecord& a, const ScoredRecord& b) { return a.score < b.score; });

    double n0 = 0.0;
    double n1 = 0.0;
    // Sum of 1-based midranks of the class-1 scores. Midranks are half
    // integers, so the sum is exact well beyond any realistic n.
    double rank_sum_one = 0.0;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j].score == sorted[i].score) ++j;
        const double midrank = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j));
        for (std::size_t k = i; k < j; ++k) {
            if (sorted[k].label == ClassLabel::One) {
                rank_sum_one += midrank;
                n1 += 1.0;
            } else {
                n0 += 1.0;
            }
        }
        i = j;
    }
    if (n0 == 0.0 || n1 == 0.0) return MetricValue::undefined("one class absent");
    const double u = rank_sum_one - n1 * (n1 + 1.0) / 2.0;
    return MetricValue::defined(u / (n0 * n1));
}

}  // namespace fstar
