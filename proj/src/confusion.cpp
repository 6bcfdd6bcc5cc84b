#include "fstar/confusion.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include "fstar/error.hpp"
#include "fstar/simd/kernels.hpp"

namespace fstar {

ClassLabel label_from_int(long long value) {
    if (value == 0) return ClassLabel::Zero;
    if (value == 1) return ClassLabel::One;
    throw ValidationError("label", "must be 0 or 1, got " + std::to_string(value));
}

ScoredRecord make_record(double score, long long label) {
    if (!std::isfinite(score)) {
        throw ValidationError("score", "must be finite");
    }
    return ScoredRecord{score, label_from_int(label)};
}

ConfusionMatrix from_counts(Count tp, Count fp, Count fn, Count tn) {
    constexpr Count kMax = std::numeric_limits<Count>::max();
    if (tp > kMax - fp || tp + fp > kMax - fn || tp + fp + fn > kMax - tn) {
        throw ValidationError("n", "total count overflows 64 bits");
    }
    ConfusionMatrix m;
    m.tp_ = tp;
    m.fp_ = fp;
    m.fn_ = fn;
    m.tn_ = tn;
    return m;
}

ConfusionMatrix from_signed_counts(std::int64_t tp, std::int64_t fp, std::int64_t fn, std::int64_t tn) {
    const auto check = [](const char* field, std::int64_t v) {
        if (v < 0) throw ValidationError(field, "count must be non-negative, got " + std::to_string(v));
        return static_cast<Count>(v);
    };
    return from_counts(check("tp", tp), check("fp", fp), check("fn", fn), check("tn", tn));
}

Count parse_count(std::string_view field, std::string_view text) {
    const std::string name(field);
    if (text.empty()) throw ValidationError(name, "count is empty");
    if (text.front() == '-') {
        throw ValidationError(name, "count must be non-negative, got " + std::string(text));
    }
    Count value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) {
        throw ValidationError(name, "count out of range: " + std::string(text));
    }
    if (ec != std::errc() || ptr != last) {
        throw ValidationError(name, "count must be a non-negative integer, got " + std::string(text));
    }
    return value;
}

ConfusionMatrix from_scored(std::span<const ScoredRecord> records, double threshold) {
    return PartitionedScores(records).at_threshold(threshold);
}

ConfusionMatrix swap_classes(const ConfusionMatrix& m) {
    return from_counts(m.tn(), m.fn(), m.fp(), m.tp());
}

PartitionedScores::PartitionedScores(std::span<const ScoredRecord> records) {
    for (const auto& r : records) {
        if (!std::isfinite(r.score)) throw ValidationError("score", "must be finite");
        switch (r.label) {
            case ClassLabel::Zero: zero_.push_back(r.score); break;
            case ClassLabel::One: one_.push_back(r.score); break;
            default: throw ValidationError("label", "must be 0 or 1");
        }
    }
}

ConfusionMatrix PartitionedScores::at_threshold(double threshold) const {
    if (!std::isfinite(threshold)) throw ValidationError("threshold", "must be finite");
    const Count tp = simd::count_above(one_, threshold);
    const Count fp = simd::count_above(zero_, threshold);
    return from_counts(tp, fp, one_.size() - tp, zero_.size() - fp);
}

}  // namespace fstar
