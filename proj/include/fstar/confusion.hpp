#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace fstar {

using Count = std::uint64_t;

enum class ClassLabel : std::uint8_t { Zero = 0, One = 1 };

// Accepts only 0 or 1.
ClassLabel label_from_int(long long value);

inline int to_int(ClassLabel label) noexcept { return static_cast<int>(label); }

// One test-set object. Use make_record() to get a validated instance.
struct ScoredRecord {
    double score = 0.0;
    ClassLabel label = ClassLabel::Zero;

    friend bool operator==(const ScoredRecord&, const ScoredRecord&) = default;
};

// Rejects non-finite scores and labels other than 0/1.
ScoredRecord make_record(double score, long long label);

/// Two-by-two table of predicted vs. true class.
///
///                     true 0   true 1
///     predicted 0       tn       fn
///     predicted 1       fp       tp
class ConfusionMatrix {
public:
    constexpr ConfusionMatrix() = default;

    Count tp() const noexcept { return tp_; }
    Count fp() const noexcept { return fp_; }
    Count fn() const noexcept { return fn_; }
    Count tn() const noexcept { return tn_; }
    Count n() const noexcept { return tp_ + fp_ + fn_ + tn_; }

    Count positives() const noexcept { return tp_ + fn_; }
    Count negatives() const noexcept { return tn_ + fp_; }

    friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;

private:
    friend ConfusionMatrix from_counts(Count tp, Count fp, Count fn, Count tn);

    Count tp_ = 0;
    Count fp_ = 0;
    Count fn_ = 0;
    Count tn_ = 0;
};

// Objects whose score is strictly greater than the threshold are predicted
// class 1; a score equal to the threshold predicts class 0.
inline constexpr bool kThresholdIsStrict = true;

// Throws ValidationError if the total would overflow 64 bits.
ConfusionMatrix from_counts(Count tp, Count fp, Count fn, Count tn);

// Signed overload: a negative count raises ValidationError naming the field.
ConfusionMatrix from_signed_counts(std::int64_t tp, std::int64_t fp, std::int64_t fn, std::int64_t tn);

// Parses a decimal non-negative integer; rejects "-3", "2.5", "", "1e3".
Count parse_count(std::string_view field, std::string_view text);

ConfusionMatrix from_scored(std::span<const ScoredRecord> records, double threshold);

ConfusionMatrix swap_classes(const ConfusionMatrix& m);

/// Scores split by true class into contiguous columns. Thresholding a
/// PartitionedScores is the hot loop of a sweep: each grid point is two
/// count-above-threshold passes handled by the SIMD tally kernel.
class PartitionedScores {
public:
    PartitionedScores() = default;
    explicit PartitionedScores(std::span<const ScoredRecord> records);

    std::span<const double> class_zero() const noexcept { return zero_; }
    std::span<const double> class_one() const noexcept { return one_; }
    std::size_t size() const noexcept { return zero_.size() + one_.size(); }

    ConfusionMatrix at_threshold(double threshold) const;

private:
    std::vector<double> zero_;
    std::vector<double> one_;
};

}  // namespace fstar
