#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fstar/confusion.hpp"
#include "fstar/metric_value.hpp"
#include "fstar/point_metrics.hpp"

namespace fstar {

/// Thresholds start, start+step, ... up to stop, with stop always included.
class ThresholdGrid {
public:
    // 0 to 1 in steps of 0.01: 101 points.
    ThresholdGrid() : ThresholdGrid(0.0, 1.0, 0.01) {}
    // Throws ValidationError unless all finite, start < stop and step > 0.
    ThresholdGrid(double start, double stop, double step);

    // Parses "start:stop:step".
    static ThresholdGrid parse(std::string_view text);

    double start() const noexcept { return start_; }
    double stop() const noexcept { return stop_; }
    double step() const noexcept { return step_; }
    const std::vector<double>& points() const noexcept { return points_; }
    std::string to_string() const;

private:
    double start_;
    double stop_;
    double step_;
    std::vector<double> points_;
};

struct CurvePoint {
    double t;
    MetricValue value;

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

struct MetricCurve {
    std::string metric_id;
    std::vector<CurvePoint> points;

    friend bool operator==(const MetricCurve&, const MetricCurve&) = default;
};

// Open interval (lower, upper) between grid points where the sign of the
// difference of two curves flips.
struct Bracket {
    double lower;
    double upper;

    friend bool operator==(const Bracket&, const Bracket&) = default;
};

using CrossingSet = std::vector<Bracket>;

// One curve per requested metric, in request order. Throws ValidationError
// on an empty record list (when metrics are requested).
std::vector<MetricCurve> sweep(std::span<const ScoredRecord> records, const ThresholdGrid& grid,
                               std::span<const MetricId> metrics, BetaWeight w = BetaWeight(1.0));

// Name-based overload; unknown names raise ValidationError listing the valid ones.
std::vector<MetricCurve> sweep(std::span<const ScoredRecord> records, const ThresholdGrid& grid,
                               std::span<const std::string> metrics, BetaWeight w = BetaWeight(1.0));

std::vector<MetricCurve> sweep(const PartitionedScores& scores, const ThresholdGrid& grid,
                               std::span<const MetricId> metrics, BetaWeight w = BetaWeight(1.0));

/// Sign changes of a - b along the shared grid. Points where either value is
/// not Defined, or where the difference is exactly zero, are skipped: they
/// neither count as a crossing nor reset the last known sign. Each bracket
/// runs from the last signed point to the first point of opposite sign.
CrossingSet find_crossings(const MetricCurve& a, const MetricCurve& b);

// Largest value on the curve, smallest t on ties. PositiveInfinite beats any
// Defined value; Undefined points are ignored.
std::pair<double, MetricValue> best_threshold(const MetricCurve& c);

}  // namespace fstar
