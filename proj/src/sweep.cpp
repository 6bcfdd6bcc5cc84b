#include "fstar/sweep.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "fstar/error.hpp"

namespace fstar {

namespace {

double parse_grid_number(std::string_view text, const char* part) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw ValidationError("grid", std::string("cannot parse ") + part + " \"" + std::string(text) + "\"");
    }
    return v;
}

}  // namespace

ThresholdGrid::ThresholdGrid(double start, double stop, double step) : start_(start), stop_(stop), step_(step) {
    if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step)) {
        throw ValidationError("grid", "start, stop and step must be finite");
    }
    if (!(start < stop)) throw ValidationError("grid", "start must be less than stop");
    if (!(step > 0.0)) throw ValidationError("grid", "step must be positive");

    const double span = stop - start;
    const double count_estimate = span / step;
    if (count_estimate > 1e8) throw ValidationError("grid", "more than 1e8 grid points");

    // Steps like 0.01 are not exact in binary; dividing by the integer 100
    // gives the nearest doubles to the decimal grid points.
    const double inverse = 1.0 / step;
    const double rounded_inverse = std::round(inverse);
    const bool integral_inverse =
        rounded_inverse >= 1.0 && std::abs(inverse - rounded_inverse) <= 1e-9 * rounded_inverse;
    const auto point = [&](double i) { return integral_inverse ? start + i / rounded_inverse : start + i * step; };

    const double tolerance = 1e-9 * step;
    const auto steps = static_cast<long long>(std::floor(count_estimate + 1e-9));
    points_.reserve(static_cast<std::size_t>(steps) + 2);
    for (long long i = 0; i <= steps; ++i) {
        double t = point(static_cast<double>(i));
        if (t >= stop - tolerance) t = stop;
        if (!points_.empty() && t <= points_.back()) continue;
        points_.push_back(t);
        if (t == stop) break;
    }
    if (points_.back() != stop) points_.push_back(stop);
}

ThresholdGrid ThresholdGrid::parse(std::string_view text) {
    const auto first = text.find(':');
    const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
    if (first == std::string_view::npos || second == std::string_view::npos ||
        text.find(':', second + 1) != std::string_view::npos) {
        throw ValidationError("grid", "expected start:stop:step, got \"" + std::string(text) + "\"");
    }
    return ThresholdGrid(parse_grid_number(text.substr(0, first), "start"),
                         parse_grid_number(text.substr(first + 1, second - first - 1), "stop"),
                         parse_grid_number(text.substr(second + 1), "step"));
}

std::string ThresholdGrid::to_string() const {
    const auto fmt = [](double v) {
        char buf[64];
        const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
        return std::string(buf, ptr);
    };
    return fmt(start_) + ":" + fmt(stop_) + ":" + fmt(step_);
}

std::vector<MetricCurve> sweep(const PartitionedScores& scores, const ThresholdGrid& grid,
                               std::span<const MetricId> metrics, BetaWeight w) {
    std::vector<MetricCurve> curves;
    if (metrics.empty()) return curves;
    if (scores.size() == 0) throw ValidationError("records", "sweep needs at least one record");

    curves.reserve(metrics.size());
    for (auto id : metrics) {
        MetricCurve c{std::string(metric_name(id)), {}};
        c.points.reserve(grid.points().size());
        curves.push_back(std::move(c));
    }
    for (double t : grid.points()) {
        const ConfusionMatrix m = scores.at_threshold(t);
        for (std::size_t k = 0; k < metrics.size(); ++k) {
            curves[k].points.push_back({t, evaluate(metrics[k], m, w)});
        }
    }
    return curves;
}

std::vector<MetricCurve> sweep(std::span<const ScoredRecord> records, const ThresholdGrid& grid,
                               std::span<const MetricId> metrics, BetaWeight w) {
    if (metrics.empty()) return {};
    return sweep(PartitionedScores(records), grid, metrics, w);
}

std::vector<MetricCurve> sweep(std::span<const ScoredRecord> records, const ThresholdGrid& grid,
                               std::span<const std::string> metrics, BetaWeight w) {
    std::vector<MetricId> ids;
    ids.reserve(metrics.size());
    for (const auto& name : metrics) ids.push_back(parse_metric(name));
    return sweep(records, grid, ids, w);
}

CrossingSet find_crossings(const MetricCurve& a, const MetricCurve& b) {
    if (a.metric_id != b.metric_id) {
        throw ValidationError("curves", "metric mismatch: " + a.metric_id + " vs " + b.metric_id);
    }
    if (a.points.size() != b.points.size()) throw ValidationError("curves", "grids differ in length");
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        if (a.points[i].t != b.points[i].t) throw ValidationError("curves", "grids differ");
    }

    CrossingSet out;
    int last_sign = 0;
    double last_t = 0.0;
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        const auto& va = a.points[i].value;
        const auto& vb = b.points[i].value;
        if (!va.is_defined() || !vb.is_defined()) continue;
        const double diff = va.value() - vb.value();
        const int sign = (diff > 0.0) - (diff < 0.0);
        if (sign == 0) continue;
        if (last_sign != 0 && sign != last_sign) out.push_back({last_t, a.points[i].t});
        last_sign = sign;
        last_t = a.points[i].t;
    }
    return out;
}

std::pair<double, MetricValue> best_threshold(const MetricCurve& c) {
    const CurvePoint* best = nullptr;
    for (const auto& p : c.points) {
        if (p.value.is_undefined()) continue;
        if (best == nullptr) {
            best = &p;
            continue;
        }
        if (best->value.is_infinite()) continue;
        if (p.value.is_infinite() || p.value.value() > best->value.value()) best = &p;
    }
    if (best == nullptr) throw ValidationError("curve", "curve entirely undefined");
    return {best->t, best->value};
}

}  // namespace fstar
