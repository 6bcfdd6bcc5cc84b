#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fstar/confusion.hpp"
#include "fstar/metric_value.hpp"
#include "fstar/sweep.hpp"

namespace fstar {

// ---------------------------------------------------------------------------
// Number rendering

// Shortest decimal that reads back to the same double.
std::string format_shortest(double v);
// 17 significant digits ("%.17g"); always round-trips.
std::string format_17(double v);
// Defined -> format_17, PositiveInfinite -> "inf", Undefined -> "NA".
std::string format_cell(const MetricValue& v);
// Inverse of format_cell. "NA" comes back Undefined("NA").
MetricValue parse_cell(std::string_view text);

// ---------------------------------------------------------------------------
// Scores CSV: header row naming "score" and "label" columns (any order,
// extra columns ignored), comma separated, LF or CRLF line endings.

std::vector<ScoredRecord> parse_scores_csv(std::string_view content, const std::string& source = "<memory>");
std::vector<ScoredRecord> read_scores_csv(const std::filesystem::path& path);
void write_scores_csv(std::span<const ScoredRecord> records, const std::filesystem::path& path);
std::string scores_csv(std::span<const ScoredRecord> records);

// ---------------------------------------------------------------------------
// Curves CSV, long format "t,metric,value". Rows are grouped by curve in the
// order given, then ordered by t. Multi-series files prepend a "series"
// column: "series,t,metric,value".

struct NamedCurves {
    std::string name;
    std::vector<MetricCurve> curves;
};

std::string curves_csv(std::span<const MetricCurve> curves);
std::string curves_csv(std::span<const NamedCurves> series);
void write_curves_csv(std::span<const MetricCurve> curves, const std::filesystem::path& path);
void write_curves_csv(std::span<const NamedCurves> series, const std::filesystem::path& path);

// Reads either layout; single-series files yield one unnamed entry.
std::vector<NamedCurves> parse_curves_csv(std::string_view content, const std::string& source = "<memory>");
std::vector<NamedCurves> read_curves_csv(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// SVG

// Plot geometry shared by both renderers: each panel maps [0,1] x [0,1]
// onto a square of kPlotSize pixels whose lower-left corner sits at
// (kPlotLeft, kPlotTop + kPlotSize) inside the panel.
inline constexpr double kPlotLeft = 60.0;
inline constexpr double kPlotTop = 30.0;
inline constexpr double kPlotSize = 360.0;
inline constexpr double kPanelWidth = 460.0;
inline constexpr double kPanelHeight = 450.0;
inline constexpr int kTransformSamples = 1001;

// F on the horizontal axis, F* = F/(2-F) as a single <path>, identity as a
// dashed <line>.
std::string transform_svg();
void render_transform_svg(const std::filesystem::path& path);

// One panel per metric (order of the first series), one colored polyline per
// series and contiguous Defined run. Each polyline carries data-t/data-v
// attributes with the exact values, rendered as in the curves CSV.
std::string sweep_svg(std::span<const NamedCurves> series);
void render_sweep_svg(std::span<const NamedCurves> series, const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// JSON report

struct ReportDocument {
    ConfusionMatrix matrix;
    std::vector<std::pair<std::string, MetricValue>> metrics;
    std::optional<std::string> input_path;
    std::optional<double> threshold;
    std::optional<double> beta;
    std::string tool_version;

    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

std::string report_json(const ReportDocument& doc);
void write_report_json(const ReportDocument& doc, const std::filesystem::path& path);
ReportDocument parse_report_json(std::string_view text);

struct CrossingEntry {
    std::string series_a;
    std::string series_b;
    std::string metric;
    CrossingSet brackets;
};

std::string crossing_report_json(const ThresholdGrid& grid, std::span<const CrossingEntry> entries);

// Whole-file helpers; throw IoError.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace fstar
