#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fstar/error.hpp"
#include "fstar/io_report.hpp"

namespace fstar {

std::string format_shortest(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string format_17(double v) {
    char buf[64];
    const int len = std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf, static_cast<std::size_t>(len));
}

std::string format_cell(const MetricValue& v) {
    switch (v.state()) {
        case MetricValue::State::Defined: return format_17(v.value());
        case MetricValue::State::PositiveInfinite: return "inf";
        case MetricValue::State::Undefined: return "NA";
    }
    return "NA";
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        const auto comma = line.find(',', pos);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(pos)));
            return fields;
        }
        fields.push_back(trim(line.substr(pos, comma - pos)));
        pos = comma + 1;
    }
}

// Calls fn(line_number, line) for each line, CR stripped, BOM dropped.
// The empty remainder after a final newline is not a line.
template <typename Fn>
void for_each_line(std::string_view content, Fn&& fn) {
    if (content.starts_with("\xEF\xBB\xBF")) content.remove_prefix(3);
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < content.size()) {
        auto nl = content.find('\n', pos);
        if (nl == std::string_view::npos) nl = content.size();
        auto line = content.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        fn(++line_no, line);
        pos = nl + 1;
    }
}

bool parse_double(std::string_view text, double& out) {
    if (text.empty()) return false;
    if (text.front() == '+') text.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc() && ptr == text.data() + text.size();
}

std::size_t column_index(const std::vector<std::string_view>& header, std::string_view name) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    return header.size();
}

}  // namespace

MetricValue parse_cell(std::string_view text) {
    if (text == "inf") return MetricValue::positive_infinite();
    if (text == "NA") return MetricValue::undefined("NA");
    double v = 0.0;
    if (!parse_double(text, v) || !std::isfinite(v)) {
        throw ValidationError("value", "cannot parse metric value \"" + std::string(text) + "\"");
    }
    return MetricValue::defined(v);
}

std::vector<ScoredRecord> parse_scores_csv(std::string_view content, const std::string& source) {
    std::vector<ScoredRecord> records;
    std::size_t score_col = 0;
    std::size_t label_col = 0;
    std::size_t needed = 0;
    bool have_header = false;

    for_each_line(content, [&](std::size_t line_no, std::string_view line) {
        if (!have_header) {
            const auto header = split_fields(line);
            score_col = column_index(header, "score");
            label_col = column_index(header, "label");
            if (score_col == header.size() || label_col == header.size()) {
                throw ParseError(source, line_no, "missing header with \"score\" and \"label\" columns");
            }
            needed = std::max(score_col, label_col) + 1;
            have_header = true;
            return;
        }
        if (trim(line).empty()) return;
        const auto fields = split_fields(line);
        if (fields.size() < needed) {
            throw ParseError(source, line_no, "expected at least " + std::to_string(needed) + " fields");
        }
        double score = 0.0;
        if (!parse_double(fields[score_col], score)) {
            throw ParseError(source, line_no, "bad score \"" + std::string(fields[score_col]) + "\"");
        }
        if (!std::isfinite(score)) throw ParseError(source, line_no, "score must be finite");
        const auto label = fields[label_col];
        if (label != "0" && label != "1") {
            throw ParseError(source, line_no, "label must be 0 or 1, got \"" + std::string(label) + "\"");
        }
        records.push_back({score, label == "1" ? ClassLabel::One : ClassLabel::Zero});
    });
    if (!have_header) throw ParseError(source, 1, "missing header with \"score\" and \"label\" columns");
    return records;
}

std::vector<ScoredRecord> read_scores_csv(const std::filesystem::path& path) {
    return parse_scores_csv(read_text_file(path), path.string());
}

std::string scores_csv(std::span<const ScoredRecord> records) {
    std::string out = "score,label\n";
    for (const auto& r : records) {
        out += format_shortest(r.score);
        out += r.label == ClassLabel::One ? ",1\n" : ",0\n";
    }
    return out;
}

void write_scores_csv(std::span<const ScoredRecord> records, const std::filesystem::path& path) {
    write_text_file(path, scores_csv(records));
}

namespace {

void append_curve_rows(std::string& out, const std::string* series, const MetricCurve& c) {
    for (const auto& p : c.points) {
        if (series) {
            out += *series;
            out += ',';
        }
        out += format_shortest(p.t);
        out += ',';
        out += c.metric_id;
        out += ',';
        out += format_cell(p.value);
        out += '\n';
    }
}

void check_series_name(const std::string& name) {
    if (name.find_first_of(",\r\n") != std::string::npos) {
        throw ValidationError("series", "name may not contain commas or newlines: " + name);
    }
}

}  // namespace

std::string curves_csv(std::span<const MetricCurve> curves) {
    if (curves.empty()) throw ValidationError("curves", "nothing to write");
    std::string out = "t,metric,value\n";
    for (const auto& c : curves) append_curve_rows(out, nullptr, c);
    return out;
}

std::string curves_csv(std::span<const NamedCurves> series) {
    if (series.empty()) throw ValidationError("curves", "nothing to write");
    std::string out = "series,t,metric,value\n";
    for (const auto& s : series) {
        check_series_name(s.name);
        for (const auto& c : s.curves) append_curve_rows(out, &s.name, c);
    }
    return out;
}

void write_curves_csv(std::span<const MetricCurve> curves, const std::filesystem::path& path) {
    write_text_file(path, curves_csv(curves));
}

void write_curves_csv(std::span<const NamedCurves> series, const std::filesystem::path& path) {
    write_text_file(path, curves_csv(series));
}

std::vector<NamedCurves> parse_curves_csv(std::string_view content, const std::string& source) {
    std::vector<NamedCurves> out;
    bool have_header = false;
    bool with_series = false;

    for_each_line(content, [&](std::size_t line_no, std::string_view line) {
        if (!have_header) {
            if (line == "t,metric,value") {
                with_series = false;
            } else if (line == "series,t,metric,value") {
                with_series = true;
            } else {
                throw ParseError(source, line_no, "expected header t,metric,value or series,t,metric,value");
            }
            have_header = true;
            return;
        }
        if (line.empty()) return;
        const auto fields = split_fields(line);
        const std::size_t expected = with_series ? 4 : 3;
        if (fields.size() != expected) {
            throw ParseError(source, line_no, "expected " + std::to_string(expected) + " fields");
        }
        const std::size_t off = with_series ? 1 : 0;
        const std::string series = with_series ? std::string(fields[0]) : std::string();
        double t = 0.0;
        if (!parse_double(fields[off], t) || !std::isfinite(t)) {
            throw ParseError(source, line_no, "bad threshold \"" + std::string(fields[off]) + "\"");
        }
        MetricValue value = MetricValue::undefined("NA");
        try {
            value = parse_cell(fields[off + 2]);
        } catch (const ValidationError& e) {
            throw ParseError(source, line_no, e.what());
        }
        const std::string metric(fields[off + 1]);

        if (out.empty() || out.back().name != series) out.push_back({series, {}});
        auto& curves = out.back().curves;
        if (curves.empty() || curves.back().metric_id != metric) curves.push_back({metric, {}});
        curves.back().points.push_back({t, std::move(value)});
    });
    if (!have_header) throw ParseError(source, 1, "empty curves file");
    return out;
}

std::vector<NamedCurves> read_curves_csv(const std::filesystem::path& path) {
    return parse_curves_csv(read_text_file(path), path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string() + " for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("error reading " + path.string());
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError("error writing " + path.string());
}

}  // namespace fstar
