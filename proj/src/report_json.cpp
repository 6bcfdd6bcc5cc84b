#include <json.hpp>

#include "fstar/error.hpp"
#include "fstar/io_report.hpp"
#include "fstar/version.hpp"

namespace fstar {

using Json = nlohmann::ordered_json;

namespace {

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<double> read_optional_number(const Json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<double>();
}

}  // namespace

// Schema (field order is fixed):
//   tool, version, input (string|null), threshold (number|null),
//   beta (number|null), matrix {tp, fp, fn, tn, n},
//   metrics {name: number | "inf" | "NA"}, reasons {name: text} for each "NA".
std::string report_json(const ReportDocument& doc) {
    Json j;
    j["tool"] = kToolName;
    j["version"] = doc.tool_version;
    j["input"] = doc.input_path ? Json(*doc.input_path) : Json(nullptr);
    j["threshold"] = optional_number(doc.threshold);
    j["beta"] = optional_number(doc.beta);
    j["matrix"] = Json{{"tp", doc.matrix.tp()},
                       {"fp", doc.matrix.fp()},
                       {"fn", doc.matrix.fn()},
                       {"tn", doc.matrix.tn()},
                       {"n", doc.matrix.n()}};
    Json metrics = Json::object();
    Json reasons = Json::object();
    for (const auto& [name, value] : doc.metrics) {
        switch (value.state()) {
            case MetricValue::State::Defined: metrics[name] = value.value(); break;
            case MetricValue::State::PositiveInfinite: metrics[name] = "inf"; break;
            case MetricValue::State::Undefined:
                metrics[name] = "NA";
                reasons[name] = value.reason();
                break;
        }
    }
    j["metrics"] = std::move(metrics);
    j["reasons"] = std::move(reasons);
    return j.dump(2) + "\n";
}

void write_report_json(const ReportDocument& doc, const std::filesystem::path& path) {
    write_text_file(path, report_json(doc));
}

ReportDocument parse_report_json(std::string_view text) {
    try {
        const Json j = Json::parse(text);
        ReportDocument doc;
        doc.tool_version = j.at("version").get<std::string>();
        if (!j.at("input").is_null()) doc.input_path = j.at("input").get<std::string>();
        doc.threshold = read_optional_number(j, "threshold");
        doc.beta = read_optional_number(j, "beta");
        const auto& m = j.at("matrix");
        doc.matrix = from_counts(m.at("tp").get<Count>(), m.at("fp").get<Count>(), m.at("fn").get<Count>(),
                                 m.at("tn").get<Count>());
        if (doc.matrix.n() != m.at("n").get<Count>()) throw ValidationError("matrix", "n does not match counts");
        const Json& reasons = j.contains("reasons") ? j.at("reasons") : Json::object();
        for (const auto& [name, value] : j.at("metrics").items()) {
            if (value.is_number()) {
                doc.metrics.emplace_back(name, MetricValue::defined(value.get<double>()));
            } else if (value == "inf") {
                doc.metrics.emplace_back(name, MetricValue::positive_infinite());
            } else if (value == "NA") {
                doc.metrics.emplace_back(name, MetricValue::undefined(
                                                   reasons.contains(name) ? reasons.at(name).get<std::string>() : ""));
            } else {
                throw ValidationError("metrics", "bad value for " + name);
            }
        }
        return doc;
    } catch (const Json::exception& e) {
        throw ValidationError("report", std::string("malformed report JSON: ") + e.what());
    }
}

std::string crossing_report_json(const ThresholdGrid& grid, std::span<const CrossingEntry> entries) {
    Json j;
    j["grid"] = grid.to_string();
    Json pairs = Json::array();
    for (const auto& e : entries) {
        Json brackets = Json::array();
        for (const auto& b : e.brackets) brackets.push_back(Json::array({b.lower, b.upper}));
        pairs.push_back(Json{{"a", e.series_a}, {"b", e.series_b}, {"metric", e.metric}, {"brackets", brackets}});
    }
    j["pairs"] = std::move(pairs);
    return j.dump(2) + "\n";
}

}  // namespace fstar
