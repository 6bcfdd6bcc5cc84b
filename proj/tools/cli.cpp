#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "fstar/confusion.hpp"
#include "fstar/error.hpp"
#include "fstar/io_report.hpp"
#include "fstar/point_metrics.hpp"
#include "fstar/sweep.hpp"
#include "fstar/synth.hpp"
#include "fstar/version.hpp"

namespace fstar::cli {

namespace {

// Flag problem detected after CLI11 parsing; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <typename Fn>
auto usage_checked(Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const ValidationError& e) {
        throw UsageError(e.what());
    }
}

constexpr const char* kDefaultMetrics = "f,f_star";
constexpr const char* kDefaultGrid = "0:1:0.01";

struct Context {
    std::ostream& out;
    std::ostream& err;
    Options options;
};

std::vector<MetricId> metrics_with_beta(std::vector<MetricId> ids, bool weighted) {
    if (!weighted) return ids;
    for (auto id : {MetricId::FBeta, MetricId::FPrimeBeta, MetricId::FStarBeta}) {
        if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
    }
    return ids;
}

ReportDocument build_report(const ConfusionMatrix& m, const std::vector<MetricId>& ids,
                            const std::optional<double>& beta) {
    ReportDocument doc;
    doc.matrix = m;
    doc.beta = beta;
    doc.tool_version = kToolVersion;
    const BetaWeight w(beta.value_or(1.0));
    for (auto id : ids) doc.metrics.emplace_back(std::string(metric_name(id)), evaluate(id, m, w));
    return doc;
}

std::string report_table(const ReportDocument& doc, bool color) {
    const std::string bold = color ? "\x1b[1m" : "";
    const std::string dim = color ? "\x1b[2m" : "";
    const std::string reset = color ? "\x1b[0m" : "";
    std::ostringstream ss;
    if (doc.input_path) ss << std::left << std::setw(24) << "input" << *doc.input_path << "\n";
    if (doc.threshold) ss << std::left << std::setw(24) << "threshold" << format_shortest(*doc.threshold) << "\n";
    if (doc.beta) ss << std::left << std::setw(24) << "beta" << format_shortest(*doc.beta) << "\n";
    const auto& m = doc.matrix;
    ss << std::left << std::setw(24) << "matrix"
       << "tp=" << m.tp() << " fp=" << m.fp() << " fn=" << m.fn() << " tn=" << m.tn() << " n=" << m.n() << "\n";
    ss << bold << std::left << std::setw(24) << "metric" << "value" << reset << "\n";
    for (const auto& [name, value] : doc.metrics) {
        ss << std::left << std::setw(24) << name;
        switch (value.state()) {
            case MetricValue::State::Defined: ss << format_shortest(value.value()); break;
            case MetricValue::State::PositiveInfinite: ss << "inf"; break;
            case MetricValue::State::Undefined: ss << "NA" << dim << " (" << value.reason() << ")" << reset; break;
        }
        ss << "\n";
    }
    return ss.str();
}

void emit_report(Context& ctx, const ReportDocument& doc, bool json, const std::string& out_path) {
    const std::string text = json ? report_json(doc) : report_table(doc, ctx.options.color && out_path.empty());
    if (out_path.empty()) {
        ctx.out << text;
    } else {
        write_text_file(out_path, text);
    }
}

std::optional<double> checked_beta(const std::optional<double>& beta) {
    if (beta) usage_checked([&] { return BetaWeight(*beta); });
    return beta;
}

// ---------------------------------------------------------------------------

struct EvalArgs {
    std::string scores;
    double threshold = 0.5;
    std::string metrics = kDefaultMetrics;
    std::optional<double> beta;
    bool json = false;
    std::string out;
};

int run_eval(Context& ctx, const EvalArgs& a) {
    if (!std::isfinite(a.threshold)) throw UsageError("--threshold must be finite");
    const auto beta = checked_beta(a.beta);
    const auto ids = metrics_with_beta(usage_checked([&] { return parse_metric_list(a.metrics); }), beta.has_value());

    const auto records = read_scores_csv(a.scores);
    auto doc = build_report(from_scored(records, a.threshold), ids, beta);
    doc.input_path = a.scores;
    doc.threshold = a.threshold;
    emit_report(ctx, doc, a.json, a.out);
    return kOk;
}

struct MatrixArgs {
    std::string tp, fp, fn, tn;
    std::string metrics;
    std::optional<double> beta;
    bool json = false;
    std::string out;
};

int run_matrix(Context& ctx, const MatrixArgs& a) {
    const auto beta = checked_beta(a.beta);
    const auto m = usage_checked([&] {
        return from_counts(parse_count("tp", a.tp), parse_count("fp", a.fp), parse_count("fn", a.fn),
                           parse_count("tn", a.tn));
    });
    auto ids = a.metrics.empty() ? unweighted_metrics()
                                 : usage_checked([&] { return parse_metric_list(a.metrics); });
    ids = metrics_with_beta(std::move(ids), beta.has_value());
    emit_report(ctx, build_report(m, ids, beta), a.json, a.out);
    return kOk;
}

struct SweepArgs {
    std::vector<std::string> inputs;
    std::string grid = kDefaultGrid;
    std::string metrics = kDefaultMetrics;
    std::optional<double> beta;
    std::string csv;
    std::string svg;
    std::string crossings;
};

std::vector<std::string> series_names(const std::vector<std::string>& inputs) {
    std::vector<std::string> names;
    std::map<std::string, int> seen;
    for (const auto& in : inputs) {
        std::string stem = std::filesystem::path(in).stem().string();
        std::replace_if(stem.begin(), stem.end(), [](char c) { return c == ',' || c == '\r' || c == '\n'; }, '_');
        if (stem.empty()) stem = "series";
        const int count = ++seen[stem];
        names.push_back(count == 1 ? stem : stem + "#" + std::to_string(count));
    }
    return names;
}

int run_sweep(Context& ctx, const SweepArgs& a) {
    const auto grid = usage_checked([&] { return ThresholdGrid::parse(a.grid); });
    const auto beta = checked_beta(a.beta);
    const auto ids = usage_checked([&] { return parse_metric_list(a.metrics); });
    if (ids.empty()) throw UsageError("--metrics: at least one metric is required");
    const BetaWeight w(beta.value_or(1.0));

    const auto names = series_names(a.inputs);
    std::vector<NamedCurves> series;
    for (std::size_t i = 0; i < a.inputs.size(); ++i) {
        const auto records = read_scores_csv(a.inputs[i]);
        series.push_back({names[i], sweep(records, grid, ids, w)});
    }

    if (series.size() == 1) {
        write_curves_csv(series.front().curves, a.csv);
    } else {
        write_curves_csv(series, a.csv);
    }
    if (!a.svg.empty()) render_sweep_svg(series, a.svg);

    if (series.size() >= 2) {
        std::vector<CrossingEntry> entries;
        for (std::size_t i = 0; i < series.size(); ++i) {
            for (std::size_t j = i + 1; j < series.size(); ++j) {
                for (std::size_t k = 0; k < ids.size(); ++k) {
                    entries.push_back({series[i].name, series[j].name, std::string(metric_name(ids[k])),
                                       find_crossings(series[i].curves[k], series[j].curves[k])});
                }
            }
        }
        const std::string report = crossing_report_json(grid, entries);
        if (a.crossings.empty()) {
            ctx.out << report;
        } else {
            write_text_file(a.crossings, report);
        }
    }
    ctx.err << "swept " << series.size() << " input(s) over " << grid.points().size() << " thresholds\n";
    return kOk;
}

struct TransformArgs {
    std::optional<double> f;
    std::optional<double> fstar;
};

int run_transform(Context& ctx, const TransformArgs& a) {
    const double result = usage_checked([&] {
        return a.f ? transform_f_to_fstar(*a.f) : transform_fstar_to_f(*a.fstar);
    });
    ctx.out << format_shortest(result) << "\n";
    return kOk;
}

struct SynthArgs {
    GeneratorSpec spec;
    std::string out;
};

int run_synth(Context& ctx, const SynthArgs& a) {
    usage_checked([&] { validate(a.spec); });
    const auto records = generate_scores(a.spec);
    if (a.out.empty()) {
        ctx.out << scores_csv(records);
    } else {
        write_scores_csv(records, a.out);
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Options& options) {
    Context ctx{out, err, options};

    CLI::App app{"Binary-classification metrics: F, F' and F* = F/(2-F), threshold sweeps and reports."};
    app.name(kToolName);
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1, 1);

    EvalArgs eval;
    auto* eval_cmd = app.add_subcommand("eval", "Threshold a scores file and print the metric panel");
    eval_cmd->add_option("scores", eval.scores, "Scores CSV with header score,label")->required();
    eval_cmd->add_option("-t,--threshold", eval.threshold, "Predict class 1 when score > t")->capture_default_str();
    eval_cmd->add_option("-m,--metrics", eval.metrics, "Comma-separated metrics: " + valid_metric_names())
        ->capture_default_str();
    eval_cmd->add_option("--beta", eval.beta, "Add the beta-weighted F, F' and F* to the panel");
    eval_cmd->add_flag("--json", eval.json, "Emit the JSON report instead of a table");
    eval_cmd->add_option("-o,--out", eval.out, "Write the report to a file");

    MatrixArgs matrix;
    auto* matrix_cmd = app.add_subcommand("matrix", "Metric panel from raw confusion-matrix counts");
    matrix_cmd->add_option("--tp", matrix.tp, "True positives")->required();
    matrix_cmd->add_option("--fp", matrix.fp, "False positives")->required();
    matrix_cmd->add_option("--fn", matrix.fn, "False negatives")->required();
    matrix_cmd->add_option("--tn", matrix.tn, "True negatives")->required();
    matrix_cmd->add_option("-m,--metrics", matrix.metrics, "Comma-separated metrics (default: all unweighted)");
    matrix_cmd->add_option("--beta", matrix.beta, "Add the beta-weighted F, F' and F* to the panel");
    matrix_cmd->add_flag("--json", matrix.json, "Emit the JSON report instead of a table");
    matrix_cmd->add_option("-o,--out", matrix.out, "Write the report to a file");

    SweepArgs sweep_args;
    auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate metrics along a threshold grid");
    sweep_cmd->add_option("inputs", sweep_args.inputs, "One or more scores CSV files")->required();
    sweep_cmd->add_option("-g,--grid", sweep_args.grid, "Threshold grid start:stop:step")->capture_default_str();
    sweep_cmd->add_option("-m,--metrics", sweep_args.metrics, "Comma-separated metrics")->capture_default_str();
    sweep_cmd->add_option("--beta", sweep_args.beta, "Weight for f_beta, f_prime_beta, f_star_beta");
    sweep_cmd->add_option("--csv", sweep_args.csv, "Curves CSV output")->required();
    sweep_cmd->add_option("--svg", sweep_args.svg, "SVG panels output");
    sweep_cmd->add_option("--crossings", sweep_args.crossings,
                          "Crossing report JSON output (default: stdout; needs two or more inputs)");

    TransformArgs transform;
    auto* transform_cmd = app.add_subcommand("transform", "Convert between F and F*");
    auto* f_opt = transform_cmd->add_option("--f", transform.f, "F value in [0,1]; prints F/(2-F)");
    auto* s_opt = transform_cmd->add_option("--fstar", transform.fstar, "F* value in [0,1]; prints 2F*/(1+F*)");
    f_opt->excludes(s_opt);
    transform_cmd->require_option(1);

    SynthArgs synth;
    auto* synth_cmd = app.add_subcommand("synth", "Write a seeded synthetic scores CSV (Beta-distributed scores)");
    synth.spec.n0 = 100;
    synth.spec.n1 = 100;
    synth_cmd->add_option("--n0", synth.spec.n0, "Class-0 records")->capture_default_str();
    synth_cmd->add_option("--n1", synth.spec.n1, "Class-1 records")->capture_default_str();
    synth_cmd->add_option("--alpha0", synth.spec.dist0.alpha, "Class-0 Beta alpha")->capture_default_str();
    synth_cmd->add_option("--beta0", synth.spec.dist0.beta, "Class-0 Beta beta")->capture_default_str();
    synth_cmd->add_option("--alpha1", synth.spec.dist1.alpha, "Class-1 Beta alpha")->capture_default_str();
    synth_cmd->add_option("--beta1", synth.spec.dist1.beta, "Class-1 Beta beta")->capture_default_str();
    synth_cmd->add_option("--seed", synth.spec.seed, "Generator seed")->capture_default_str();
    synth_cmd->add_option("-o,--out", synth.out, "Output path (default: stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    try {
        if (*eval_cmd) return run_eval(ctx, eval);
        if (*matrix_cmd) return run_matrix(ctx, matrix);
        if (*sweep_cmd) return run_sweep(ctx, sweep_args);
        if (*transform_cmd) return run_transform(ctx, transform);
        if (*synth_cmd) return run_synth(ctx, synth);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kRuntimeError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kRuntimeError;
    }
    return kUsageError;
}

}  // namespace fstar::cli
