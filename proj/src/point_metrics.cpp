#include "fstar/point_metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "fstar/error.hpp"
#include "fstar/io_report.hpp"

namespace fstar {

namespace {

double d(Count c) { return static_cast<double>(c); }

MetricValue ratio(Count num, Count den, const char* name) {
    if (den == 0) return MetricValue::undefined(std::string("empty denominator: ") + name);
    return MetricValue::defined(d(num) / d(den));
}

bool no_relevant(const ConfusionMatrix& m) { return m.tp() == 0 && m.fn() == 0 && m.fp() == 0; }

double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

void require_unit_interval(const char* field, double v) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw ValidationError(field, "must lie in [0, 1], got " + format_shortest(v));
    }
}

}  // namespace

BetaWeight::BetaWeight(double beta) : beta_(beta) {
    if (!std::isfinite(beta) || beta <= 0.0) {
        throw ValidationError("beta", "must be a finite positive number");
    }
}

MetricValue precision(const ConfusionMatrix& m) { return ratio(m.tp(), m.tp() + m.fp(), "precision"); }
MetricValue recall(const ConfusionMatrix& m) { return ratio(m.tp(), m.tp() + m.fn(), "recall"); }
MetricValue specificity(const ConfusionMatrix& m) { return ratio(m.tn(), m.tn() + m.fp(), "specificity"); }
MetricValue negative_predictive_value(const ConfusionMatrix& m) {
    return ratio(m.tn(), m.tn() + m.fn(), "npv");
}

ProportionPanel proportions(const ConfusionMatrix& m) {
    return {precision(m), recall(m), specificity(m), negative_predictive_value(m)};
}

// The count forms below share one evaluation order so that the beta-weighted
// variants at beta = 1 reproduce the unweighted ones bit for bit.

MetricValue f_measure(const ConfusionMatrix& m) {
    if (no_relevant(m)) return MetricValue::undefined("no relevant objects");
    const double num = 2.0 * d(m.tp());
    return MetricValue::defined(num / (num + d(m.fn()) + d(m.fp())));
}

MetricValue f_beta(double p, double r, BetaWeight w) {
    require_unit_interval("precision", p);
    require_unit_interval("recall", r);
    const double b2 = w.squared();
    const double den = b2 * p + r;
    if (den == 0.0) return MetricValue::undefined("precision and recall both zero");
    return MetricValue::defined((1.0 + b2) * p * r / den);
}

MetricValue f_beta(const ConfusionMatrix& m, BetaWeight w) {
    if (no_relevant(m)) return MetricValue::undefined("no relevant objects");
    const double b2 = w.squared();
    const double num = (1.0 + b2) * d(m.tp());
    return MetricValue::defined(num / (num + b2 * d(m.fn()) + d(m.fp())));
}

MetricValue f_prime(const ConfusionMatrix& m) {
    if (no_relevant(m)) return MetricValue::undefined("no relevant objects");
    const double errors = d(m.fn()) + d(m.fp());
    if (errors == 0.0) return MetricValue::positive_infinite();
    return MetricValue::defined(d(m.tp()) / errors);
}

MetricValue f_star(const ConfusionMatrix& m) {
    if (no_relevant(m)) return MetricValue::undefined("no relevant classifications");
    return MetricValue::defined(d(m.tp()) / (d(m.tp()) + d(m.fn()) + d(m.fp())));
}

// F*_b = F_b / (2 - F_b) = (1+b2) tp / ((1+b2) tp + 2 b2 fn + 2 fp)
MetricValue f_star_beta(const ConfusionMatrix& m, BetaWeight w) {
    if (no_relevant(m)) return MetricValue::undefined("no relevant classifications");
    const double b2 = w.squared();
    const double num = (1.0 + b2) * d(m.tp());
    return MetricValue::defined(num / (num + 2.0 * b2 * d(m.fn()) + 2.0 * d(m.fp())));
}

// F'_b = F_b / (2 (1 - F_b)) = (1+b2) tp / (2 (b2 fn + fp))
MetricValue f_prime_beta(const ConfusionMatrix& m, BetaWeight w) {
    if (no_relevant(m)) return MetricValue::undefined("no relevant objects");
    const double b2 = w.squared();
    const double errors = b2 * d(m.fn()) + d(m.fp());
    if (errors == 0.0) return MetricValue::positive_infinite();
    return MetricValue::defined((1.0 + b2) * d(m.tp()) / (2.0 * errors));
}

double transform_f_to_fstar(double f) {
    require_unit_interval("f", f);
    return f / (2.0 - f);
}

double transform_fstar_to_f(double s) {
    require_unit_interval("fstar", s);
    return (2.0 * s) / (1.0 + s);
}

MetricValue misclassification_rate(const ConfusionMatrix& m) {
    return ratio(m.fn() + m.fp(), m.n(), "misclassification_rate");
}

// kappa = (p_o - p_e) / (1 - p_e) with p_e from the marginal products,
// rearranged to 2 (tp tn - fn fp) / ((tp+fp)(fp+tn) + (tp+fn)(fn+tn)).
MetricValue cohen_kappa(const ConfusionMatrix& m) {
    if (m.n() == 0) return MetricValue::undefined("empty matrix");
    const double tp = d(m.tp()), fp = d(m.fp()), fn = d(m.fn()), tn = d(m.tn());
    const double den = (tp + fp) * (fp + tn) + (tp + fn) * (fn + tn);
    if (den == 0.0) return MetricValue::undefined("chance agreement is 1");
    return MetricValue::defined(clamp_unit(2.0 * (tp * tn - fn * fp) / den));
}

MetricValue youden_index(const ConfusionMatrix& m) {
    const MetricValue sens = recall(m);
    if (!sens.is_defined()) return sens;
    const MetricValue spec = specificity(m);
    if (!spec.is_defined()) return spec;
    return MetricValue::defined(sens.value() + spec.value() - 1.0);
}

MetricValue matthews_coefficient(const ConfusionMatrix& m) {
    const double tp = d(m.tp()), fp = d(m.fp()), fn = d(m.fn()), tn = d(m.tn());
    const double marginals = (tp + fp) * (tp + fn) * (tn + fp) * (tn + fn);
    if (marginals == 0.0) return MetricValue::undefined("empty marginal");
    return MetricValue::defined(clamp_unit((tp * tn - fp * fn) / std::sqrt(marginals)));
}

// ---------------------------------------------------------------------------

namespace {

struct MetricEntry {
    MetricId id;
    std::string_view name;
};

constexpr std::array<MetricEntry, 14> kMetrics{{
    {MetricId::Precision, "precision"},
    {MetricId::Recall, "recall"},
    {MetricId::Specificity, "specificity"},
    {MetricId::Npv, "npv"},
    {MetricId::F, "f"},
    {MetricId::FPrime, "f_prime"},
    {MetricId::FStar, "f_star"},
    {MetricId::FBeta, "f_beta"},
    {MetricId::FPrimeBeta, "f_prime_beta"},
    {MetricId::FStarBeta, "f_star_beta"},
    {MetricId::MisclassificationRate, "misclassification_rate"},
    {MetricId::Kappa, "kappa"},
    {MetricId::Youden, "youden"},
    {MetricId::Mcc, "mcc"},
}};

constexpr std::array<MetricId, 14> kIds = [] {
    std::array<MetricId, 14> ids{};
    for (std::size_t i = 0; i < kMetrics.size(); ++i) ids[i] = kMetrics[i].id;
    return ids;
}();

}  // namespace

std::string_view metric_name(MetricId id) noexcept {
    for (const auto& e : kMetrics) {
        if (e.id == id) return e.name;
    }
    return "unknown";
}

std::span<const MetricId> all_metrics() noexcept { return kIds; }

std::vector<MetricId> unweighted_metrics() {
    std::vector<MetricId> out;
    for (auto id : kIds) {
        if (!is_weighted(id)) out.push_back(id);
    }
    return out;
}

bool is_weighted(MetricId id) noexcept {
    return id == MetricId::FBeta || id == MetricId::FPrimeBeta || id == MetricId::FStarBeta;
}

std::string valid_metric_names() {
    std::string out;
    for (const auto& e : kMetrics) {
        if (!out.empty()) out += ", ";
        out += e.name;
    }
    return out;
}

MetricId parse_metric(std::string_view name) {
    for (const auto& e : kMetrics) {
        if (e.name == name) return e.id;
    }
    throw ValidationError("metric", "unknown metric \"" + std::string(name) + "\"; valid names: " +
                                        valid_metric_names());
}

std::vector<MetricId> parse_metric_list(std::string_view list) {
    std::vector<MetricId> out;
    if (list.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = list.find(',', pos);
        const auto item = list.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (item.empty()) throw ValidationError("metric", "empty entry in metric list");
        out.push_back(parse_metric(item));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

MetricValue evaluate(MetricId id, const ConfusionMatrix& m, BetaWeight w) {
    switch (id) {
        case MetricId::Precision: return precision(m);
        case MetricId::Recall: return recall(m);
        case MetricId::Specificity: return specificity(m);
        case MetricId::Npv: return negative_predictive_value(m);
        case MetricId::F: return f_measure(m);
        case MetricId::FPrime: return f_prime(m);
        case MetricId::FStar: return f_star(m);
        case MetricId::FBeta: return f_beta(m, w);
        case MetricId::FPrimeBeta: return f_prime_beta(m, w);
        case MetricId::FStarBeta: return f_star_beta(m, w);
        case MetricId::MisclassificationRate: return misclassification_rate(m);
        case MetricId::Kappa: return cohen_kappa(m);
        case MetricId::Youden: return youden_index(m);
        case MetricId::Mcc: return matthews_coefficient(m);
    }
    throw ValidationError("metric", "unknown metric id");
}

}  // namespace fstar
