#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fstar/confusion.hpp"
#include "fstar/metric_value.hpp"

namespace fstar {

// Strictly positive weight; recall counts beta times as much as precision.
class BetaWeight {
public:
    // Throws ValidationError unless beta is finite and > 0.
    explicit BetaWeight(double beta);

    double beta() const noexcept { return beta_; }
    double squared() const noexcept { return beta_ * beta_; }

private:
    double beta_;
};

struct ProportionPanel {
    MetricValue precision;
    MetricValue recall;
    MetricValue specificity;
    MetricValue npv;
};

ProportionPanel proportions(const ConfusionMatrix& m);
MetricValue precision(const ConfusionMatrix& m);
MetricValue recall(const ConfusionMatrix& m);
MetricValue specificity(const ConfusionMatrix& m);
MetricValue negative_predictive_value(const ConfusionMatrix& m);

// 2tp / (2tp + fn + fp), the harmonic mean of precision and recall.
MetricValue f_measure(const ConfusionMatrix& m);

// (1+b^2) p r / (b^2 p + r) on precision and recall given as reals.
MetricValue f_beta(double precision, double recall, BetaWeight w);
// Count form (1+b^2) tp / ((1+b^2) tp + b^2 fn + fp).
MetricValue f_beta(const ConfusionMatrix& m, BetaWeight w);

// tp / (fn + fp): correctly classified class-1 objects per misclassified
// object. Equal to F / (2(1 - F)). Unbounded above.
MetricValue f_prime(const ConfusionMatrix& m);

// tp / (tp + fn + fp) = F / (2 - F), the Jaccard coefficient of the
// predicted-positive and actual-positive sets.
MetricValue f_star(const ConfusionMatrix& m);

MetricValue f_star_beta(const ConfusionMatrix& m, BetaWeight w);
MetricValue f_prime_beta(const ConfusionMatrix& m, BetaWeight w);

// f in [0,1] -> f / (2 - f). Throws ValidationError outside [0,1].
double transform_f_to_fstar(double f);
// s in [0,1] -> 2s / (1 + s), the inverse of the above.
double transform_fstar_to_f(double s);

MetricValue misclassification_rate(const ConfusionMatrix& m);

// Standard definitions; the F-measure literature names these measures but
// they are computed with the textbook formulas.
MetricValue cohen_kappa(const ConfusionMatrix& m);
MetricValue youden_index(const ConfusionMatrix& m);
MetricValue matthews_coefficient(const ConfusionMatrix& m);

// ---------------------------------------------------------------------------
// Named metrics, shared by sweeps, reports and the CLI.

enum class MetricId {
    Precision,
    Recall,
    Specificity,
    Npv,
    F,
    FPrime,
    FStar,
    FBeta,
    FPrimeBeta,
    FStarBeta,
    MisclassificationRate,
    Kappa,
    Youden,
    Mcc,
};

std::string_view metric_name(MetricId id) noexcept;

// Every metric in canonical order.
std::span<const MetricId> all_metrics() noexcept;
// Every metric except the beta-weighted ones.
std::vector<MetricId> unweighted_metrics();

// Throws ValidationError listing the valid names.
MetricId parse_metric(std::string_view name);
// Comma-separated list; empty entries are rejected.
std::vector<MetricId> parse_metric_list(std::string_view list);
std::string valid_metric_names();

bool is_weighted(MetricId id) noexcept;

MetricValue evaluate(MetricId id, const ConfusionMatrix& m, BetaWeight w = BetaWeight(1.0));

}  // namespace fstar
