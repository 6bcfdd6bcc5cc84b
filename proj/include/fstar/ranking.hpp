#pragma once

#include <span>

#include "fstar/confusion.hpp"
#include "fstar/metric_value.hpp"

namespace fstar {

/// Probability that a random class-0 score is below a random class-1 score,
/// ties credited one half. Midrank (Mann-Whitney) computation, O(n log n).
/// Undefined("one class absent") when either class is empty.
MetricValue auc(std::span<const ScoredRecord> records);

}  // namespace fstar
