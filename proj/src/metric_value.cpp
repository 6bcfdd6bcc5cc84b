#include "fstar/metric_value.hpp"

#include <cmath>
#include <stdexcept>

#include "fstar/error.hpp"

namespace fstar {

MetricValue MetricValue::defined(double v) {
    if (!std::isfinite(v)) throw ValidationError("value", "defined metric value must be finite");
    return MetricValue(State::Defined, v, {});
}

double MetricValue::value() const {
    if (state_ != State::Defined) {
        throw std::logic_error(state_ == State::PositiveInfinite ? "metric value is infinite"
                                                                 : "metric value is undefined: " + reason_);
    }
    return value_;
}

}  // namespace fstar
