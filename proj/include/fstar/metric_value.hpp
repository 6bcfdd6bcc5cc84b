#pragma once

#include <string>
#include <utility>

namespace fstar {

/// Result of evaluating a metric: a finite real, positive infinity (only F'
/// and its weighted form produce this), or undefined with a short
/// machine-readable reason such as "empty denominator: precision".
class MetricValue {
public:
    enum class State { Defined, PositiveInfinite, Undefined };

    // Throws ValidationError if v is not finite.
    static MetricValue defined(double v);
    static MetricValue positive_infinite() { return MetricValue(State::PositiveInfinite, 0.0, {}); }
    static MetricValue undefined(std::string reason) {
        return MetricValue(State::Undefined, 0.0, std::move(reason));
    }

    State state() const noexcept { return state_; }
    bool is_defined() const noexcept { return state_ == State::Defined; }
    bool is_infinite() const noexcept { return state_ == State::PositiveInfinite; }
    bool is_undefined() const noexcept { return state_ == State::Undefined; }

    // Defined value; throws std::logic_error in any other state.
    double value() const;
    double value_or(double fallback) const noexcept { return is_defined() ? value_ : fallback; }
    const std::string& reason() const noexcept { return reason_; }

    friend bool operator==(const MetricValue&, const MetricValue&) = default;

private:
    MetricValue(State s, double v, std::string reason) : state_(s), value_(v), reason_(std::move(reason)) {}

    State state_;
    double value_;
    std::string reason_;
};

}  // namespace fstar
