#pragma once

#include "grl/interval.hpp"
#include "grl/rational.hpp"

#include <utility>
#include <vector>

namespace grl {

/// Finitely-representable non-negative function on [0, inf): a value at 0,
/// constant values on the open intervals between strictly increasing
/// breakpoints, a value at each breakpoint, and a constant tail. Survival
/// functions mu({f >= alpha} ∩ A) are encoded this way, with the breakpoint
/// value equal to the value on the interval to its left (left continuity for
/// alpha > 0; the value at 0 may still jump, since {f >= 0} is everything).
class StepFunction {
public:
    /// The zero function.
    StepFunction() : value_at_0_(0), tail_value_(0) {}

    StepFunction(std::vector<Rational> breakpoints, Rational value_at_0,
                 std::vector<Rational> point_values, std::vector<Rational> interval_values,
                 Rational tail_value);

    static StepFunction zero() { return StepFunction(); }
    /// Constant c everywhere.
    static StepFunction constant(Rational c);
    /// c on [0, end] (value at `end` included), 0 after.
    static StepFunction plateau(Rational c, const Rational& end);

    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const Rational& value_at_0() const { return value_at_0_; }
    const std::vector<Rational>& point_values() const { return point_values_; }
    const std::vector<Rational>& interval_values() const { return interval_values_; }
    const Rational& tail_value() const { return tail_value_; }

    Rational operator()(const Rational& alpha) const;

    /// Maximal pieces of constancy: {0}, (0,b1), {b1}, ..., {bm}, (bm,inf).
    std::vector<std::pair<Interval, Rational>> pieces() const;

    /// [min, max] of the values attained on a set.
    std::pair<Rational, Rational> range_on(const Interval& cell) const;

    Rational sup() const;
    /// Last breakpoint (0 if none); u equals its tail value beyond this.
    Rational support_end() const;
    bool vanishes_at_tail() const { return tail_value_ == 0; }
    /// True when some open interval (or the tail) carries a positive value.
    bool positive_on_an_interval() const;

    StepFunction plus(const StepFunction& other) const;
    StepFunction scaled(const Rational& k) const;
    bool pointwise_leq(const StepFunction& other) const;

    bool operator==(const StepFunction& o) const = default;

private:
    void canonicalize();

    std::vector<Rational> breakpoints_;      // strictly increasing, all > 0
    Rational value_at_0_;
    std::vector<Rational> point_values_;     // at each breakpoint
    std::vector<Rational> interval_values_;  // on (b_{i-1}, b_i), b_0 = 0
    Rational tail_value_;                    // on (b_m, inf)
};

}  // namespace grl
