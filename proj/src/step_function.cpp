#include "grl/step_function.hpp"

#include <algorithm>

namespace grl {

StepFunction::StepFunction(std::vector<Rational> breakpoints, Rational value_at_0,
                           std::vector<Rational> point_values, std::vector<Rational> interval_values,
                           Rational tail_value)
    : breakpoints_(std::move(breakpoints)),
      value_at_0_(std::move(value_at_0)),
      point_values_(std::move(point_values)),
      interval_values_(std::move(interval_values)),
      tail_value_(std::move(tail_value)) {
    const std::size_t m = breakpoints_.size();
    if (point_values_.size() != m || interval_values_.size() != m)
        throw DomainError("step function: value lists must match the breakpoint count");
    for (std::size_t i = 0; i < m; ++i) {
        if (breakpoints_[i] <= 0) throw DomainError("step function: breakpoints must be positive");
        if (i + 1 < m && breakpoints_[i] >= breakpoints_[i + 1])
            throw DomainError("step function: breakpoints must be strictly increasing");
    }
    auto nonneg = [](const Rational& v) {
        if (v < 0) throw DomainError("step function: values must be non-negative");
    };
    nonneg(value_at_0_);
    nonneg(tail_value_);
    for (const auto& v : point_values_) nonneg(v);
    for (const auto& v : interval_values_) nonneg(v);
    canonicalize();
}

StepFunction StepFunction::constant(Rational c) {
    StepFunction u;
    u.value_at_0_ = c;
    u.tail_value_ = std::move(c);
    return u;
}

StepFunction StepFunction::plateau(Rational c, const Rational& end) {
    if (end == 0) {
        StepFunction u;
        u.value_at_0_ = std::move(c);
        return u;
    }
    return StepFunction({end}, c, {c}, {c}, Rational(0));
}

void StepFunction::canonicalize() {
    // a breakpoint is invisible when its point value matches the values on
    // both sides
    std::vector<Rational> bks, pts, ivs;
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        const Rational& lv = interval_values_[i];
        const Rational& rv = (i + 1 < breakpoints_.size()) ? interval_values_[i + 1] : tail_value_;
        if (point_values_[i] == lv && lv == rv) continue;  // drop; neighbouring intervals merge
        bks.push_back(breakpoints_[i]);
        pts.push_back(point_values_[i]);
        ivs.push_back(lv);
    }
    breakpoints_ = std::move(bks);
    point_values_ = std::move(pts);
    interval_values_ = std::move(ivs);
}

Rational StepFunction::operator()(const Rational& alpha) const {
    if (alpha < 0) throw DomainError("step function evaluated below 0");
    if (alpha == 0) return value_at_0_;
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        if (alpha < breakpoints_[i]) return interval_values_[i];
        if (alpha == breakpoints_[i]) return point_values_[i];
    }
    return tail_value_;
}

std::vector<std::pair<Interval, Rational>> StepFunction::pieces() const {
    std::vector<std::pair<Interval, Rational>> out;
    out.emplace_back(Interval::point(Rational(0)), value_at_0_);
    Rational prev(0);
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        out.emplace_back(Interval::open(prev, breakpoints_[i]), interval_values_[i]);
        out.emplace_back(Interval::point(breakpoints_[i]), point_values_[i]);
        prev = breakpoints_[i];
    }
    out.emplace_back(Interval::tail(prev, true), tail_value_);
    return out;
}

std::pair<Rational, Rational> StepFunction::range_on(const Interval& cell) const {
    bool first = true;
    Rational lo(0), hi(0);
    for (const auto& [piece, value] : pieces()) {
        if (!piece.intersect(cell)) continue;
        if (first) {
            lo = hi = value;
            first = false;
        } else {
            lo = std::min(lo, value);
            hi = std::max(hi, value);
        }
    }
    if (first) throw DomainError("range_on: empty cell");
    return {lo, hi};
}

Rational StepFunction::sup() const {
    Rational s = std::max(value_at_0_, tail_value_);
    for (const auto& v : point_values_) s = std::max(s, v);
    for (const auto& v : interval_values_) s = std::max(s, v);
    return s;
}

Rational StepFunction::support_end() const {
    return breakpoints_.empty() ? Rational(0) : breakpoints_.back();
}

bool StepFunction::positive_on_an_interval() const {
    if (tail_value_ > 0) return true;
    for (const auto& v : interval_values_)
        if (v > 0) return true;
    return false;
}

namespace {

std::vector<Rational> merged_breakpoints(const StepFunction& a, const StepFunction& b) {
    std::vector<Rational> bks = a.breakpoints();
    bks.insert(bks.end(), b.breakpoints().begin(), b.breakpoints().end());
    std::sort(bks.begin(), bks.end());
    bks.erase(std::unique(bks.begin(), bks.end()), bks.end());
    return bks;
}

}  // namespace

StepFunction StepFunction::plus(const StepFunction& other) const {
    auto bks = merged_breakpoints(*this, other);
    std::vector<Rational> pts, ivs;
    Rational prev(0);
    for (const auto& b : bks) {
        Rational mid = (prev + b) / 2;
        ivs.push_back((*this)(mid) + other(mid));
        pts.push_back((*this)(b) + other(b));
        prev = b;
    }
    return StepFunction(std::move(bks), value_at_0_ + other.value_at_0_, std::move(pts),
                        std::move(ivs), tail_value_ + other.tail_value_);
}

StepFunction StepFunction::scaled(const Rational& k) const {
    if (k < 0) throw DomainError("step function scale must be non-negative");
    std::vector<Rational> pts = point_values_, ivs = interval_values_;
    for (auto& v : pts) v *= k;
    for (auto& v : ivs) v *= k;
    return StepFunction(breakpoints_, value_at_0_ * k, std::move(pts), std::move(ivs),
                        tail_value_ * k);
}

bool StepFunction::pointwise_leq(const StepFunction& other) const {
    if (value_at_0_ > other.value_at_0_) return false;
    if (tail_value_ > other.tail_value_) return false;
    auto bks = merged_breakpoints(*this, other);
    Rational prev(0);
    for (const auto& b : bks) {
        Rational mid = (prev + b) / 2;
        if ((*this)(mid) > other(mid)) return false;
        if ((*this)(b) > other(b)) return false;
        prev = b;
    }
    return true;
}

}  // namespace grl
