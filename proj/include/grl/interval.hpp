#pragma once

#include "grl/rational.hpp"

#include <optional>
#include <string>

namespace grl {

/// Nonempty subinterval of [0, inf): a point {b}, a bounded interval with
/// open/closed ends, or an unbounded right tail. Partition cells and the
/// measurable sets handed to the level-axis set functions are all of this
/// shape.
struct Interval {
    Rational lo;
    Rational hi;          // ignored when unbounded
    bool lo_open = false;
    bool hi_open = false;
    bool unbounded = false;

    static Interval point(const Rational& b) {
        Interval c;
        c.lo = b;
        c.hi = b;
        return c;
    }
    static Interval closed(Rational a, Rational b) { return make(std::move(a), std::move(b), false, false); }
    static Interval open(Rational a, Rational b) { return make(std::move(a), std::move(b), true, true); }
    static Interval make(Rational a, Rational b, bool ao, bool bo) {
        Interval c;
        c.lo = std::move(a);
        c.hi = std::move(b);
        c.lo_open = ao;
        c.hi_open = bo;
        c.validate();
        return c;
    }
    static Interval tail(Rational a, bool ao) {
        Interval c;
        c.lo = std::move(a);
        c.lo_open = ao;
        c.unbounded = true;
        c.validate();
        return c;
    }

    void validate() const {
        if (lo < 0) throw DomainError("interval below 0");
        if (!unbounded) {
            if (hi < lo) throw DomainError("interval with hi < lo");
            if (hi == lo && (lo_open || hi_open)) throw DomainError("empty interval");
        }
    }

    bool is_point() const { return !unbounded && lo == hi; }

    bool contains(const Rational& x) const {
        if (x < lo || (x == lo && lo_open)) return false;
        if (unbounded) return true;
        if (x > hi || (x == hi && hi_open)) return false;
        return true;
    }

    /// Set containment (this ⊆ other).
    bool subset_of(const Interval& other) const {
        // lower end: other must start at or before ours
        if (lo < other.lo) return false;
        if (lo == other.lo && other.lo_open && !lo_open) return false;
        if (other.unbounded) return true;
        if (unbounded) return false;
        if (hi > other.hi) return false;
        if (hi == other.hi && other.hi_open && !hi_open) return false;
        return true;
    }

    std::optional<Interval> intersect(const Interval& other) const {
        Interval r;
        // max of lower ends
        if (lo > other.lo || (lo == other.lo && lo_open)) {
            r.lo = lo;
            r.lo_open = lo_open;
        } else {
            r.lo = other.lo;
            r.lo_open = other.lo_open;
        }
        // min of upper ends
        if (unbounded && other.unbounded) {
            r.unbounded = true;
        } else if (unbounded) {
            r.hi = other.hi;
            r.hi_open = other.hi_open;
        } else if (other.unbounded) {
            r.hi = hi;
            r.hi_open = hi_open;
        } else if (hi < other.hi || (hi == other.hi && hi_open)) {
            r.hi = hi;
            r.hi_open = hi_open;
        } else {
            r.hi = other.hi;
            r.hi_open = other.hi_open;
        }
        // emptiness
        if (!r.unbounded) {
            if (r.hi < r.lo) return std::nullopt;
            if (r.hi == r.lo && (r.lo_open || r.hi_open)) return std::nullopt;
        }
        return r;
    }

    /// Lebesgue length; +inf for tails.
    ExtValue length() const {
        if (unbounded) return ExtValue::infinity();
        return ExtValue::exact(hi - lo);
    }

    std::string str() const {
        std::string s = lo_open ? "(" : "[";
        s += to_string(lo);
        s += ",";
        if (unbounded) {
            s += "inf)";
        } else {
            s += to_string(hi);
            s += hi_open ? ")" : "]";
        }
        return s;
    }
};

}  // namespace grl
