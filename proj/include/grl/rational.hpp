#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace grl {

/// Exact arbitrary-precision rational. All finite-engine arithmetic runs on
/// this type; doubles appear only in numeric probes and reports. Expression
/// templates are off so values behave like ordinary regular types under
/// std::min/max and auto.
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;
using Integer = boost::multiprecision::cpp_int;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GenerationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Renders "p/q", or just "p" for integers.
inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/" + denominator(r).str();
    }
    return s;
}

/// Parses "p", "p/q" or "-p/q". Anything else (decimals included) is rejected.
inline Rational parse_rational(const std::string& text) {
    auto fail = [&]() -> ParseError {
        return ParseError("not a rational: '" + text + "' (expected \"p\" or \"p/q\")");
    };
    if (text.empty()) throw fail();
    std::size_t i = 0;
    if (text[i] == '-' || text[i] == '+') ++i;
    if (i == text.size()) throw fail();
    bool seen_slash = false;
    std::size_t digits_before = 0, digits_after = 0;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '/') {
            if (seen_slash) throw fail();
            seen_slash = true;
        } else if (c >= '0' && c <= '9') {
            (seen_slash ? digits_after : digits_before)++;
        } else {
            throw fail();
        }
    }
    if (digits_before == 0 || (seen_slash && digits_after == 0)) throw fail();
    try {
        return Rational(text);
    } catch (const std::exception& e) {
        throw ParseError("not a rational: '" + text + "': " + e.what());
    }
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Integer power, exact. Exponent may be negative for nonzero base.
inline Rational pow_int(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (base == 0) throw DomainError("pow_int: zero base with negative exponent");
        return Rational(1) / pow_int(base, -e);
    }
    Rational acc(1), b = base;
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

/// Extended scalar: an exact rational, +infinity, or a tracked-error double.
/// The convention 0 * inf = 0 is baked in; survival functions vanish past
/// their last breakpoint, so tail cells of infinite mass contribute nothing.
class ExtValue {
public:
    enum class Kind { Exact, PosInf, Approx };

    ExtValue() : kind_(Kind::Exact), exact_(0) {}

    static ExtValue exact(Rational r) {
        ExtValue v;
        v.kind_ = Kind::Exact;
        v.exact_ = std::move(r);
        return v;
    }
    static ExtValue infinity() {
        ExtValue v;
        v.kind_ = Kind::PosInf;
        return v;
    }
    static ExtValue approx(double value, double error_bound) {
        ExtValue v;
        v.kind_ = Kind::Approx;
        v.approx_ = value;
        v.error_ = error_bound;
        return v;
    }

    Kind kind() const { return kind_; }
    bool is_exact() const { return kind_ == Kind::Exact; }
    bool is_infinite() const { return kind_ == Kind::PosInf; }
    bool is_finite() const { return kind_ != Kind::PosInf; }

    const Rational& exact_value() const {
        if (kind_ != Kind::Exact) throw DomainError("ExtValue: not exact");
        return exact_;
    }
    double approx_value() const { return approx_; }
    double error_bound() const { return error_; }

    double to_double() const {
        switch (kind_) {
            case Kind::Exact: return grl::to_double(exact_);
            case Kind::PosInf: return std::numeric_limits<double>::infinity();
            case Kind::Approx: return approx_;
        }
        return 0;
    }

    ExtValue operator+(const ExtValue& o) const {
        if (is_infinite() || o.is_infinite()) return infinity();
        if (is_exact() && o.is_exact()) return exact(exact_ + o.exact_);
        double a = to_double(), b = o.to_double();
        return approx(a + b, err_of(*this) + err_of(o) + ulp(a + b));
    }
    ExtValue& operator+=(const ExtValue& o) { return *this = *this + o; }

    /// Scale by a non-negative rational; 0 * inf = 0.
    ExtValue scaled(const Rational& k) const {
        if (k < 0) throw DomainError("ExtValue: negative scale");
        if (k == 0) return exact(Rational(0));
        switch (kind_) {
            case Kind::Exact: return exact(exact_ * k);
            case Kind::PosInf: return infinity();
            case Kind::Approx: {
                double kd = grl::to_double(k);
                return approx(approx_ * kd, error_ * kd + ulp(approx_ * kd));
            }
        }
        return *this;
    }

    bool operator==(const ExtValue& o) const {
        if (kind_ != o.kind_) return false;
        switch (kind_) {
            case Kind::Exact: return exact_ == o.exact_;
            case Kind::PosInf: return true;
            case Kind::Approx: return approx_ == o.approx_ && error_ == o.error_;
        }
        return false;
    }

    std::string str() const {
        switch (kind_) {
            case Kind::Exact: return to_string(exact_);
            case Kind::PosInf: return "inf";
            case Kind::Approx: return std::to_string(approx_) + "±" + std::to_string(error_);
        }
        return {};
    }

private:
    static double err_of(const ExtValue& v) {
        return v.kind_ == Kind::Approx ? v.error_ : 0.0;
    }
    static double ulp(double x) { return std::abs(x) * 1e-15; }

    Kind kind_;
    Rational exact_;
    double approx_ = 0;
    double error_ = 0;
};

}  // namespace grl
