#include "grl/piecewise.hpp"

#include <algorithm>

namespace grl {

PiecewiseLinear::PiecewiseLinear(std::vector<Rational> breaks, Rational at0,
                                 std::vector<std::array<Rational, 2>> coeffs)
    : breaks_(std::move(breaks)), at0_(std::move(at0)), coeffs_(std::move(coeffs)) {
    if (breaks_.size() != coeffs_.size())
        throw DomainError("piecewise linear: one coefficient pair per piece");
    for (std::size_t i = 0; i < breaks_.size(); ++i) {
        if (breaks_[i] <= 0) throw DomainError("piecewise linear: breaks must be positive");
        if (i + 1 < breaks_.size() && breaks_[i] >= breaks_[i + 1])
            throw DomainError("piecewise linear: breaks must be strictly increasing");
    }
}

Rational PiecewiseLinear::operator()(const Rational& alpha) const {
    if (alpha < 0) throw DomainError("piecewise linear evaluated below 0");
    if (alpha == 0) return at0_;
    for (std::size_t i = 0; i < breaks_.size(); ++i)
        if (alpha <= breaks_[i]) return coeffs_[i][0] + coeffs_[i][1] * alpha;
    return Rational(0);
}

PiecewiseLinear PiecewiseLinear::plus(const PiecewiseLinear& other) const {
    std::vector<Rational> bks = breaks_;
    bks.insert(bks.end(), other.breaks_.begin(), other.breaks_.end());
    std::sort(bks.begin(), bks.end());
    bks.erase(std::unique(bks.begin(), bks.end()), bks.end());

    auto coeffs_at = [](const PiecewiseLinear& f, const Rational& inside) -> std::array<Rational, 2> {
        Rational prev(0);
        for (std::size_t i = 0; i < f.breaks_.size(); ++i) {
            if (inside > prev && inside <= f.breaks_[i]) return f.coeffs_[i];
            prev = f.breaks_[i];
        }
        return {Rational(0), Rational(0)};
    };
    std::vector<std::array<Rational, 2>> cs;
    Rational prev(0);
    for (const Rational& b : bks) {
        Rational mid = (prev + b) / 2;
        auto ca = coeffs_at(*this, mid);
        auto cb = coeffs_at(other, mid);
        cs.push_back({ca[0] + cb[0], ca[1] + cb[1]});
        prev = b;
    }
    return PiecewiseLinear(std::move(bks), at0_ + other.at0_, std::move(cs));
}

Rational PiecewiseLinear::sup() const {
    Rational s = at0_;
    Rational prev(0);
    for (std::size_t i = 0; i < breaks_.size(); ++i) {
        s = std::max(s, coeffs_[i][0] + coeffs_[i][1] * prev);
        s = std::max(s, coeffs_[i][0] + coeffs_[i][1] * breaks_[i]);
        prev = breaks_[i];
    }
    return s;
}

bool PiecewiseLinear::is_zero() const {
    if (at0_ != 0) return false;
    Rational prev(0);
    for (std::size_t i = 0; i < breaks_.size(); ++i) {
        if (coeffs_[i][0] + coeffs_[i][1] * prev != 0) return false;
        if (coeffs_[i][0] + coeffs_[i][1] * breaks_[i] != 0) return false;
        prev = breaks_[i];
    }
    return true;
}

bool PiecewiseLinear::positive_on_an_interval() const {
    Rational prev(0);
    for (std::size_t i = 0; i < breaks_.size(); ++i) {
        if (coeffs_[i][0] + coeffs_[i][1] * prev > 0) return true;
        if (coeffs_[i][0] + coeffs_[i][1] * breaks_[i] > 0) return true;
        prev = breaks_[i];
    }
    return false;
}

PiecewisePoly PiecewisePoly::power(const PiecewiseLinear& base, long exponent) {
    if (exponent < 1) throw DomainError("piecewise power: exponent must be >= 1");
    PiecewisePoly out;
    out.breaks_ = base.breaks();
    out.at0_ = pow_int(base.value_at_0(), exponent);
    for (const auto& [c0, c1] : base.coeffs()) {
        // (c0 + c1 a)^e by repeated multiplication; degrees stay tiny
        std::vector<Rational> poly{Rational(1)};
        for (long k = 0; k < exponent; ++k) {
            std::vector<Rational> next(poly.size() + 1, Rational(0));
            for (std::size_t j = 0; j < poly.size(); ++j) {
                next[j] += poly[j] * c0;
                next[j + 1] += poly[j] * c1;
            }
            poly = std::move(next);
        }
        out.coeffs_.push_back(std::move(poly));
    }
    return out;
}

Rational PiecewisePoly::eval_poly(const std::vector<Rational>& c, const Rational& x) {
    Rational acc(0);
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
    return acc;
}

Rational PiecewisePoly::operator()(const Rational& alpha) const {
    if (alpha < 0) throw DomainError("piecewise poly evaluated below 0");
    if (alpha == 0) return at0_;
    for (std::size_t i = 0; i < breaks_.size(); ++i)
        if (alpha <= breaks_[i]) return eval_poly(coeffs_[i], alpha);
    return Rational(0);
}

Rational PiecewisePoly::integrate(const Rational& x, const Rational& y) const {
    if (y < x) throw DomainError("piecewise poly: integral over a reversed interval");
    Rational acc(0);
    Rational prev(0);
    for (std::size_t i = 0; i < breaks_.size(); ++i) {
        Rational lo = std::max(x, prev);
        Rational hi = std::min(y, breaks_[i]);
        if (lo < hi) {
            const auto& c = coeffs_[i];
            // antiderivative: sum c_k t^{k+1} / (k+1)
            Rational upper(0), lower(0);
            Rational hp = hi, lp = lo;
            for (std::size_t k = 0; k < c.size(); ++k) {
                upper += c[k] * hp / Rational(static_cast<long>(k) + 1);
                lower += c[k] * lp / Rational(static_cast<long>(k) + 1);
                hp *= hi;
                lp *= lo;
            }
            acc += upper - lower;
        }
        prev = breaks_[i];
    }
    return acc;
}

}  // namespace grl
