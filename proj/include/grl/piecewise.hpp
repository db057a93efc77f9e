#pragma once

#include "grl/rational.hpp"

#include <array>
#include <optional>
#include <vector>

namespace grl {

/// Piecewise-affine function on [0, inf) with compact support: a value at 0,
/// affine pieces on the half-open intervals (t_{i-1}, t_i], and 0 beyond the
/// last break. Level-length profiles  alpha |-> lambda({f >= alpha} ∩ A)
/// live here; they are left-continuous, which the (lo, hi] piece convention
/// encodes for free.
class PiecewiseLinear {
public:
    PiecewiseLinear() : at0_(0) {}

    /// breaks 0 < t_1 < ... < t_r; coeffs[i] = {c0, c1} meaning c0 + c1*alpha
    /// on (t_{i-1}, t_i].
    PiecewiseLinear(std::vector<Rational> breaks, Rational at0,
                    std::vector<std::array<Rational, 2>> coeffs);

    static PiecewiseLinear zero() { return PiecewiseLinear(); }

    const std::vector<Rational>& breaks() const { return breaks_; }
    const Rational& value_at_0() const { return at0_; }
    const std::vector<std::array<Rational, 2>>& coeffs() const { return coeffs_; }

    Rational operator()(const Rational& alpha) const;

    PiecewiseLinear plus(const PiecewiseLinear& other) const;

    Rational sup() const;
    bool is_zero() const;
    /// True when the function is positive somewhere on a set of positive
    /// length (affine pieces are positive on a sliver iff positive at one of
    /// their ends).
    bool positive_on_an_interval() const;

private:
    std::vector<Rational> breaks_;
    Rational at0_;
    std::vector<std::array<Rational, 2>> coeffs_;
};

/// Integer power of a PiecewiseLinear: polynomial pieces with exact rational
/// coefficients, same break structure, compact support.
class PiecewisePoly {
public:
    PiecewisePoly() : at0_(0) {}

    static PiecewisePoly power(const PiecewiseLinear& base, long exponent);

    const std::vector<Rational>& breaks() const { return breaks_; }
    const Rational& value_at_0() const { return at0_; }
    /// coeffs()[i][k] multiplies alpha^k on (t_{i-1}, t_i].
    const std::vector<std::vector<Rational>>& coeffs() const { return coeffs_; }

    Rational operator()(const Rational& alpha) const;

    /// Exact definite integral over [x, y] (endpoints carry no mass).
    Rational integrate(const Rational& x, const Rational& y) const;

private:
    static Rational eval_poly(const std::vector<Rational>& c, const Rational& x);

    std::vector<Rational> breaks_;
    Rational at0_;
    std::vector<std::vector<Rational>> coeffs_;
};

}  // namespace grl
