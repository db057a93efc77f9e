#pragma once

#include "grl/interval.hpp"
#include "grl/rational.hpp"

#include <string>
#include <vector>

namespace grl {

/// Set function on [0, inf), one of four closed families. Keeping the set of
/// families closed is what lets Riemann-Lebesgue existence be decided
/// analytically instead of sampled.
class AlphaCapacity {
public:
    enum class Kind { SigmaAdditive, Dirac, VanishingOnBounded, DistortedPower };

    struct Atom {
        Rational location;  // >= 0
        Rational mass;      // > 0
    };
    struct Segment {
        Interval where;    // pairwise disjoint across the list
        Rational density;  // >= 0, constant on the segment
    };

    static AlphaCapacity sigma_additive(std::vector<Atom> atoms, std::vector<Segment> segments);
    /// Lebesgue measure on [0, inf): one segment, density 1.
    static AlphaCapacity lebesgue();
    /// Lebesgue restricted to [0, end].
    static AlphaCapacity lebesgue_on(const Rational& end);
    static AlphaCapacity dirac(Rational location);
    static AlphaCapacity vanishing_on_bounded(Rational level);
    static AlphaCapacity distorted_power(Rational exponent);

    Kind kind() const { return kind_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    const std::vector<Segment>& segments() const { return segments_; }
    const Rational& dirac_location() const { return param_; }
    const Rational& vanishing_level() const { return param_; }
    const Rational& exponent() const { return param_; }

    /// nu(E) for an interval (or point) set E.
    ExtValue mass(const Interval& cell) const;

    /// nu(E) with the unbounded tail cell read as its canonical split into
    /// unit-length half-open cells. Differs from mass() only for the
    /// vanishing-on-bounded and distorted-power families.
    ExtValue mass_split_tail(const Interval& tail) const;

    Rational mass_at_origin() const;  // nu({0}), always finite

    /// sup of sums over finite disjoint families (closed form per family).
    ExtValue total_variation() const;

    /// Scaling k*nu stays within the families (a scaled Dirac becomes a
    /// single-atom sigma-additive function). k must be positive.
    AlphaCapacity scaled(const Rational& k) const;

    /// Sum within the sigma-additive family.
    AlphaCapacity plus(const AlphaCapacity& other) const;

    std::string kind_name() const;

private:
    AlphaCapacity(Kind k) : kind_(k) {}

    Kind kind_;
    std::vector<Atom> atoms_;
    std::vector<Segment> segments_;
    Rational param_;  // dirac location | vanishing level | power exponent
};

/// Closed-form alpha-variation per family (Dirac -> 1, vanishing and
/// distorted-power -> +inf, sigma-additive -> total mass).
ExtValue alpha_variation(const AlphaCapacity& v);

}  // namespace grl
