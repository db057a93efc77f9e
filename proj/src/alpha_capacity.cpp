#include "grl/alpha_capacity.hpp"

#include <algorithm>
#include <cmath>

namespace grl {

namespace {

bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// w^p for w >= 0. Exact for integer p, tracked-error double otherwise.
ExtValue rational_pow(const Rational& w, const Rational& p) {
    if (w == 0) return ExtValue::exact(Rational(0));  // p > 0 throughout
    if (is_integer(p)) return ExtValue::exact(pow_int(w, numerator(p).convert_to<long>()));
    double x = std::pow(to_double(w), to_double(p));
    return ExtValue::approx(x, std::abs(x) * 1e-12);
}

}  // namespace

AlphaCapacity AlphaCapacity::sigma_additive(std::vector<Atom> atoms, std::vector<Segment> segments) {
    AlphaCapacity v(Kind::SigmaAdditive);
    for (const Atom& a : atoms) {
        if (a.location < 0) throw DomainError("atom below 0");
        if (a.mass <= 0) throw DomainError("atom mass must be positive");
    }
    for (std::size_t i = 0; i < segments.size(); ++i) {
        if (segments[i].density < 0) throw DomainError("segment density must be non-negative");
        for (std::size_t j = i + 1; j < segments.size(); ++j)
            if (segments[i].where.intersect(segments[j].where))
                throw DomainError("segments must be pairwise disjoint");
    }
    v.atoms_ = std::move(atoms);
    v.segments_ = std::move(segments);
    return v;
}

AlphaCapacity AlphaCapacity::lebesgue() {
    return sigma_additive({}, {Segment{Interval::tail(Rational(0), false), Rational(1)}});
}

AlphaCapacity AlphaCapacity::lebesgue_on(const Rational& end) {
    return sigma_additive({}, {Segment{Interval::closed(Rational(0), end), Rational(1)}});
}

AlphaCapacity AlphaCapacity::dirac(Rational location) {
    if (location < 0) throw DomainError("dirac location below 0");
    AlphaCapacity v(Kind::Dirac);
    v.param_ = std::move(location);
    return v;
}

AlphaCapacity AlphaCapacity::vanishing_on_bounded(Rational level) {
    if (level <= 0) throw DomainError("vanishing level must be positive");
    AlphaCapacity v(Kind::VanishingOnBounded);
    v.param_ = std::move(level);
    return v;
}

AlphaCapacity AlphaCapacity::distorted_power(Rational exponent) {
    if (exponent <= 0) throw DomainError("power exponent must be positive");
    AlphaCapacity v(Kind::DistortedPower);
    v.param_ = std::move(exponent);
    return v;
}

ExtValue AlphaCapacity::mass(const Interval& cell) const {
    switch (kind_) {
        case Kind::SigmaAdditive: {
            ExtValue acc = ExtValue::exact(Rational(0));
            for (const Atom& a : atoms_)
                if (cell.contains(a.location)) acc += ExtValue::exact(a.mass);
            for (const Segment& s : segments_) {
                if (s.density == 0) continue;
                if (auto overlap = s.where.intersect(cell)) acc += overlap->length().scaled(s.density);
            }
            return acc;
        }
        case Kind::Dirac:
            return ExtValue::exact(Rational(cell.contains(param_) ? 1 : 0));
        case Kind::VanishingOnBounded:
            return cell.unbounded ? ExtValue::exact(param_) : ExtValue::exact(Rational(0));
        case Kind::DistortedPower: {
            ExtValue len = cell.length();
            if (len.is_infinite()) return ExtValue::infinity();
            return rational_pow(len.exact_value(), param_);
        }
    }
    return ExtValue::exact(Rational(0));
}

ExtValue AlphaCapacity::mass_split_tail(const Interval& tail) const {
    if (!tail.unbounded) throw DomainError("mass_split_tail expects an unbounded cell");
    switch (kind_) {
        case Kind::SigmaAdditive:
            return mass(tail);  // countable additivity over the unit cells
        case Kind::Dirac:
            return mass(tail);  // exactly one unit cell holds the atom
        case Kind::VanishingOnBounded:
            return ExtValue::exact(Rational(0));  // every unit cell is bounded
        case Kind::DistortedPower:
            return ExtValue::infinity();  // countably many cells of mass 1^p
    }
    return ExtValue::exact(Rational(0));
}

Rational AlphaCapacity::mass_at_origin() const {
    ExtValue m = mass(Interval::point(Rational(0)));
    return m.exact_value();
}

ExtValue AlphaCapacity::total_variation() const {
    switch (kind_) {
        case Kind::SigmaAdditive: {
            // additive, so the variation is the total mass
            ExtValue acc = ExtValue::exact(Rational(0));
            for (const Atom& a : atoms_) acc += ExtValue::exact(a.mass);
            for (const Segment& s : segments_) {
                if (s.density == 0) continue;
                acc += s.where.length().scaled(s.density);
            }
            return acc;
        }
        case Kind::Dirac:
            return ExtValue::exact(Rational(1));
        case Kind::VanishingOnBounded:
            // m interleaved unions of intervals, all disjoint and unbounded,
            // sum to m * level for every m
            return ExtValue::infinity();
        case Kind::DistortedPower:
            // a single set of infinite length already has value inf
            return ExtValue::infinity();
    }
    return ExtValue::exact(Rational(0));
}

AlphaCapacity AlphaCapacity::scaled(const Rational& k) const {
    if (k <= 0) throw DomainError("alpha-capacity scale must be positive");
    switch (kind_) {
        case Kind::SigmaAdditive: {
            auto atoms = atoms_;
            auto segments = segments_;
            for (auto& a : atoms) a.mass *= k;
            for (auto& s : segments) s.density *= k;
            return sigma_additive(std::move(atoms), std::move(segments));
        }
        case Kind::Dirac:
            return sigma_additive({Atom{param_, k}}, {});
        case Kind::VanishingOnBounded:
            return vanishing_on_bounded(param_ * k);
        case Kind::DistortedPower:
            throw DomainError("scaling leaves the distorted-power family");
    }
    throw DomainError("unreachable alpha-capacity kind");
}

AlphaCapacity AlphaCapacity::plus(const AlphaCapacity& other) const {
    if (kind_ != Kind::SigmaAdditive || other.kind_ != Kind::SigmaAdditive)
        throw DomainError("alpha-capacity sum is defined within the sigma-additive family");
    auto atoms = atoms_;
    atoms.insert(atoms.end(), other.atoms_.begin(), other.atoms_.end());
    // merge coincident atoms
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& a, const Atom& b) { return a.location < b.location; });
    std::vector<Atom> merged;
    for (auto& a : atoms) {
        if (!merged.empty() && merged.back().location == a.location)
            merged.back().mass += a.mass;
        else
            merged.push_back(a);
    }
    // Segment endpoints carry no density mass, so the sum's absolutely
    // continuous part can be rebuilt from open elementary intervals between
    // the union of all endpoints.
    std::vector<Rational> cuts{Rational(0)};
    bool any_tail = false;
    for (const auto* list : {&segments_, &other.segments_}) {
        for (const Segment& s : *list) {
            cuts.push_back(s.where.lo);
            if (s.where.unbounded)
                any_tail = true;
            else
                cuts.push_back(s.where.hi);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    auto density_at = [](const std::vector<Segment>& list, const Rational& x) {
        for (const Segment& s : list)
            if (s.where.contains(x)) return s.density;
        return Rational(0);
    };
    std::vector<Segment> kept;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Rational mid = (cuts[i] + cuts[i + 1]) / 2;
        Rational d = density_at(segments_, mid) + density_at(other.segments_, mid);
        if (d > 0) kept.push_back(Segment{Interval::open(cuts[i], cuts[i + 1]), d});
    }
    if (any_tail) {
        Rational probe = cuts.back() + 1;
        Rational d = density_at(segments_, probe) + density_at(other.segments_, probe);
        if (d > 0) kept.push_back(Segment{Interval::tail(cuts.back(), true), d});
    }
    return sigma_additive(std::move(merged), std::move(kept));
}

std::string AlphaCapacity::kind_name() const {
    switch (kind_) {
        case Kind::SigmaAdditive: return "sigma_additive";
        case Kind::Dirac: return "dirac";
        case Kind::VanishingOnBounded: return "vanishing_on_bounded";
        case Kind::DistortedPower: return "distorted_power";
    }
    return "?";
}

ExtValue alpha_variation(const AlphaCapacity& v) { return v.total_variation(); }

}  // namespace grl
