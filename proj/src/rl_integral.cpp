#include "grl/rl_integral.hpp"

namespace grl {

const char* to_string(RLMethod m) {
    switch (m) {
        case RLMethod::ClosedFormSigmaAdditive: return "closed_form_sigma_additive";
        case RLMethod::ClosedFormDirac: return "closed_form_dirac";
        case RLMethod::ClosedFormVanishingBounded: return "closed_form_vanishing_bounded";
        case RLMethod::ClosedFormDistortedPGt1: return "closed_form_distorted_p_gt_1";
        case RLMethod::ClosedFormDistortedPLt1: return "closed_form_distorted_p_lt_1";
        case RLMethod::NonexistentDistortedPLt1: return "nonexistent_distorted_p_lt_1";
        case RLMethod::Estimated: return "estimated";
    }
    return "?";
}

namespace {

/// Piece-by-piece pairing of u with per-cell masses. Valid whenever masses
/// are countably additive over refinements (sigma-additive nu, and Lebesgue
/// via the p = 1 distortion).
RLResult additive_closed_form(const StepFunction& u, const AlphaCapacity& v) {
    RLResult r;
    r.method = RLMethod::ClosedFormSigmaAdditive;
    ExtValue acc = ExtValue::exact(Rational(0));
    for (const auto& [piece, value] : u.pieces()) acc += v.mass(piece).scaled(value);
    if (acc.is_infinite()) {
        // only the tail can do this: positive tail value against infinite
        // tail mass
        r.exists = false;
        r.value = ExtValue::infinity();
        r.note = "positive tail value meets infinite tail mass; refined sums are unbounded";
        return r;
    }
    r.exists = true;
    r.value = acc;
    return r;
}

}  // namespace

RLResult rl_integrate(const StepFunction& u, const AlphaCapacity& v, const RLOptions& opts) {
    RLResult r;
    switch (v.kind()) {
        case AlphaCapacity::Kind::SigmaAdditive:
            r = additive_closed_form(u, v);
            break;
        case AlphaCapacity::Kind::Dirac:
            r.exists = true;
            r.value = ExtValue::exact(u(v.dirac_location()));
            r.method = RLMethod::ClosedFormDirac;
            break;
        case AlphaCapacity::Kind::VanishingOnBounded:
            r.exists = true;
            r.value = ExtValue::exact(Rational(0));
            r.method = RLMethod::ClosedFormVanishingBounded;
            break;
        case AlphaCapacity::Kind::DistortedPower: {
            const Rational& p = v.exponent();
            if (p == 1) {
                r = additive_closed_form(u, v);
            } else if (p > 1) {
                r.method = RLMethod::ClosedFormDistortedPGt1;
                if (u.vanishes_at_tail()) {
                    r.exists = true;
                    r.value = ExtValue::exact(Rational(0));
                } else {
                    r.exists = false;
                    r.value = ExtValue::infinity();
                    r.note = "positive tail value: unit-cell refinements already sum to +inf";
                }
            } else {
                if (u.positive_on_an_interval()) {
                    r.exists = false;
                    r.method = RLMethod::NonexistentDistortedPLt1;
                    r.value = ExtValue::infinity();
                    r.note = "u positive on a set of positive length: lower sums diverge under bisection";
                } else {
                    r.exists = true;
                    r.method = RLMethod::ClosedFormDistortedPLt1;
                    r.value = ExtValue::exact(Rational(0));
                }
            }
            break;
        }
    }
    if (opts.attach_probe) {
        AlphaPartition start = AlphaPartition::trivial();
        // the vanishing family is decided by the all-bounded-cells partition;
        // probe exactly that one
        start.split_tail = v.kind() == AlphaCapacity::Kind::VanishingOnBounded;
        r.trace = refinement_envelopes(u, v, start, opts.probe);
    }
    return r;
}

}  // namespace grl
