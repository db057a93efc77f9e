#include "grl/scenario.hpp"

#include <algorithm>
#include <cmath>

namespace grl {

void ScenarioFinite::validate() const {
    if (static_cast<int>(f.size()) != space.size)
        throw DomainError("scenario: f must be total on the ground set");
    for (const Rational& v : f)
        if (v < 0) throw DomainError("scenario: f must be non-negative");
    if (A > space.full_mask()) throw DomainError("scenario: A is not a subset of the space");
    if (!(mu.space() == space)) throw DomainError("scenario: mu lives on a different space");
    if (assume_nu_zero_at_origin && nu.mass_at_origin() != 0)
        throw DomainError("scenario asserts nu({0}) = 0 but nu carries mass at 0");
}

void ScenarioInterval::validate() const {
    if (domain_end <= 0) throw DomainError("interval scenario: empty domain");
    if (mu_exponent <= 0) throw DomainError("interval scenario: mu exponent must be positive");
    if (knots.size() < 2) throw DomainError("interval scenario: f needs at least two knots");
    if (knots.front().first != 0 || knots.back().first != domain_end)
        throw DomainError("interval scenario: knots must span [0, domain_end]");
    for (std::size_t i = 0; i < knots.size(); ++i) {
        if (knots[i].second < 0) throw DomainError("interval scenario: f must be non-negative");
        if (i + 1 < knots.size() && knots[i].first >= knots[i + 1].first)
            throw DomainError("interval scenario: knot abscissas must be strictly increasing");
    }
    for (const auto& [a, b] : subsets) {
        if (a < 0 || b > domain_end || a > b)
            throw DomainError("interval scenario: A must be a union of subintervals of the domain");
    }
    if (assume_nu_zero_at_origin && nu.mass_at_origin() != 0)
        throw DomainError("scenario asserts nu({0}) = 0 but nu carries mass at 0");
}

StepFunction survival_finite(const std::vector<Rational>& f, const Capacity& mu, SubsetMask A) {
    const GroundSpace& space = mu.space();
    if (f.size() != static_cast<std::size_t>(space.size))
        throw DomainError("survival: f must be total on the ground set");
    if (A > space.full_mask()) throw DomainError("survival: A out of range");

    // distinct positive values of f on A, ascending
    std::vector<Rational> levels;
    for (int s = 0; s < space.size; ++s)
        if ((A >> s) & 1 && f[s] > 0) levels.push_back(f[s]);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    auto level_set_mass = [&](const Rational& alpha) {
        SubsetMask e = 0;
        for (int s = 0; s < space.size; ++s)
            if ((A >> s) & 1 && f[s] >= alpha) e |= SubsetMask(1) << s;
        return mu.at(e);
    };

    std::vector<Rational> pts, ivs;
    for (const Rational& w : levels) {
        // on the half-open run up to w the level set is {f >= w} ∩ A
        ivs.push_back(level_set_mass(w));
        pts.push_back(ivs.back());
    }
    return StepFunction(std::move(levels), mu.at(A), std::move(pts), std::move(ivs), Rational(0));
}

ExtValue IntervalSurvival::value_at(const Rational& alpha) const {
    if (power) return ExtValue::exact((*power)(alpha));
    Rational base = length(alpha);
    if (base == 0) return ExtValue::exact(Rational(0));
    double v = std::pow(to_double(base), to_double(exponent));
    return ExtValue::approx(v, std::abs(v) * 1e-12);
}

namespace {

/// lambda({x in [a, b] : f(x) >= alpha}) for one affine piece of f, as a
/// piecewise-linear function of alpha.
PiecewiseLinear piece_level_length(const Rational& a, const Rational& b, const Rational& fa,
                                   const Rational& fb) {
    Rational width = b - a;
    if (width <= 0) return PiecewiseLinear::zero();
    if (fa == fb) {
        // constant run: width for alpha <= fa, then nothing
        if (fa == 0) {
            // contributes only at alpha = 0
            return PiecewiseLinear({}, width, {});
        }
        return PiecewiseLinear({fa}, width, {{width, Rational(0)}});
    }
    Rational slope = (fb - fa) / width;
    Rational lo = std::min(fa, fb), hi = std::max(fa, fb);
    // full width until alpha reaches min(fa, fb), then an affine ramp down
    // to 0 at max(fa, fb): width - (alpha - lo) / |slope|
    Rational inv = Rational(1) / (slope < 0 ? -slope : slope);
    std::array<Rational, 2> ramp{width + lo * inv, -inv};
    if (lo == 0) return PiecewiseLinear({hi}, width, {ramp});
    return PiecewiseLinear({lo, hi}, width, {{width, Rational(0)}, ramp});
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Closed-form integral of the survival profile against nu, mirroring the
/// step-function engine case for case.
RLResult rl_integrate_profile(const IntervalSurvival& u, const AlphaCapacity& v) {
    RLResult r;
    auto zero_result = [&](RLMethod m) {
        r.exists = true;
        r.value = ExtValue::exact(Rational(0));
        r.method = m;
        return r;
    };
    switch (v.kind()) {
        case AlphaCapacity::Kind::Dirac:
            r.exists = true;
            r.value = u.value_at(v.dirac_location());
            r.method = RLMethod::ClosedFormDirac;
            return r;
        case AlphaCapacity::Kind::VanishingOnBounded:
            // compact support: an all-bounded partition annihilates u
            return zero_result(RLMethod::ClosedFormVanishingBounded);
        case AlphaCapacity::Kind::DistortedPower: {
            const Rational& q = v.exponent();
            if (q > 1) return zero_result(RLMethod::ClosedFormDistortedPGt1);
            if (q < 1) {
                if (u.length.positive_on_an_interval()) {
                    r.exists = false;
                    r.method = RLMethod::NonexistentDistortedPLt1;
                    r.value = ExtValue::infinity();
                    r.note =
                        "u positive on a set of positive length: lower sums diverge under bisection";
                    return r;
                }
                return zero_result(RLMethod::ClosedFormDistortedPLt1);
            }
            break;  // q == 1 is Lebesgue: fall through to the additive form
        }
        case AlphaCapacity::Kind::SigmaAdditive:
            break;
    }

    // sigma-additive (or Lebesgue-as-power): atoms evaluate u, segments
    // integrate density * u; the profile vanishes past its last break
    r.method = RLMethod::ClosedFormSigmaAdditive;
    const PiecewiseLinear& L = u.length;
    Rational support_end = L.breaks().empty() ? Rational(0) : L.breaks().back();

    if (u.power) {
        const PiecewisePoly& poly = *u.power;
        Rational acc(0);
        bool lebesgue_style = v.kind() == AlphaCapacity::Kind::DistortedPower;  // q == 1
        if (lebesgue_style) {
            acc = poly.integrate(Rational(0), support_end);
        } else {
            for (const auto& atom : v.atoms()) acc += poly(atom.location) * atom.mass;
            for (const auto& seg : v.segments()) {
                if (seg.density == 0) continue;
                Rational lo = seg.where.lo;
                Rational hi = seg.where.unbounded ? support_end : std::min(seg.where.hi, support_end);
                if (lo < hi) acc += poly.integrate(lo, hi) * seg.density;
            }
        }
        r.exists = true;
        r.value = ExtValue::exact(acc);
        return r;
    }

    // non-integer exponent: numeric with a tracked error bound
    double p = to_double(u.exponent);
    double total = 0, err = 0;
    auto pw = [&](const Rational& x) { return std::pow(to_double(L(x)), p); };
    auto add_segment = [&](const Rational& lo_r, const Rational& hi_r, const Rational& density) {
        // integrate (c0 + c1 a)^p exactly per affine piece of L
        Rational prev(0);
        double dens = to_double(density);
        for (std::size_t i = 0; i < L.breaks().size(); ++i) {
            Rational x = std::max(lo_r, prev), y = std::min(hi_r, L.breaks()[i]);
            if (x < y) {
                double c0 = to_double(L.coeffs()[i][0]), c1 = to_double(L.coeffs()[i][1]);
                double xa = to_double(x), ya = to_double(y);
                double piece;
                if (c1 == 0) {
                    piece = std::pow(c0, p) * (ya - xa);
                } else {
                    piece = (std::pow(c0 + c1 * ya, p + 1) - std::pow(c0 + c1 * xa, p + 1)) /
                            (c1 * (p + 1));
                }
                total += dens * piece;
                err += std::abs(dens * piece) * 1e-10;
            }
            prev = L.breaks()[i];
        }
    };
    if (v.kind() == AlphaCapacity::Kind::DistortedPower) {
        // q == 1: plain Lebesgue density over the support
        add_segment(Rational(0), support_end, Rational(1));
    } else {
        for (const auto& atom : v.atoms()) {
            double uv = pw(atom.location);
            total += uv * to_double(atom.mass);
            err += std::abs(uv * to_double(atom.mass)) * 1e-12;
        }
        for (const auto& seg : v.segments()) {
            if (seg.density == 0) continue;
            Rational hi = seg.where.unbounded ? support_end : std::min(seg.where.hi, support_end);
            if (seg.where.lo < hi) add_segment(seg.where.lo, hi, seg.density);
        }
    }
    r.exists = true;
    r.value = ExtValue::approx(total, err + std::abs(total) * 1e-12);
    return r;
}

}  // namespace

IntervalSurvival survival_interval(const ScenarioInterval& sc) {
    sc.validate();
    // normalize A: sort and merge overlapping closed intervals
    auto parts = sc.subsets;
    std::sort(parts.begin(), parts.end());
    std::vector<std::pair<Rational, Rational>> merged;
    for (const auto& iv : parts) {
        if (!merged.empty() && iv.first <= merged.back().second)
            merged.back().second = std::max(merged.back().second, iv.second);
        else
            merged.push_back(iv);
    }

    PiecewiseLinear L = PiecewiseLinear::zero();
    for (std::size_t i = 0; i + 1 < sc.knots.size(); ++i) {
        const auto& [x0, y0] = sc.knots[i];
        const auto& [x1, y1] = sc.knots[i + 1];
        for (const auto& [a, b] : merged) {
            Rational lo = std::max(x0, a), hi = std::min(x1, b);
            if (lo >= hi) continue;
            // f restricted to [lo, hi] is affine with the piece's slope
            Rational slope = (y1 - y0) / (x1 - x0);
            Rational flo = y0 + slope * (lo - x0);
            Rational fhi = y0 + slope * (hi - x0);
            L = L.plus(piece_level_length(lo, hi, flo, fhi));
        }
    }

    IntervalSurvival out;
    out.length = std::move(L);
    out.exponent = sc.mu_exponent;
    if (is_integer(sc.mu_exponent))
        out.power = PiecewisePoly::power(out.length, numerator(sc.mu_exponent).convert_to<long>());
    return out;
}

Rational choquet(const std::vector<Rational>& f, const Capacity& mu, SubsetMask A) {
    const GroundSpace& space = mu.space();
    if (f.size() != static_cast<std::size_t>(space.size))
        throw DomainError("choquet: f must be total on the ground set");
    if (A > space.full_mask()) throw DomainError("choquet: A out of range");

    std::vector<Rational> levels;
    for (int s = 0; s < space.size; ++s)
        if ((A >> s) & 1 && f[s] > 0) levels.push_back(f[s]);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    Rational acc(0), prev(0);
    for (const Rational& w : levels) {
        SubsetMask e = 0;
        for (int s = 0; s < space.size; ++s)
            if ((A >> s) & 1 && f[s] >= w) e |= SubsetMask(1) << s;
        acc += (w - prev) * mu.at(e);
        prev = w;
    }
    return acc;
}

std::vector<Rational> restrict_indicator(const std::vector<Rational>& f, SubsetMask A) {
    std::vector<Rational> out(f.size(), Rational(0));
    for (std::size_t s = 0; s < f.size(); ++s)
        if ((A >> s) & 1) out[s] = f[s];
    return out;
}

GRLReport grl_integrate(const ScenarioFinite& sc, const GRLOptions& opts) {
    sc.validate();
    GRLReport rep;
    rep.nu_zero_at_origin_assumed = sc.assume_nu_zero_at_origin;
    rep.nu_zero_at_origin_actual = sc.nu.mass_at_origin() == 0;
    StepFunction u = survival_finite(sc.f, sc.mu, sc.A);
    RLOptions ro;
    ro.attach_probe = opts.attach_probe;
    ro.probe = opts.probe;
    rep.rl = rl_integrate(u, sc.nu, ro);
    rep.value = rep.rl.value;
    rep.integrable = rep.rl.exists && rep.rl.value.is_finite();
    rep.survival_step = std::move(u);
    return rep;
}

GRLReport grl_integrate(const ScenarioInterval& sc, const GRLOptions& opts) {
    GRLReport rep;
    rep.nu_zero_at_origin_assumed = sc.assume_nu_zero_at_origin;
    rep.nu_zero_at_origin_actual = sc.nu.mass_at_origin() == 0;
    IntervalSurvival u = survival_interval(sc);
    rep.rl = rl_integrate_profile(u, sc.nu);
    (void)opts;
    rep.value = rep.rl.value;
    rep.integrable = rep.rl.exists && rep.rl.value.is_finite();
    rep.survival_profile = std::move(u);
    return rep;
}

GRLReport grl_integrate(const Scenario& sc, const GRLOptions& opts) {
    return std::visit([&](const auto& s) { return grl_integrate(s, opts); }, sc);
}

}  // namespace grl
