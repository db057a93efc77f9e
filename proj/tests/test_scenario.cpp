#include "grl/scenario.hpp"

#include <doctest.h>

#include "grl/rng.hpp"
#include "helpers.hpp"

using namespace grl;
using grl::test::cap;
using grl::test::q;
using grl::test::vec;

namespace {

// mu(S)=1, mu({f>=2} = {1,2}) = 7/10, mu({f>=3} = {2}) = 1/2 for f = (1,2,3)
Capacity reference_mu() {
    return cap(3, {"0", "1/10", "1/2", "3/5", "1/2", "3/5", "7/10", "1"});
}

ScenarioFinite make_finite(const Capacity& mu, const AlphaCapacity& nu,
                           const std::vector<Rational>& f, SubsetMask A) {
    ScenarioFinite sc;
    sc.space = mu.space();
    sc.mu = mu;
    sc.nu = nu;
    sc.f = f;
    sc.A = A;
    return sc;
}

}  // namespace

TEST_CASE("survival of a three-level function") {
    Capacity mu = reference_mu();
    StepFunction u = survival_finite(vec({"1", "2", "3"}), mu, 7);
    CHECK(u(q("0")) == 1);
    CHECK(u(q("1")) == 1);
    CHECK(u(q("3/2")) == q("7/10"));
    CHECK(u(q("2")) == q("7/10"));
    CHECK(u(q("3")) == q("1/2"));
    CHECK(u(q("10")) == 0);
}

TEST_CASE("survival of the zero function is a spike at the origin") {
    Capacity mu = reference_mu();
    StepFunction u = survival_finite(vec({"0", "0", "0"}), mu, 7);
    CHECK(u(q("0")) == mu.at(7));
    CHECK(u(q("1/1000")) == 0);
    CHECK(u.breakpoints().empty());
}

TEST_CASE("survival over the empty set vanishes") {
    StepFunction u = survival_finite(vec({"1", "2", "3"}), reference_mu(), 0);
    CHECK(u == StepFunction::zero());
}

TEST_CASE("survival monotonicity for monotone capacities") {
    Rng rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        GroundSpace space(4);
        Capacity mu = random_capacity(space, CapacityKind::Monotone, rng);
        std::vector<Rational> f(4);
        for (auto& v : f) v = rng.rational(6, 3);
        SubsetMask A = static_cast<SubsetMask>(rng.uniform(0, space.full_mask()));
        SubsetMask B = A | static_cast<SubsetMask>(rng.uniform(0, space.full_mask()));
        StepFunction ua = survival_finite(f, mu, A);
        StepFunction ub = survival_finite(f, mu, B);
        CHECK(ua.value_at_0() == mu.at(A));
        // non-increasing in alpha
        Rational prev = ua(q("0"));
        for (const auto& [cell, value] : ua.pieces()) {
            (void)cell;
            CHECK(value <= prev);
            prev = value;
        }
        CHECK(ua.pointwise_leq(ub));
    }
}

TEST_CASE("indicator identity: survivals agree away from the origin") {
    Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        GroundSpace space(4);
        Capacity mu = random_capacity(space, CapacityKind::Arbitrary, rng);
        std::vector<Rational> f(4);
        for (auto& v : f) v = rng.rational(6, 3);
        SubsetMask A = static_cast<SubsetMask>(rng.uniform(0, space.full_mask()));
        StepFunction on_a = survival_finite(f, mu, A);
        StepFunction chi = survival_finite(restrict_indicator(f, A), mu, space.full_mask());
        CHECK(chi.value_at_0() == mu.at(space.full_mask()));
        // equality for every alpha > 0: compare on merged pieces
        StepFunction diff_probe = on_a.plus(chi);
        for (const auto& [cell, value] : diff_probe.pieces()) {
            (void)value;
            if (cell.is_point() && cell.lo == 0) continue;
            Rational probe = cell.is_point() ? cell.lo : (cell.unbounded ? cell.lo + 1 : (cell.lo + cell.hi) / 2);
            CHECK(on_a(probe) == chi(probe));
        }
    }
}

TEST_CASE("restrict_indicator basics") {
    auto f = vec({"1", "2", "3"});
    CHECK(restrict_indicator(f, 7) == f);
    CHECK(restrict_indicator(f, 0) == vec({"0", "0", "0"}));
    CHECK(restrict_indicator(f, 5) == vec({"1", "0", "3"}));
}

TEST_CASE("choquet sorting oracle") {
    CHECK(choquet(vec({"1", "2", "3"}), reference_mu(), 7) == q("11/5"));
    // constant functions: c * mu(A)
    CHECK(choquet(vec({"2", "2", "2"}), reference_mu(), 7) == 2);
    CHECK(choquet(vec({"2", "2", "2"}), reference_mu(), 3) == 2 * q("3/5"));
}

TEST_CASE("choquet of additive capacities is the weighted sum (100 random instances)") {
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        GroundSpace space(static_cast<int>(rng.uniform(1, 5)));
        Capacity mu = random_capacity(space, CapacityKind::Additive, rng);
        std::vector<Rational> f(space.size);
        for (auto& v : f) v = rng.rational(8, 4);
        SubsetMask A = static_cast<SubsetMask>(rng.uniform(0, space.full_mask()));
        Rational weighted(0);
        for (int s = 0; s < space.size; ++s)
            if ((A >> s) & 1) weighted += f[s] * mu.at(SubsetMask(1) << s);
        CHECK(choquet(f, mu, A) == weighted);
    }
}

TEST_CASE("generalized integral equals choquet under Lebesgue nu") {
    Rng rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        GroundSpace space(static_cast<int>(rng.uniform(1, 6)));
        Capacity mu = random_capacity(space, CapacityKind::Arbitrary, rng);
        std::vector<Rational> f(space.size);
        for (auto& v : f) v = rng.rational(8, 4);
        SubsetMask A = static_cast<SubsetMask>(rng.uniform(0, space.full_mask()));
        GRLReport rep = grl_integrate(make_finite(mu, AlphaCapacity::lebesgue(), f, A));
        REQUIRE(rep.integrable);
        CHECK(rep.value.exact_value() == choquet(f, mu, A));
    }
}

TEST_CASE("level sets commute with pushforward") {
    Rng rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        GroundSpace source(4), target(static_cast<int>(rng.uniform(1, 3)));
        Capacity mu = random_capacity(source, CapacityKind::Arbitrary, rng);
        std::vector<int> phi(source.size);
        for (auto& t : phi) t = static_cast<int>(rng.uniform(0, target.size - 1));
        std::vector<Rational> g(target.size);
        for (auto& v : g) v = rng.rational(6, 3);
        std::vector<Rational> composed(source.size);
        for (int s = 0; s < source.size; ++s) composed[s] = g[phi[s]];
        StepFunction lhs = survival_finite(g, pushforward(mu, phi, target), target.full_mask());
        StepFunction rhs = survival_finite(composed, mu, source.full_mask());
        CHECK(lhs == rhs);
    }
}

TEST_CASE("interval survival: the squared distortion of the identity map") {
    ScenarioInterval sc;
    sc.domain_end = 1;
    sc.mu_exponent = 2;
    sc.knots = {{q("0"), q("0")}, {q("1"), q("1")}};
    sc.subsets = {{q("0"), q("1")}};
    IntervalSurvival u = survival_interval(sc);
    REQUIRE(u.power.has_value());
    // (1 - a)^2 on [0, 1], 0 after
    CHECK((*u.power)(q("0")) == 1);
    CHECK((*u.power)(q("1/2")) == q("1/4"));
    CHECK((*u.power)(q("1")) == 0);
    CHECK((*u.power)(q("3/2")) == 0);
    CHECK(u.length(q("1/3")) == q("2/3"));

    GRLReport rep = grl_integrate(sc);
    REQUIRE(rep.integrable);
    CHECK(rep.value.exact_value() == q("1/3"));
}

TEST_CASE("interval survival: constant functions give a plateau") {
    ScenarioInterval sc;
    sc.domain_end = 3;
    sc.mu_exponent = 1;
    sc.knots = {{q("0"), q("2")}, {q("3"), q("2")}};
    sc.subsets = {{q("0"), q("3")}};
    IntervalSurvival u = survival_interval(sc);
    CHECK(u.length(q("0")) == 3);
    CHECK(u.length(q("2")) == 3);
    CHECK(u.length(q("201/100")) == 0);
    GRLReport rep = grl_integrate(sc);
    CHECK(rep.value.exact_value() == 6);  // c * lambda(A) = 2 * 3
}

TEST_CASE("interval survival: union domains break at the gap") {
    ScenarioInterval sc;
    sc.domain_end = 1;
    sc.mu_exponent = 1;
    sc.knots = {{q("0"), q("0")}, {q("1"), q("1")}};
    sc.subsets = {{q("0"), q("1/2")}, {q("3/4"), q("1")}};
    IntervalSurvival u = survival_interval(sc);
    // lambda({x >= a} ∩ A): 3/4 at 0, kinks at 1/2 and 3/4
    CHECK(u.length(q("0")) == q("3/4"));
    CHECK(u.length(q("1/4")) == q("1/2"));   // [1/4,1/2] ∪ [3/4,1]
    CHECK(u.length(q("1/2")) == q("1/4"));   // {1/2} ∪ [3/4,1]
    CHECK(u.length(q("2/3")) == q("1/4"));   // [3/4, 1] only
    CHECK(u.length(q("3/4")) == q("1/4"));
    CHECK(u.length(q("7/8")) == q("1/8"));
    CHECK(u.length(q("1")) == 0);
    GRLReport rep = grl_integrate(sc);
    // area under the profile: (3/4 - a) on [0,1/2], 1/4 on [1/2,3/4], (1 - a)
    // on [3/4,1]: 1/4 + 1/16 + 1/32
    CHECK(rep.value.exact_value() == q("11/32"));
}

TEST_CASE("interval scenarios against the other nu families") {
    ScenarioInterval sc;
    sc.domain_end = 1;
    sc.mu_exponent = 2;
    sc.knots = {{q("0"), q("0")}, {q("1"), q("1")}};
    sc.subsets = {{q("0"), q("1")}};

    sc.nu = AlphaCapacity::dirac(q("1/2"));
    CHECK(grl_integrate(sc).value.exact_value() == q("1/4"));

    sc.nu = AlphaCapacity::vanishing_on_bounded(q("1"));
    CHECK(grl_integrate(sc).value.exact_value() == 0);

    sc.nu = AlphaCapacity::distorted_power(q("2"));
    GRLReport gt1 = grl_integrate(sc);
    CHECK(gt1.integrable);
    CHECK(gt1.value.exact_value() == 0);

    sc.nu = AlphaCapacity::distorted_power(q("1/2"));
    GRLReport lt1 = grl_integrate(sc);
    CHECK_FALSE(lt1.integrable);
    CHECK(lt1.rl.method == RLMethod::NonexistentDistortedPLt1);

    sc.nu = AlphaCapacity::sigma_additive({{q("1/2"), q("2")}},
                                          {{Interval::closed(q("0"), q("1")), q("1")}});
    // atom: 2 * (1/2)^2 ; density: 1/3
    CHECK(grl_integrate(sc).value.exact_value() == q("5/6"));
}

TEST_CASE("layer-cake identity: p=1 interval scenarios equal the trapezoid area") {
    // with mu = lambda and nu = Lebesgue, the level-length profile integrates
    // to the plain area of f over A; the trapezoid rule is exact for
    // piecewise-linear f and gives a fully independent route
    Rng rng(71);
    for (int trial = 0; trial < 60; ++trial) {
        ScenarioInterval sc;
        sc.domain_end = rng.positive_rational(6, 2) + 1;
        sc.mu_exponent = 1;
        int pieces = static_cast<int>(rng.uniform(1, 4));
        std::vector<Rational> xs{Rational(0)};
        for (int i = 1; i < pieces; ++i) {
            Rational jitter(rng.uniform(0, 4), 9);  // < 1/2, keeps knots ordered
            xs.push_back(sc.domain_end * (Rational(i) + jitter) / pieces);
        }
        xs.push_back(sc.domain_end);
        for (const auto& x : xs) sc.knots.emplace_back(x, rng.rational(8, 3));
        // A: one or two disjoint closed windows
        Rational a1 = sc.domain_end / rng.uniform(3, 6);
        Rational b1 = a1 + sc.domain_end / rng.uniform(4, 8);
        sc.subsets.emplace_back(a1, std::min(b1, sc.domain_end));
        if (rng.coin()) {
            Rational a2 = std::min(b1 + sc.domain_end / 8, sc.domain_end);
            sc.subsets.emplace_back(a2, std::min(a2 + sc.domain_end / 7, sc.domain_end));
        }

        // trapezoid area of f over A, exact: clip every knot piece to A
        Rational area(0);
        for (std::size_t i = 0; i + 1 < sc.knots.size(); ++i) {
            const auto& [x0, y0] = sc.knots[i];
            const auto& [x1, y1] = sc.knots[i + 1];
            Rational slope = (y1 - y0) / (x1 - x0);
            for (const auto& [lo, hi] : sc.subsets) {
                Rational l = std::max(x0, lo), h = std::min(x1, hi);
                if (l >= h) continue;
                Rational fl = y0 + slope * (l - x0);
                Rational fh = y0 + slope * (h - x0);
                area += (fl + fh) * (h - l) / 2;
            }
        }

        GRLReport rep = grl_integrate(sc);
        REQUIRE(rep.integrable);
        CHECK(rep.value.exact_value() == area);
    }
}

TEST_CASE("interval level lengths match a per-alpha solver") {
    // independent oracle: for a fixed alpha, solve f(x) >= alpha piece by
    // piece and add up the clipped lengths; compare against the profile
    Rng rng(73);
    for (int trial = 0; trial < 40; ++trial) {
        ScenarioInterval sc;
        sc.domain_end = 4;
        sc.mu_exponent = 1;
        sc.knots = {{q("0"), rng.rational(6, 2)},
                    {q("1"), rng.rational(6, 2)},
                    {q("2"), rng.rational(6, 2)},
                    {q("4"), rng.rational(6, 2)}};
        sc.subsets = {{q("1/2"), q("5/2")}, {q("3"), q("4")}};
        IntervalSurvival u = survival_interval(sc);
        for (int probe = 0; probe < 12; ++probe) {
            Rational alpha = rng.rational(7, 3);
            Rational expected(0);
            for (std::size_t i = 0; i + 1 < sc.knots.size(); ++i) {
                const auto& [x0, y0] = sc.knots[i];
                const auto& [x1, y1] = sc.knots[i + 1];
                for (const auto& [lo, hi] : sc.subsets) {
                    Rational l = std::max(x0, lo), h = std::min(x1, hi);
                    if (l >= h) continue;
                    Rational slope = (y1 - y0) / (x1 - x0);
                    Rational fl = y0 + slope * (l - x0);
                    Rational fh = y0 + slope * (h - x0);
                    if (slope == 0) {
                        if (fl >= alpha) expected += h - l;
                    } else if (slope > 0) {
                        if (alpha <= fl) expected += h - l;
                        else if (alpha <= fh) expected += h - (l + (alpha - fl) / slope);
                    } else {
                        if (alpha <= fh) expected += h - l;
                        else if (alpha <= fl) expected += (alpha - fl) / slope;
                    }
                }
            }
            CHECK(u.length(alpha) == expected);
        }
    }
}

TEST_CASE("non-integer distortion exponents integrate numerically with error bounds") {
    ScenarioInterval sc;
    sc.domain_end = 1;
    sc.mu_exponent = q("3/2");
    sc.knots = {{q("0"), q("0")}, {q("1"), q("1")}};
    sc.subsets = {{q("0"), q("1")}};
    GRLReport rep = grl_integrate(sc);
    REQUIRE(rep.integrable);
    CHECK(rep.value.kind() == ExtValue::Kind::Approx);
    // int_0^1 (1-a)^(3/2) da = 2/5
    CHECK(rep.value.approx_value() == doctest::Approx(0.4).epsilon(1e-9));
    CHECK(rep.value.error_bound() < 1e-6);
}

TEST_CASE("zero capacity and constant integrand reference values") {
    GroundSpace space(2);
    Capacity zero_mu(space, {q("0"), q("0"), q("0"), q("0")});
    GRLReport z = grl_integrate(
        make_finite(zero_mu, AlphaCapacity::lebesgue_on(q("10")), vec({"1", "2"}), 3));
    CHECK(z.integrable);
    CHECK(z.value.exact_value() == 0);

    Capacity mu = cap(2, {"0", "1/2", "1/3", "1"});
    GRLReport c = grl_integrate(make_finite(mu, AlphaCapacity::lebesgue(), vec({"2", "2"}), 3));
    CHECK(c.value.exact_value() == 2);  // mu(S) * nu([0, 2])
}

TEST_CASE("scenario validation refuses a false origin assumption") {
    ScenarioFinite sc = make_finite(reference_mu(), AlphaCapacity::dirac(q("0")),
                                    vec({"1", "2", "3"}), 7);
    sc.assume_nu_zero_at_origin = true;
    CHECK_THROWS_AS(sc.validate(), DomainError);
    sc.nu = AlphaCapacity::dirac(q("1"));
    CHECK_NOTHROW(sc.validate());
    sc.A = 15;  // not a subset of a 3-point space
    CHECK_THROWS_AS(sc.validate(), DomainError);
}
