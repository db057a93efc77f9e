#pragma once

#include "grl/alpha_capacity.hpp"
#include "grl/capacity.hpp"
#include "grl/piecewise.hpp"
#include "grl/rl_integral.hpp"
#include "grl/step_function.hpp"

#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace grl {

/// Finite instance: everything exact. `f` is a total non-negative function
/// given pointwise; `A` is the subset integrated over.
struct ScenarioFinite {
    GroundSpace space;
    Capacity mu;
    AlphaCapacity nu = AlphaCapacity::lebesgue();
    std::vector<Rational> f;
    SubsetMask A = 0;
    bool assume_nu_zero_at_origin = false;

    void validate() const;
};

/// Continuous instance on [0, d]: mu is the power distortion lambda^p of
/// Lebesgue measure, f is piecewise linear through `knots` (first abscissa
/// 0, last abscissa d), and A is a finite union of closed subintervals.
struct ScenarioInterval {
    Rational domain_end;
    Rational mu_exponent;
    AlphaCapacity nu = AlphaCapacity::lebesgue();
    std::vector<std::pair<Rational, Rational>> knots;
    std::vector<std::pair<Rational, Rational>> subsets;
    bool assume_nu_zero_at_origin = false;

    void validate() const;
};

using Scenario = std::variant<ScenarioFinite, ScenarioInterval>;

/// Survival function  alpha |-> mu({s in A : f(s) >= alpha})  with the >=
/// level convention; u(0) = mu(A) since {f >= 0} is everything.
StepFunction survival_finite(const std::vector<Rational>& f, const Capacity& mu, SubsetMask A);

/// Level-length profile and its mu-distorted power for interval scenarios.
/// `power` is present exactly when the exponent is an integer; otherwise
/// values are evaluated numerically from `length` and the exponent.
struct IntervalSurvival {
    PiecewiseLinear length;  // alpha |-> lambda({f >= alpha} ∩ A)
    Rational exponent;
    std::optional<PiecewisePoly> power;

    ExtValue value_at(const Rational& alpha) const;
};

IntervalSurvival survival_interval(const ScenarioInterval& sc);

/// Sorting oracle: Σ (w_j - w_{j-1}) mu({f >= w_j} ∩ A) over the distinct
/// values of f on A. Independent of the partition engine; equals the
/// generalized integral when nu is Lebesgue.
Rational choquet(const std::vector<Rational>& f, const Capacity& mu, SubsetMask A);

/// Pointwise product with the characteristic function of A.
std::vector<Rational> restrict_indicator(const std::vector<Rational>& f, SubsetMask A);

struct GRLOptions {
    bool attach_probe = false;
    EnvelopeOptions probe;
};

/// Full outcome of the generalized decomposition integral.
struct GRLReport {
    bool integrable = false;  // exists and finite
    ExtValue value;
    RLResult rl;
    std::optional<StepFunction> survival_step;
    std::optional<IntervalSurvival> survival_profile;
    bool nu_zero_at_origin_assumed = false;
    bool nu_zero_at_origin_actual = false;
};

GRLReport grl_integrate(const Scenario& sc, const GRLOptions& opts = {});
GRLReport grl_integrate(const ScenarioFinite& sc, const GRLOptions& opts = {});
GRLReport grl_integrate(const ScenarioInterval& sc, const GRLOptions& opts = {});

}  // namespace grl
