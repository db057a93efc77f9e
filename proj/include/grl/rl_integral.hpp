#pragma once

#include "grl/alpha_capacity.hpp"
#include "grl/partition.hpp"
#include "grl/rational.hpp"
#include "grl/step_function.hpp"

#include <optional>
#include <string>

namespace grl {

enum class RLMethod {
    ClosedFormSigmaAdditive,
    ClosedFormDirac,
    ClosedFormVanishingBounded,
    ClosedFormDistortedPGt1,
    ClosedFormDistortedPLt1,
    NonexistentDistortedPLt1,
    Estimated,
};

const char* to_string(RLMethod m);

/// Outcome of deciding the Riemann-Lebesgue integral of a step function.
/// Nonexistence is a result, never an exception; `value` then only carries a
/// diagnostic (+inf when refined sums blow up).
struct RLResult {
    bool exists = false;
    ExtValue value;
    RLMethod method = RLMethod::Estimated;
    std::optional<EnvelopeTrace> trace;
    std::string note;
};

struct RLOptions {
    /// Attach a refinement-envelope run as an independent witness.
    bool attach_probe = false;
    EnvelopeOptions probe;
};

/// Decides existence and value of (RL)∫ u dnu analytically, per family:
///
///   sigma-additive  every refinement of the breakpoint-isolating partition
///                   reproduces  Σ u(b_i) nu({b_i}) + Σ u_i nu((b_{i-1},b_i))
///                   + u_tail nu((b_m,inf))  by countable additivity, so that
///                   sum is the limit (infinite tail mass with a positive
///                   tail value destroys existence).
///   dirac(a)        a partition isolating {a} pins every tag; value u(a).
///   vanishing       a partition of bounded cells only (canonical unit split)
///                   exists and every refinement of it keeps all cells
///                   bounded, so every sum is 0.
///   power p > 1     splitting a cell of length w in half turns w^p into
///                   2(w/2)^p = 2^{1-p} w^p < w^p  ((a+b)^p >= a^p + b^p), so
///                   upper sums shrink geometrically under bisection and 0 is
///                   the only candidate limit; attained iff the tail value is
///                   0. A positive tail makes refined sums of the unbounded
///                   part arbitrarily large instead.
///   power p < 1     the inequality reverses ((a+b)^p <= a^p + b^p): each
///                   bisection multiplies the mass of a cell by 2^{1-p} > 1,
///                   so wherever u is positive on a set of positive length
///                   the lower sums diverge and the integral does not exist.
///                   If u is positive only at finitely many points, isolating
///                   them as singletons (lambda = 0) makes every refined sum
///                   0, which is then the limit.
///   power p = 1     Lebesgue measure; routed to the sigma-additive form.
RLResult rl_integrate(const StepFunction& u, const AlphaCapacity& v, const RLOptions& opts = {});

inline bool rl_integrable_flag(const StepFunction& u, const AlphaCapacity& v) {
    return rl_integrate(u, v).exists;
}

}  // namespace grl
