#pragma once

#include "grl/capacity.hpp"
#include "grl/scenario.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace grl::theorems {

/// The sixteen executable results, in source order:
///   T1  dominated bound        value <= variation(nu) * sup u     (finite variation)
///   T2  indicator identity     ∫_A f = ∫_S f·χ_A                  (nu({0}) = 0)
///   T3  hereditary domains     integrable on S => on every A, with the T2 equality
///   T4  null integrand         f = 0 mu-a.e. => ∫ = 0             (fuzzy mu, nu({0}) = 0)
///   T5  a.e.-equal integrands  f = g mu-a.e. => equal integrals   (fuzzy subadditive mu)
///   T6  domain monotonicity    A ⊆ B => ∫_A <= ∫_B                (fuzzy mu)
///   T7  integrand monotonicity f1 <= f2 => ∫ f1 <= ∫ f2           (fuzzy mu)
///   T8  mu monotonicity        mu1 <= mu2 setwise => ∫ <= ∫
///   T9  nu monotonicity        nu1 <= nu2 setwise => ∫ <= ∫
///   T10 homogeneity            ∫ d(a·nu, b·mu) = ab ∫ d(nu, mu)
///   T11 mu additivity          ∫ d(nu, mu1+mu2) = Σ ∫ d(nu, mu_i)
///   T12 nu additivity          ∫ d(nu1+nu2, mu) = Σ ∫ d(nu_i, mu)
///   T13 sup/inf inequality     ∫(f∨g) + ∫(f∧g) <= ∫f + ∫g         (fuzzy submodular mu)
///   T14 disjoint domains       ∫_{A∪B} = ∫_A + ∫_B                (additive mu, A∩B = ∅)
///   T15 superadditivity        ∫(f+g) >= ∫f + ∫g                  (superadditive fuzzy mu)
///   T16 transformation rule    ∫_T g d(nu, mu∘phi⁻¹) = ∫_S g∘phi d(nu, mu)
enum class TheoremId {
    T1, T2, T3, T4, T5, T6, T7, T8, T9, T10, T11, T12, T13, T14, T15, T16
};

inline constexpr int kTheoremCount = 16;

std::string to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(const std::string& s);
const char* describe(TheoremId id);
std::vector<TheoremId> all_theorems();

/// One generated instance: a bundle of components, with only the fields the
/// theorem uses populated. Hypotheses hold by construction; check() verifies
/// them anyway and marks the outcome skipped if generation misbehaved.
struct Instance {
    GroundSpace space;
    Capacity mu;
    std::optional<Capacity> mu2;
    AlphaCapacity nu = AlphaCapacity::lebesgue();
    std::optional<AlphaCapacity> nu2;
    std::vector<Rational> f;
    std::optional<std::vector<Rational>> g;
    SubsetMask A = 0;
    std::optional<SubsetMask> B;
    std::optional<std::vector<int>> phi;
    std::optional<GroundSpace> target;
    std::optional<Rational> scalar_a;
    std::optional<Rational> scalar_b;
};

Instance generate(TheoremId id, std::uint64_t seed);

struct CheckOutcome {
    TheoremId theorem;
    std::uint64_t seed = 0;
    bool hypothesis_satisfied = false;
    bool conclusion_holds = false;  // evaluated only when the hypothesis holds
    std::string witness;            // serialized instance when the conclusion fails
};

CheckOutcome check(TheoremId id, std::uint64_t seed);
CheckOutcome check(TheoremId id, const Instance& inst, std::uint64_t seed);

struct TheoremStats {
    int instances = 0;
    int skipped = 0;
    int passed = 0;
    int failed = 0;
};

/// A hypothesis-dropped rerun that must produce counterexamples.
struct ControlResult {
    std::string name;
    int instances = 0;
    int violations = 0;
    std::string witness;  // first violating instance
};

struct SuiteConfig {
    std::vector<TheoremId> theorems;  // empty means all
    int instances_per_theorem = 200;
    std::uint64_t seed = 42;
    bool negative_controls = true;
};

struct SuiteReport {
    std::vector<std::pair<TheoremId, TheoremStats>> stats;
    std::vector<ControlResult> controls;
    double wall_seconds = 0;

    int total_failed() const;
    bool controls_fired() const;
    bool suite_passed() const { return total_failed() == 0 && controls_fired(); }
};

SuiteReport run_suite(const SuiteConfig& config);

}  // namespace grl::theorems
