#pragma once

#include "grl/rational.hpp"
#include "grl/rng.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace grl {

using SubsetMask = std::uint32_t;

/// Finite ground set with the full power set as sigma-algebra. Subsets are
/// characteristic bit masks over 0..size-1.
struct GroundSpace {
    int size = 0;
    std::vector<std::string> labels;  // empty or exactly `size` distinct names

    GroundSpace() = default;
    explicit GroundSpace(int n, std::vector<std::string> ls = {});

    SubsetMask full_mask() const { return (size >= 32) ? ~SubsetMask(0) : ((SubsetMask(1) << size) - 1); }
    std::size_t subset_count() const { return std::size_t(1) << size; }
    bool operator==(const GroundSpace& o) const { return size == o.size && labels == o.labels; }
};

/// Classification flags of a set function, decided by exhaustive quantifier
/// checks. Additivity and superadditivity quantify over disjoint pairs; the
/// other inequalities over all pairs (superadditivity over arbitrary pairs
/// would force the zero capacity, since B = C gives m(B) >= 2 m(B)).
struct PropertyFlags {
    bool monotone = false;
    bool fuzzy = false;
    bool submodular = false;
    bool additive = false;
    bool subadditive = false;
    bool superadditive = false;
};

/// Witness pairs for every flag that came out false; used by the theorem
/// suite's negative controls to build guaranteed counterexamples.
struct ClassifyWitness {
    std::optional<std::pair<SubsetMask, SubsetMask>> not_monotone;       // B ⊆ C, m(B) > m(C)
    std::optional<std::pair<SubsetMask, SubsetMask>> not_submodular;
    std::optional<std::pair<SubsetMask, SubsetMask>> not_additive;      // disjoint
    std::optional<std::pair<SubsetMask, SubsetMask>> not_subadditive;
    std::optional<std::pair<SubsetMask, SubsetMask>> not_superadditive; // disjoint
};

/// Total non-negative set function on the power set with m(empty) = 0.
class Capacity {
public:
    Capacity() = default;
    Capacity(GroundSpace space, std::vector<Rational> values);

    const GroundSpace& space() const { return space_; }
    int ground_size() const { return space_.size; }

    /// Exact lookup; throws DomainError for masks outside the power set.
    const Rational& at(SubsetMask subset) const;

    const std::vector<Rational>& values() const { return values_; }

    Capacity scaled(const Rational& k) const;
    Capacity plus(const Capacity& other) const;

    bool operator==(const Capacity& o) const { return space_ == o.space_ && values_ == o.values_; }

private:
    GroundSpace space_;
    std::vector<Rational> values_;
};

PropertyFlags classify(const Capacity& c);
PropertyFlags classify(const Capacity& c, ClassifyWitness& witness);

/// Variation sup over finite disjoint families inside `subset`, by exact
/// dynamic programming over submasks. Guarded at ground size 12.
Rational variation(const Capacity& c, SubsetMask subset);

inline constexpr int kVariationMaxGroundSize = 12;

enum class CapacityKind { Monotone, Additive, Submodular, Superadditive, Subadditive, Arbitrary };

std::string to_string(CapacityKind k);
std::optional<CapacityKind> capacity_kind_from_string(const std::string& s);

/// Deterministic generator; the returned capacity's classify() flags include
/// the requested kind. Ground size capped at 8.
Capacity random_capacity(const GroundSpace& space, CapacityKind kind, std::uint64_t seed);
Capacity random_capacity(const GroundSpace& space, CapacityKind kind, Rng& rng);

/// Image capacity E |-> c(phi^{-1}(E)). `phi[s]` is the image point of s.
Capacity pushforward(const Capacity& c, const std::vector<int>& phi, const GroundSpace& target);

/// Preimage mask of E under phi.
SubsetMask preimage_mask(const std::vector<int>& phi, SubsetMask image_set);

}  // namespace grl
