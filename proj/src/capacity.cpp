#include "grl/capacity.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace grl {

GroundSpace::GroundSpace(int n, std::vector<std::string> ls) : size(n), labels(std::move(ls)) {
    if (n < 1) throw DomainError("ground space needs at least one point");
    if (n > 16) throw DomainError("ground space capped at 16 points");
    if (!labels.empty()) {
        if (static_cast<int>(labels.size()) != n)
            throw DomainError("label count does not match ground size");
        std::set<std::string> uniq(labels.begin(), labels.end());
        if (static_cast<int>(uniq.size()) != n) throw DomainError("labels must be distinct");
    }
}

Capacity::Capacity(GroundSpace space, std::vector<Rational> values)
    : space_(std::move(space)), values_(std::move(values)) {
    if (values_.size() != space_.subset_count())
        throw DomainError("capacity map must be total over the power set");
    if (values_[0] != 0) throw DomainError("capacity must vanish on the empty set");
    for (const Rational& v : values_)
        if (v < 0) throw DomainError("capacity values must be non-negative");
}

const Rational& Capacity::at(SubsetMask subset) const {
    if (subset >= values_.size()) throw DomainError("subset index out of range");
    return values_[subset];
}

Capacity Capacity::scaled(const Rational& k) const {
    if (k < 0) throw DomainError("capacity scale must be non-negative");
    std::vector<Rational> vs(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) vs[i] = values_[i] * k;
    return Capacity(space_, std::move(vs));
}

Capacity Capacity::plus(const Capacity& other) const {
    if (!(space_ == other.space_)) throw DomainError("capacity sum needs a common ground space");
    std::vector<Rational> vs(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) vs[i] = values_[i] + other.values_[i];
    return Capacity(space_, std::move(vs));
}

PropertyFlags classify(const Capacity& c) {
    ClassifyWitness w;
    return classify(c, w);
}

PropertyFlags classify(const Capacity& c, ClassifyWitness& witness) {
    const auto& m = c.values();
    const SubsetMask full = c.space().full_mask();
    PropertyFlags flags;
    flags.monotone = true;
    flags.submodular = true;
    flags.additive = true;
    flags.subadditive = true;
    flags.superadditive = true;

    // monotone: enumerate C and its submasks B
    for (SubsetMask cm = 0; cm <= full && flags.monotone; ++cm) {
        for (SubsetMask b = cm; b > 0; b = (b - 1) & cm) {
            if (m[b] > m[cm]) {
                flags.monotone = false;
                witness.not_monotone = {b, cm};
                break;
            }
        }
    }
    flags.fuzzy = flags.monotone;  // m(empty) = 0 holds by construction

    for (SubsetMask b = 0; b <= full; ++b) {
        for (SubsetMask cm = 0; cm <= full; ++cm) {
            const Rational lhs_union = m[b | cm];
            if (flags.submodular && lhs_union + m[b & cm] > m[b] + m[cm]) {
                flags.submodular = false;
                witness.not_submodular = {b, cm};
            }
            if (flags.subadditive && lhs_union > m[b] + m[cm]) {
                flags.subadditive = false;
                witness.not_subadditive = {b, cm};
            }
            if ((b & cm) == 0) {
                if (flags.additive && lhs_union != m[b] + m[cm]) {
                    flags.additive = false;
                    witness.not_additive = {b, cm};
                }
                if (flags.superadditive && lhs_union < m[b] + m[cm]) {
                    flags.superadditive = false;
                    witness.not_superadditive = {b, cm};
                }
            }
            if (!flags.submodular && !flags.subadditive && !flags.additive && !flags.superadditive)
                break;
        }
    }
    return flags;
}

Rational variation(const Capacity& c, SubsetMask subset) {
    if (c.ground_size() > kVariationMaxGroundSize)
        throw DomainError("variation: ground size exceeds the enumeration guard (12)");
    if (subset > c.space().full_mask()) throw DomainError("subset index out of range");

    // best[B] = sup over disjoint families inside B. Recurrence fixes the
    // lowest bit of B: either no family member contains it, or one member C
    // does, and the rest of the family lives in B \ C.
    std::vector<Rational> best(std::size_t(subset) + 1, Rational(0));
    const auto& m = c.values();
    for (SubsetMask b = 1; b <= subset; ++b) {
        if ((b & subset) != b) continue;  // only submasks of `subset` are needed
        SubsetMask low = b & (~b + 1);
        Rational acc = best[b ^ low];
        SubsetMask rest = b ^ low;
        // C ranges over all subsets of b containing `low`
        SubsetMask sub = rest;
        while (true) {
            SubsetMask cm = sub | low;
            Rational cand = m[cm] + best[b ^ cm];
            if (cand > acc) acc = cand;
            if (sub == 0) break;
            sub = (sub - 1) & rest;
        }
        best[b] = std::move(acc);
    }
    return best[subset];
}

std::string to_string(CapacityKind k) {
    switch (k) {
        case CapacityKind::Monotone: return "monotone";
        case CapacityKind::Additive: return "additive";
        case CapacityKind::Submodular: return "submodular";
        case CapacityKind::Superadditive: return "superadditive";
        case CapacityKind::Subadditive: return "subadditive";
        case CapacityKind::Arbitrary: return "arbitrary";
    }
    return "?";
}

std::optional<CapacityKind> capacity_kind_from_string(const std::string& s) {
    if (s == "monotone") return CapacityKind::Monotone;
    if (s == "additive") return CapacityKind::Additive;
    if (s == "submodular") return CapacityKind::Submodular;
    if (s == "superadditive") return CapacityKind::Superadditive;
    if (s == "subadditive") return CapacityKind::Subadditive;
    if (s == "arbitrary") return CapacityKind::Arbitrary;
    return std::nullopt;
}

namespace {

std::vector<Rational> additive_from_masses(const GroundSpace& space, const std::vector<Rational>& mass) {
    std::vector<Rational> vs(space.subset_count(), Rational(0));
    for (SubsetMask b = 1; b <= space.full_mask(); ++b) {
        Rational acc(0);
        for (int i = 0; i < space.size; ++i)
            if (b & (SubsetMask(1) << i)) acc += mass[i];
        vs[b] = std::move(acc);
    }
    return vs;
}

bool has_kind(const PropertyFlags& f, CapacityKind kind) {
    switch (kind) {
        case CapacityKind::Monotone: return f.monotone;
        case CapacityKind::Additive: return f.additive;
        case CapacityKind::Submodular: return f.submodular && f.fuzzy;
        case CapacityKind::Superadditive: return f.superadditive && f.fuzzy;
        case CapacityKind::Subadditive: return f.subadditive;
        case CapacityKind::Arbitrary: return true;
    }
    return false;
}

Capacity draw_capacity(const GroundSpace& space, CapacityKind kind, Rng& rng) {
    const std::size_t count = space.subset_count();
    switch (kind) {
        case CapacityKind::Arbitrary: {
            std::vector<Rational> vs(count, Rational(0));
            for (std::size_t b = 1; b < count; ++b) vs[b] = rng.rational(10, 6);
            return Capacity(space, std::move(vs));
        }
        case CapacityKind::Monotone: {
            // upward max-closure of a raw draw
            std::vector<Rational> vs(count, Rational(0));
            for (std::size_t b = 1; b < count; ++b) vs[b] = rng.rational(10, 6);
            for (SubsetMask b = 1; b < count; ++b)
                for (int i = 0; i < space.size; ++i)
                    if (b & (SubsetMask(1) << i)) vs[b] = std::max(vs[b], vs[b ^ (SubsetMask(1) << i)]);
            return Capacity(space, std::move(vs));
        }
        case CapacityKind::Additive: {
            std::vector<Rational> mass(space.size);
            for (auto& m : mass) m = rng.rational(8, 6);
            return Capacity(space, additive_from_masses(space, mass));
        }
        case CapacityKind::Superadditive: {
            // convex distortion h(t) = a t^2 + b t of an additive base;
            // h(0) = 0 and convexity give superadditivity on disjoint pairs
            std::vector<Rational> mass(space.size);
            for (auto& m : mass) m = rng.rational(4, 4);
            Rational a = rng.positive_rational(3, 4);
            Rational b = rng.rational(2, 4);
            auto vs = additive_from_masses(space, mass);
            for (auto& v : vs) v = a * v * v + b * v;
            return Capacity(space, std::move(vs));
        }
        case CapacityKind::Submodular: {
            // concave piecewise-linear distortion h = min of increasing lines
            std::vector<Rational> mass(space.size);
            for (auto& m : mass) m = rng.rational(4, 4);
            Rational s1 = rng.positive_rational(6, 3);
            Rational s2 = s1 / rng.uniform(2, 5);
            Rational d2 = rng.positive_rational(4, 3);
            auto vs = additive_from_masses(space, mass);
            for (auto& v : vs) v = std::min(s1 * v, s2 * v + d2);
            return Capacity(space, std::move(vs));
        }
        case CapacityKind::Subadditive: {
            // min-closure over covers E = B ∪ C with proper B, C
            std::vector<Rational> vs(count, Rational(0));
            for (std::size_t b = 1; b < count; ++b) vs[b] = rng.rational(10, 4) + Rational(1, 4);
            std::vector<SubsetMask> order(count);
            for (std::size_t i = 0; i < count; ++i) order[i] = static_cast<SubsetMask>(i);
            std::sort(order.begin(), order.end(), [](SubsetMask x, SubsetMask y) {
                return std::popcount(x) < std::popcount(y);
            });
            for (SubsetMask e : order) {
                if (std::popcount(e) < 2) continue;
                for (SubsetMask b = (e - 1) & e; b > 0; b = (b - 1) & e) {
                    SubsetMask rest = e ^ b;  // smallest partner; any C ⊇ rest with C ⊊ e works
                    for (SubsetMask extra = b & ~rest;; extra = (extra - 1) & (b & ~rest)) {
                        SubsetMask cm = rest | extra;
                        if (cm != e) vs[e] = std::min(vs[e], vs[b] + vs[cm]);
                        if (extra == 0) break;
                    }
                }
            }
            return Capacity(space, std::move(vs));
        }
    }
    throw DomainError("unreachable capacity kind");
}

}  // namespace

Capacity random_capacity(const GroundSpace& space, CapacityKind kind, Rng& rng) {
    if (space.size > 8) throw DomainError("random_capacity: ground size capped at 8");
    for (int attempt = 0; attempt < 32; ++attempt) {
        Capacity c = draw_capacity(space, kind, rng);
        if (has_kind(classify(c), kind)) return c;
    }
    throw GenerationError("random_capacity: kind '" + to_string(kind) + "' unreachable after 32 attempts");
}

Capacity random_capacity(const GroundSpace& space, CapacityKind kind, std::uint64_t seed) {
    Rng rng(seed);
    return random_capacity(space, kind, rng);
}

SubsetMask preimage_mask(const std::vector<int>& phi, SubsetMask image_set) {
    SubsetMask pre = 0;
    for (std::size_t s = 0; s < phi.size(); ++s)
        if (image_set & (SubsetMask(1) << phi[s])) pre |= SubsetMask(1) << s;
    return pre;
}

Capacity pushforward(const Capacity& c, const std::vector<int>& phi, const GroundSpace& target) {
    if (phi.size() != static_cast<std::size_t>(c.ground_size()))
        throw DomainError("pushforward: phi must be total on the source space");
    for (int t : phi)
        if (t < 0 || t >= target.size) throw DomainError("pushforward: phi image out of range");
    std::vector<Rational> vs(target.subset_count());
    for (SubsetMask e = 0; e < vs.size(); ++e) vs[e] = c.at(preimage_mask(phi, e));
    return Capacity(target, std::move(vs));
}

}  // namespace grl
