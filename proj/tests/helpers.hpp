#pragma once

#include "grl/capacity.hpp"
#include "grl/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace grl::test {

inline Rational q(const std::string& s) { return parse_rational(s); }

/// Capacity from per-subset values listed in mask order (index = bitmask).
inline Capacity cap(int n, std::initializer_list<std::string> values) {
    GroundSpace space(n);
    std::vector<Rational> vs;
    for (const auto& s : values) vs.push_back(q(s));
    return Capacity(space, std::move(vs));
}

inline std::vector<Rational> vec(std::initializer_list<std::string> values) {
    std::vector<Rational> vs;
    for (const auto& s : values) vs.push_back(q(s));
    return vs;
}

/// Brute-force variation: recurse over all families of pairwise disjoint
/// nonempty subsets of `subset`. Exponential; fine for the tiny spaces the
/// tests use, and independent of the submask DP in the library.
inline Rational variation_brute(const Capacity& c, SubsetMask subset) {
    Rational best(0);
    std::vector<SubsetMask> family;
    auto rec = [&](auto&& self, SubsetMask remaining, const Rational& sum) -> void {
        if (sum > best) best = sum;
        if (remaining == 0) return;
        SubsetMask low = remaining & (~remaining + 1);
        // families not using `low`
        self(self, remaining ^ low, sum);
        // families whose next member contains `low`
        SubsetMask rest = remaining ^ low;
        for (SubsetMask sub = rest;; sub = (sub - 1) & rest) {
            SubsetMask member = sub | low;
            self(self, remaining & ~member, sum + c.at(member));
            if (sub == 0) break;
        }
    };
    rec(rec, subset, Rational(0));
    return best;
}

}  // namespace grl::test
