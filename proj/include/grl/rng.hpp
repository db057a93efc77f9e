#pragma once

#include "grl/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace grl {

/// Seeded generator with distribution helpers that avoid std::uniform_*
/// distributions, whose outputs are not pinned by the standard. Everything
/// here is a pure function of the seed stream, so identical seeds give
/// identical instances on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform in [lo, hi], inclusive. Modulo bias is irrelevant at test scales.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        if (hi < lo) throw DomainError("Rng::uniform: empty range");
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    bool coin() { return (next() & 1) != 0; }

    /// Non-negative rational with numerator <= max_num and denominator <= max_den.
    Rational rational(std::int64_t max_num = 12, std::int64_t max_den = 8) {
        return Rational(uniform(0, max_num), uniform(1, max_den));
    }

    /// Strictly positive rational.
    Rational positive_rational(std::int64_t max_num = 12, std::int64_t max_den = 8) {
        return Rational(uniform(1, max_num), uniform(1, max_den));
    }

    template <typename T>
    const T& pick(const std::vector<T>& xs) {
        if (xs.empty()) throw DomainError("Rng::pick: empty");
        return xs[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(xs.size()) - 1))];
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace grl
