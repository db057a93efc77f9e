#pragma once

#include "grl/alpha_capacity.hpp"
#include "grl/interval.hpp"
#include "grl/rational.hpp"
#include "grl/step_function.hpp"

#include <vector>

namespace grl {

/// Interval partition of [0, inf): ordered pairwise-disjoint cells covering
/// the half-line, the last one unbounded. Countable partitions enter through
/// `split_tail`, which reads the tail cell as its canonical decomposition
/// into unit-length half-open cells; integrands here are step functions that
/// are constant past their last breakpoint, so this loses nothing.
struct AlphaPartition {
    std::vector<Interval> cells;
    bool split_tail = false;

    static AlphaPartition trivial();
    /// [0,c1), [c1,c2), ..., [ck, inf).
    static AlphaPartition half_open(std::vector<Rational> cuts);
    /// Isolating points as singletons: {0}, (0,p1), {p1}, ..., {pk}, (pk, inf).
    /// 0 is always isolated.
    static AlphaPartition isolating(std::vector<Rational> points);

    void validate() const;
    const Interval& tail() const { return cells.back(); }
};

/// Partition whose singleton cells isolate 0 and every breakpoint of u; u is
/// constant on each cell.
AlphaPartition breakpoint_partition(const StepFunction& u);

/// True iff every cell of `finer` lies inside some cell of `coarser`.
bool is_finer(const AlphaPartition& finer, const AlphaPartition& coarser);

/// All nonempty pairwise intersections; finer than both inputs.
AlphaPartition common_refinement(const AlphaPartition& a, const AlphaPartition& b);

/// Splits every bounded non-singleton cell at its midpoint.
AlphaPartition bisect_bounded(const AlphaPartition& p);

struct TaggedPartition {
    AlphaPartition partition;
    std::vector<Rational> tags;  // one per cell, tag ∈ cell

    void validate() const;
    /// Default tags: the point itself for singletons, a midpoint for bounded
    /// cells, lo+1 for the tail.
    static TaggedPartition with_default_tags(AlphaPartition p);
};

/// The Riemann-Lebesgue sum  Σ u(tag) * nu(cell)  with 0 * inf = 0. Returns
/// +inf (a value, not an error) when some positively-weighted cell has
/// infinite mass. With split_tail set, u must be constant on the tail cell.
ExtValue tagged_sum(const StepFunction& u, const AlphaCapacity& v, const TaggedPartition& tp);

struct EnvelopeOptions {
    int max_depth = 48;  // deep enough for 2^{d/2} lower sums to cross the bound
    double tolerance = 1e-6;
    double divergence_bound = 1e6;
};

enum class EnvelopeVerdict { Converged, Diverged, Inconclusive };

struct EnvelopeLevel {
    int depth;
    ExtValue lower;  // inf over tag choices
    ExtValue upper;  // sup over tag choices
};

struct EnvelopeTrace {
    std::vector<EnvelopeLevel> levels;
    EnvelopeVerdict verdict = EnvelopeVerdict::Inconclusive;
    ExtValue value;  // meaningful when Converged (exact when the sums are)
};

/// Empirical existence probe: align `start` with u's breakpoints, then
/// bisect every bounded cell per depth, recording lower/upper tagged sums.
/// Masses per depth come from per-family closed forms, so deep levels cost
/// the same as shallow ones.
EnvelopeTrace refinement_envelopes(const StepFunction& u, const AlphaCapacity& v,
                                   const AlphaPartition& start, const EnvelopeOptions& opts = {});

const char* to_string(EnvelopeVerdict v);

}  // namespace grl
