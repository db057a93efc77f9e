#include "grl/partition.hpp"

#include <algorithm>
#include <cmath>

namespace grl {

AlphaPartition AlphaPartition::trivial() {
    AlphaPartition p;
    p.cells.push_back(Interval::tail(Rational(0), false));
    return p;
}

AlphaPartition AlphaPartition::half_open(std::vector<Rational> cuts) {
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    AlphaPartition p;
    Rational prev(0);
    for (const auto& c : cuts) {
        if (c <= 0) continue;
        p.cells.push_back(Interval::make(prev, c, false, true));
        prev = c;
    }
    p.cells.push_back(Interval::tail(prev, false));
    p.validate();
    return p;
}

AlphaPartition AlphaPartition::isolating(std::vector<Rational> points) {
    points.push_back(Rational(0));
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.front() < 0) throw DomainError("isolating: points below 0");
    AlphaPartition p;
    for (std::size_t i = 0; i < points.size(); ++i) {
        p.cells.push_back(Interval::point(points[i]));
        if (i + 1 < points.size()) p.cells.push_back(Interval::open(points[i], points[i + 1]));
    }
    p.cells.push_back(Interval::tail(points.back(), true));
    p.validate();
    return p;
}

void AlphaPartition::validate() const {
    if (cells.empty()) throw DomainError("partition with no cells");
    const Interval& first = cells.front();
    if (first.lo != 0 || first.lo_open) throw DomainError("partition must start closed at 0");
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
        const Interval& cur = cells[i];
        const Interval& nxt = cells[i + 1];
        if (cur.unbounded) throw DomainError("only the last cell may be unbounded");
        if (cur.hi != nxt.lo || cur.hi_open == nxt.lo_open)
            throw DomainError("cells must tile [0, inf) without gaps or overlaps");
        cur.validate();
    }
    if (!cells.back().unbounded) throw DomainError("last cell must be unbounded");
}

AlphaPartition breakpoint_partition(const StepFunction& u) {
    return AlphaPartition::isolating(u.breakpoints());
}

namespace {

/// Interior anchor identifying the unique cell of a covering partition that
/// contains `c`.
Rational anchor(const Interval& c) {
    if (!c.lo_open) return c.lo;
    if (c.unbounded) return c.lo + 1;
    return (c.lo + c.hi) / 2;
}

/// Does a end strictly before b?
bool ends_before(const Interval& a, const Interval& b) {
    if (a.unbounded) return false;
    if (b.unbounded) return true;
    if (a.hi != b.hi) return a.hi < b.hi;
    return a.hi_open && !b.hi_open;
}

bool ends_equal(const Interval& a, const Interval& b) {
    if (a.unbounded || b.unbounded) return a.unbounded && b.unbounded;
    return a.hi == b.hi && a.hi_open == b.hi_open;
}

}  // namespace

bool is_finer(const AlphaPartition& finer, const AlphaPartition& coarser) {
    std::size_t j = 0;
    for (const Interval& cell : finer.cells) {
        Rational a = anchor(cell);
        while (j < coarser.cells.size() && !coarser.cells[j].contains(a)) ++j;
        if (j >= coarser.cells.size()) return false;
        if (!cell.subset_of(coarser.cells[j])) return false;
    }
    return true;
}

AlphaPartition common_refinement(const AlphaPartition& a, const AlphaPartition& b) {
    AlphaPartition out;
    out.split_tail = a.split_tail || b.split_tail;
    std::size_t i = 0, j = 0;
    while (i < a.cells.size() && j < b.cells.size()) {
        if (auto cap = a.cells[i].intersect(b.cells[j])) out.cells.push_back(*cap);
        if (ends_equal(a.cells[i], b.cells[j])) {
            ++i;
            ++j;
        } else if (ends_before(a.cells[i], b.cells[j])) {
            ++i;
        } else {
            ++j;
        }
    }
    out.validate();
    return out;
}

AlphaPartition bisect_bounded(const AlphaPartition& p) {
    AlphaPartition out;
    out.split_tail = p.split_tail;
    for (const Interval& c : p.cells) {
        if (c.unbounded || c.is_point()) {
            out.cells.push_back(c);
            continue;
        }
        Rational mid = (c.lo + c.hi) / 2;
        out.cells.push_back(Interval::make(c.lo, mid, c.lo_open, true));
        out.cells.push_back(Interval::make(mid, c.hi, false, c.hi_open));
    }
    out.validate();
    return out;
}

void TaggedPartition::validate() const {
    partition.validate();
    if (tags.size() != partition.cells.size())
        throw DomainError("tagged partition: one tag per cell required");
    for (std::size_t i = 0; i < tags.size(); ++i)
        if (!partition.cells[i].contains(tags[i]))
            throw DomainError("tagged partition: tag outside its cell");
}

TaggedPartition TaggedPartition::with_default_tags(AlphaPartition p) {
    TaggedPartition tp;
    tp.tags.reserve(p.cells.size());
    for (const Interval& c : p.cells) tp.tags.push_back(anchor(c));
    tp.partition = std::move(p);
    tp.validate();
    return tp;
}

ExtValue tagged_sum(const StepFunction& u, const AlphaCapacity& v, const TaggedPartition& tp) {
    tp.validate();
    ExtValue acc = ExtValue::exact(Rational(0));
    const std::size_t n = tp.partition.cells.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Interval& cell = tp.partition.cells[i];
        Rational weight = u(tp.tags[i]);
        ExtValue m;
        if (cell.unbounded && tp.partition.split_tail) {
            auto [lo, hi] = u.range_on(cell);
            if (lo != hi)
                throw DomainError("tagged_sum: split tail requires u constant on the tail cell");
            m = v.mass_split_tail(cell);
        } else {
            m = v.mass(cell);
        }
        acc += m.scaled(weight);
        if (acc.is_infinite()) return acc;
    }
    return acc;
}

const char* to_string(EnvelopeVerdict v) {
    switch (v) {
        case EnvelopeVerdict::Converged: return "converged";
        case EnvelopeVerdict::Diverged: return "diverged";
        case EnvelopeVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Mass of one aligned cell after d rounds of global bisection, summed over
/// its 2^d fragments. Only the power distortion depends on d: a bounded cell
/// of length w contributes 2^d * (w / 2^d)^p = w^p * 2^{d(1-p)}.
ExtValue mass_at_depth(const AlphaCapacity& v, const Interval& cell, bool split_tail, int depth) {
    if (v.kind() != AlphaCapacity::Kind::DistortedPower) {
        // sigma-additive masses are additive over fragments; a Dirac atom
        // lands in exactly one fragment; vanishing-on-bounded sees only
        // bounded fragments except for an unsplit tail
        return (cell.unbounded && split_tail) ? v.mass_split_tail(cell) : v.mass(cell);
    }
    if (cell.unbounded) return ExtValue::infinity();  // split or not
    if (cell.is_point()) return ExtValue::exact(Rational(0));
    const Rational w = cell.hi - cell.lo;
    const Rational& p = v.exponent();
    if (is_integer(p)) {
        long pi = numerator(p).convert_to<long>();
        long e = static_cast<long>(depth) * (1 - pi);
        return ExtValue::exact(pow_int(w, pi) * pow_int(Rational(2), e));
    }
    double pd = to_double(p);
    double val = std::pow(to_double(w), pd) * std::exp2(depth * (1.0 - pd));
    return ExtValue::approx(val, std::abs(val) * 1e-12);
}

bool close(double a, double b, double tol) { return std::abs(a - b) < tol; }

}  // namespace

EnvelopeTrace refinement_envelopes(const StepFunction& u, const AlphaCapacity& v,
                                   const AlphaPartition& start, const EnvelopeOptions& opts) {
    if (opts.max_depth < 1) throw DomainError("refinement_envelopes: max_depth must be >= 1");
    AlphaPartition aligned = common_refinement(start, breakpoint_partition(u));

    struct CellData {
        Interval cell;
        Rational umin, umax;
    };
    std::vector<CellData> cells;
    cells.reserve(aligned.cells.size());
    for (const Interval& c : aligned.cells) {
        auto [lo, hi] = u.range_on(c);
        cells.push_back({c, lo, hi});
    }

    EnvelopeTrace trace;
    for (int depth = 0; depth <= opts.max_depth; ++depth) {
        ExtValue lower = ExtValue::exact(Rational(0));
        ExtValue upper = ExtValue::exact(Rational(0));
        for (const CellData& cd : cells) {
            ExtValue m = mass_at_depth(v, cd.cell, aligned.split_tail, depth);
            lower += m.scaled(cd.umin);
            upper += m.scaled(cd.umax);
        }
        trace.levels.push_back({depth, lower, upper});

        if (lower.is_infinite()) {
            trace.verdict = EnvelopeVerdict::Diverged;
            trace.value = ExtValue::infinity();
            return trace;
        }
        if (depth == 0) continue;
        const EnvelopeLevel& prev = trace.levels[trace.levels.size() - 2];

        // exact stabilization: both envelopes equal across two depths
        if (lower == upper && prev.lower == lower && prev.upper == upper) {
            trace.verdict = EnvelopeVerdict::Converged;
            trace.value = lower;
            return trace;
        }
        double lo_d = lower.to_double(), up_d = upper.to_double();
        double plo = prev.lower.to_double(), pup = prev.upper.to_double();
        if (std::isfinite(up_d) && std::isfinite(pup) && close(lo_d, up_d, opts.tolerance) &&
            close(plo, pup, opts.tolerance) && close(lo_d, plo, opts.tolerance) &&
            close(up_d, pup, opts.tolerance)) {
            trace.verdict = EnvelopeVerdict::Converged;
            double mid = (lo_d + up_d) / 2;
            trace.value = ExtValue::approx(mid, std::abs(up_d - lo_d) / 2 + opts.tolerance);
            return trace;
        }
        if (lo_d > opts.divergence_bound && lo_d >= plo) {
            trace.verdict = EnvelopeVerdict::Diverged;
            trace.value = ExtValue::infinity();
            return trace;
        }
    }
    trace.verdict = EnvelopeVerdict::Inconclusive;
    return trace;
}

}  // namespace grl
