#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kdp/digraph.hpp"
#include "kdp/error.hpp"
#include "kdp/pareto.hpp"
#include "kdp/rails.hpp"
#include "kdp/tracker.hpp"

namespace kdp {

/// Window size m and confusion bound c for which every key linkage of a
/// d-path-dominant instance is traced by some tracker path.
struct RailParameters {
    int m;
    int c;
};

inline RailParameters default_rail_parameters(std::size_t k, int d) {
    if (k == 0) return {1, 0};
    const long long kk = static_cast<long long>(k);
    const long long base = (kk - 1) * d + kk * kk + 2;
    return {static_cast<int>(base * d + 1), static_cast<int>(base * (2 * kk + 1) * kk * kk)};
}

/// Exponent t = 6k^2 d (k + d) + 13k of the worst-case running time bound.
inline long long running_time_exponent(std::size_t k, int d) {
    const long long kk = static_cast<long long>(k);
    return 6 * kk * kk * d * (kk + d) + 13 * kk;
}

struct SolverParams {
    std::optional<int> m;  ///< overrides the default window
    std::optional<int> c;  ///< overrides the default confusion bound
    bool check_dominance = true;
    bool emit_witness = false;
    bool keep_tracker = false;
    RailLimits limits;

    bool overridden() const noexcept { return m.has_value() || c.has_value(); }
};

struct SolveResult {
    ParetoSet key_qualities;
    std::map<QualityVector, Linkage> witnesses;
    /// (m, c) differ from the defaults: every vector is a quality, but some
    /// key qualities may be missing.
    bool heuristic = false;
    /// The d-path-dominance check was waived: sound, completeness unknown.
    bool sound_only = false;
    int m = 0;
    int c = 0;
    std::size_t rail_count = 0;
    std::size_t tracker_edges = 0;
    std::size_t pareto_rounds = 0;
    std::optional<Tracker> tracker;
};

/// All key qualities of the instance via rails, the tracker and the vector
/// shortest-path search. Every output vector is re-derived as a concrete
/// linkage and checked, whatever (m, c) are.
inline SolveResult key_qualities(const ProblemInstance& inst, const SolverParams& params = {}) {
    SolveResult res;
    res.heuristic = params.overridden();
    res.sound_only = !params.check_dominance;
    if (params.check_dominance && !is_d_path_dominant(inst.graph(), inst.d()))
        throw PreconditionError("graph is not " + std::to_string(inst.d()) + "-path-dominant");

    if (inst.k() == 0) {
        res.key_qualities = minimal_set({QualityVector{}});
        if (params.emit_witness) res.witnesses.emplace(QualityVector{}, Linkage{});
        return res;
    }

    const RailParameters defaults = default_rail_parameters(inst.k(), inst.d());
    res.m = params.m.value_or(defaults.m);
    res.c = params.c.value_or(defaults.c);
    Tracker tracker = build_tracker(inst, res.m, res.c, params.limits);
    res.rail_count = tracker.rails.size();
    res.tracker_edges = tracker.graph.edge_count();

    ParetoSearch search(tracker.graph, static_cast<long long>(inst.vertex_count()));
    search.run();
    res.pareto_rounds = search.rounds();
    res.key_qualities = search.frontier();
    if (!res.key_qualities.is_antichain()) throw InvariantViolation("output is not an antichain");

    for (const auto& q : res.key_qualities) {
        const auto route = search.witness(q);
        Linkage l = trace_path(inst, tracker, route);
        if (l.quality() != q)
            throw InvariantViolation("witness realizes (" + l.quality().to_string() + "), expected (" +
                                     q.to_string() + ")");
        if (params.emit_witness) res.witnesses.emplace(q, std::move(l));
    }
    if (params.keep_tracker) res.tracker = std::move(tracker);
    return res;
}

/// Some linkage for the instance exists.
inline bool has_linkage(const ProblemInstance& inst, const SolverParams& params = {}) {
    return !key_qualities(inst, params).key_qualities.empty();
}

/// Some linkage with |V(P_i)| <= bounds_i for every i exists. A quality within
/// the bounds is always dominated by a key quality within the bounds.
inline bool has_bounded_linkage(const ProblemInstance& inst, const SolverParams& params,
                                const std::vector<int>& bounds) {
    if (bounds.size() != inst.k()) throw InvalidInput("expected one bound per terminal pair");
    for (int b : bounds)
        if (b < 1) throw InvalidInput("bounds must be positive");
    const QualityVector limit(bounds);
    const auto res = key_qualities(inst, params);
    return std::any_of(res.key_qualities.begin(), res.key_qualities.end(),
                       [&](const QualityVector& q) { return dominated(q, limit); });
}

}  // namespace kdp
