#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "kdp/error.hpp"
#include "kdp/pareto.hpp"
#include "kdp/rails.hpp"

namespace kdp {

/// Auxiliary digraph over all (k,m,c)-rails plus s0 and t0. Vertex 0 is s0,
/// rail i is vertex i + 1 and t0 is the last vertex. Edge weights count the
/// vertices each step adds to the traced linkage.
struct Tracker {
    int m = 0;
    int c = 0;
    std::vector<Rail> rails;
    WeightedDigraph graph;

    Vertex s0() const noexcept { return 0; }
    Vertex t0() const noexcept { return static_cast<Vertex>(rails.size() + 1); }
    static Vertex vertex_of_rail(std::size_t id) noexcept { return static_cast<Vertex>(id + 1); }
    bool is_rail_vertex(Vertex v) const noexcept { return v >= 1 && v <= rails.size(); }
    const Rail& rail_at(Vertex v) const { return rails.at(v - 1); }
};

namespace detail {

inline bool starts_at_sources(const ProblemInstance& inst, const Rail& r) {
    for (std::size_t j = 0; j < r.k(); ++j)
        if (r.member(j).source() != inst.source(j)) return false;
    return true;
}

inline bool ends_at_targets(const ProblemInstance& inst, const Rail& r) {
    for (std::size_t j = 0; j < r.k(); ++j)
        if (r.member(j).target() != inst.target(j)) return false;
    return true;
}

}  // namespace detail

/// Builds the tracker from an explicit rail list (normally enumerate_rails()).
inline Tracker build_tracker_from_rails(const ProblemInstance& inst, std::vector<Rail> rails, int m,
                                        int c) {
    Tracker t;
    t.m = m;
    t.c = c;
    t.rails = std::move(rails);
    const std::size_t k = inst.k();
    const std::size_t count = t.rails.size();
    t.graph = WeightedDigraph(count + 2, k, t.s0(), t.t0());

    std::vector<int> w(k);
    for (std::size_t id = 0; id < count; ++id) {
        const Rail& r = t.rails[id];
        if (!detail::starts_at_sources(inst, r)) continue;
        for (std::size_t j = 0; j < k; ++j) w[j] = static_cast<int>(r.member(j).size());
        t.graph.add_edge(t.s0(), Tracker::vertex_of_rail(id), w);
    }

    const std::vector<int> zero(k, 0);
    for (std::size_t a = 0; a < count; ++a) {
        const Rail& from = t.rails[a];
        for (std::size_t b = 0; b < count; ++b) {
            if (a == b) continue;
            const Rail& to = t.rails[b];
            if (!detail::arrow_unchecked(from, to)) continue;
            for (std::size_t j = 0; j < k; ++j)
                w[j] = popcount(to.member_mask(j) & ~from.member_mask(j));
            t.graph.add_edge(Tracker::vertex_of_rail(a), Tracker::vertex_of_rail(b), w);
        }
        if (detail::ends_at_targets(inst, from))
            t.graph.add_edge(Tracker::vertex_of_rail(a), t.t0(), zero);
    }
    return t;
}

inline Tracker build_tracker(const ProblemInstance& inst, int m, int c, const RailLimits& limits = {}) {
    return build_tracker_from_rails(inst, enumerate_rails(inst, m, c, limits), m, c);
}

/// Union of the given paths as a graph, if it is a single path from `from`
/// to `to`.
inline std::optional<Path> path_union(std::span<const Path> parts, Vertex from, Vertex to) {
    std::set<Vertex> vs;
    std::set<std::pair<Vertex, Vertex>> es;
    for (const Path& p : parts) {
        vs.insert(p.begin(), p.end());
        for (std::size_t i = 1; i < p.size(); ++i) es.emplace(p[i - 1], p[i]);
    }
    std::map<Vertex, Vertex> succ;
    std::map<Vertex, int> indeg;
    for (auto [u, v] : es) {
        if (succ.contains(u)) return std::nullopt;
        succ[u] = v;
        if (++indeg[v] > 1) return std::nullopt;
    }
    if (!vs.contains(from) || indeg.contains(from)) return std::nullopt;
    Path out;
    Vertex cur = from;
    out.vertices.push_back(cur);
    while (succ.contains(cur)) {
        cur = succ[cur];
        out.vertices.push_back(cur);
        if (out.size() > vs.size()) return std::nullopt;
    }
    if (out.size() != vs.size() || cur != to) return std::nullopt;
    return out;
}

/// Linkage traced by a tracker path s0, r_1, ..., r_n, t0: member j is the
/// union of the j-th members of the rails along the path. A traced linkage is
/// always a linkage for the instance; failure to be one is reported as an
/// invariant violation.
inline Linkage trace_path(const ProblemInstance& inst, const Tracker& t, std::span<const Vertex> p) {
    if (p.size() < 3) throw InvalidInput("tracker path needs at least one rail");
    if (p.front() != t.s0() || p.back() != t.t0()) throw InvalidInput("tracker path must run s0 -> t0");
    std::set<Vertex> seen;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!seen.insert(p[i]).second) throw InvalidInput("tracker path repeats a vertex");
        if (i > 0 && i + 1 < p.size() && !t.is_rail_vertex(p[i]))
            throw InvalidInput("interior tracker vertex is not a rail");
        if (i > 0 && !t.graph.has_edge(p[i - 1], p[i]))
            throw InvalidInput("consecutive tracker vertices are not joined by an edge");
    }
    Linkage out;
    for (std::size_t j = 0; j < inst.k(); ++j) {
        std::vector<Path> parts;
        for (std::size_t i = 1; i + 1 < p.size(); ++i) parts.push_back(t.rail_at(p[i]).member(j));
        auto joined = path_union(parts, inst.source(j), inst.target(j));
        if (!joined)
            throw InvariantViolation("member " + std::to_string(j + 1) +
                                     " of the traced rails does not form an s-t path");
        out.members.push_back(std::move(*joined));
    }
    if (auto chk = check_linkage(inst, out, true); !chk)
        throw InvariantViolation("traced linkage invalid: " + chk.reason);
    return out;
}

/// Sum of edge weights along a tracker path.
inline QualityVector path_weight(const Tracker& t, std::span<const Vertex> p) {
    QualityVector total(t.graph.arity());
    for (std::size_t i = 1; i < p.size(); ++i) {
        auto e = t.graph.find_edge(p[i - 1], p[i]);
        if (!e) throw InvalidInput("not a tracker path");
        total += t.graph.weight_vector(*e);
    }
    return total;
}

inline std::string tracker_vertex_name(const Tracker& t, Vertex v) {
    if (v == t.s0()) return "s0";
    if (v == t.t0()) return "t0";
    return std::to_string(v - 1);
}

/// Deterministic text listing: rails by id, then weighted edges by (tail, head).
inline std::string dump_tracker(const Tracker& t) {
    std::string out = "tracker m=" + std::to_string(t.m) + " c=" + std::to_string(t.c) + "\n";
    out += "rails " + std::to_string(t.rails.size()) + "\n";
    for (std::size_t id = 0; id < t.rails.size(); ++id) {
        const Rail& r = t.rails[id];
        out += "rail " + std::to_string(id) + ":";
        for (std::size_t j = 0; j < r.k(); ++j) out += " [" + format_path(r.member(j)) + "]";
        out += " X=" + format_mask(r.x()) + " Y=" + format_mask(r.y()) + "\n";
    }
    out += "edges " + std::to_string(t.graph.edge_count()) + "\n";
    std::vector<std::size_t> order(t.graph.edge_count());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return t.graph.edge(a) < t.graph.edge(b); });
    for (std::size_t e : order) {
        auto [u, v] = t.graph.edge(e);
        out += tracker_vertex_name(t, u) + " -> " + tracker_vertex_name(t, v) + " (" +
               t.graph.weight_vector(e).to_string() + ")\n";
    }
    return out;
}

}  // namespace kdp
