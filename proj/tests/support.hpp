#pragma once

// Shared fixtures and brute-force helpers for the test suites.

#include <functional>
#include <set>
#include <vector>

#include "kdp/kdp.hpp"

namespace kdp::testing {

/// 0 -> 1 -> 2 -> 0.
inline Digraph three_cycle() { return Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

/// Calls fn on each of the 2^(n choose 2) labelled tournaments on n vertices.
inline void for_each_tournament(std::size_t n, const std::function<void(const Digraph&)>& fn) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size()); ++bits) {
        Digraph g(n);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            auto [u, v] = pairs[i];
            if ((bits >> i) & 1U)
                g.add_edge(u, v);
            else
                g.add_edge(v, u);
        }
        fn(g);
    }
}

/// Ordered placements of k pairs on 2k distinct vertices.
inline std::vector<std::vector<TerminalPair>> distinct_placements(std::size_t n, std::size_t k) {
    std::vector<std::vector<TerminalPair>> out;
    std::vector<Vertex> pick;
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self) -> void {
        if (pick.size() == 2 * k) {
            std::vector<TerminalPair> t;
            for (std::size_t i = 0; i < k; ++i) t.push_back({pick[2 * i], pick[2 * i + 1]});
            out.push_back(t);
            return;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            pick.push_back(v);
            self(self);
            pick.pop_back();
            used[v] = false;
        }
    };
    rec(rec);
    return out;
}

/// Every quality of the instance, by plain recursive enumeration of linkages.
inline std::set<QualityVector> all_qualities(const ProblemInstance& inst) {
    const Digraph& g = inst.graph();
    const std::size_t n = g.vertex_count();
    std::set<QualityVector> out;
    std::vector<int> sizes(inst.k());
    std::vector<bool> used(n, false);
    // owner[v] = pair whose terminal v is, or -1.
    std::vector<int> owner(n, -1);
    for (std::size_t i = 0; i < inst.k(); ++i) owner[inst.source(i)] = owner[inst.target(i)] = static_cast<int>(i);
    std::function<void(std::size_t)> member;
    std::function<void(std::size_t, Vertex, int)> walk = [&](std::size_t j, Vertex v, int len) {
        if (v == inst.target(j)) {
            sizes[j] = len;
            member(j + 1);
            return;
        }
        for (Vertex w : g.out_neighbours(v)) {
            if (used[w] || (owner[w] >= 0 && owner[w] != static_cast<int>(j))) continue;
            used[w] = true;
            walk(j, w, len + 1);
            used[w] = false;
        }
    };
    member = [&](std::size_t j) {
        if (j == inst.k()) {
            out.insert(QualityVector(sizes));
            return;
        }
        const Vertex s = inst.source(j);
        used[s] = true;
        walk(j, s, 1);
        used[s] = false;
    };
    member(0);
    return out;
}

/// Random weighted digraph on `vertices` vertices (source 0, sink vertices-1),
/// each ordered pair an edge with probability 1/3, components drawn below 3.
inline WeightedDigraph random_weighted_digraph(std::size_t vertices, std::size_t k, Random& rng) {
    WeightedDigraph g(vertices, k, 0, static_cast<Vertex>(vertices - 1));
    for (Vertex u = 0; u < vertices; ++u)
        for (Vertex v = 0; v < vertices; ++v) {
            if (u == v || rng.below(3) != 0) continue;
            std::vector<int> w(k);
            for (auto& x : w) x = static_cast<int>(rng.below(3));
            g.add_edge(u, v, w);
        }
    return g;
}

/// Random s0 -> t0 walks in a tracker (which is acyclic), restricted to
/// vertices that reach t0; up to `count` distinct paths.
inline std::vector<std::vector<Vertex>> sample_tracker_paths(const Tracker& t, std::size_t count, Random& rng) {
    const auto out = t.graph.out_adjacency();
    const std::size_t n = t.graph.vertex_count();
    std::vector<bool> reaches(n, false);
    reaches[t.t0()] = true;
    for (bool changed = true; changed;) {
        changed = false;
        for (Vertex v = 0; v < n; ++v) {
            if (reaches[v]) continue;
            for (Vertex w : out[v])
                if (reaches[w]) {
                    reaches[v] = changed = true;
                    break;
                }
        }
    }
    std::set<std::vector<Vertex>> found;
    if (!reaches[t.s0()]) return {};
    for (std::size_t attempt = 0; attempt < 4 * count && found.size() < count; ++attempt) {
        std::vector<Vertex> p{t.s0()};
        while (p.back() != t.t0()) {
            std::vector<Vertex> next;
            for (Vertex w : out[p.back()])
                if (reaches[w]) next.push_back(w);
            p.push_back(next[rng.below(next.size())]);
        }
        found.insert(p);
    }
    return {found.begin(), found.end()};
}

}  // namespace kdp::testing
