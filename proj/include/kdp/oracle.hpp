#pragma once

// Exponential-time reference engines. Nothing here shares code paths with the
// rail/tracker/label-search pipeline beyond the plain data types, so the two
// can be checked against each other.

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kdp/digraph.hpp"
#include "kdp/error.hpp"
#include "kdp/pareto.hpp"
#include "kdp/rails.hpp"

namespace kdp {

struct OracleBudget {
    std::size_t max_vertices = 12;
    /// Cap on enumeration steps (vertices pushed onto search stacks).
    std::size_t max_steps = 500'000'000;
    std::optional<std::chrono::duration<double>> time_limit;
};

class BudgetMeter {
public:
    explicit BudgetMeter(const OracleBudget& b)
        : budget_(b), start_(std::chrono::steady_clock::now()) {}

    void require_vertices(std::size_t n) const {
        if (n > budget_.max_vertices)
            throw BudgetExceeded("graph has " + std::to_string(n) + " vertices, budget allows " +
                                 std::to_string(budget_.max_vertices));
    }

    void tick() {
        if (++steps_ > budget_.max_steps) throw BudgetExceeded("oracle step budget exhausted");
        if (budget_.time_limit && (steps_ & 0x3FFF) == 0 &&
            std::chrono::steady_clock::now() - start_ > *budget_.time_limit)
            throw BudgetExceeded("oracle time limit reached");
    }

    std::size_t steps() const noexcept { return steps_; }

private:
    OracleBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::size_t steps_ = 0;
};

struct OracleKeySet {
    ParetoSet key_qualities;
    /// Every enumerated linkage realizing each key quality.
    std::map<QualityVector, std::vector<Linkage>> evidence;
    std::size_t linkages_seen = 0;
};

/// Enumerates every linkage for the instance by depth-first extension and
/// keeps the minimal qualities together with all linkages realizing them.
inline OracleKeySet oracle_key_linkages(const ProblemInstance& inst, const OracleBudget& budget = {}) {
    BudgetMeter meter(budget);
    meter.require_vertices(inst.vertex_count());
    const Digraph& g = inst.graph();
    const std::size_t n = g.vertex_count();
    const std::size_t k = inst.k();

    OracleKeySet out;
    std::vector<Path> members(k);
    std::vector<bool> used(n, false);
    // Terminals of other pairs can never be used by member j.
    std::vector<std::vector<bool>> forbidden(k, std::vector<bool>(n, false));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < k; ++i)
            if (i != j) {
                forbidden[j][inst.source(i)] = true;
                forbidden[j][inst.target(i)] = true;
            }

    auto record = [&]() {
        ++out.linkages_seen;
        Linkage l(members);
        const QualityVector q = l.quality();
        for (const auto& [key, _] : out.evidence)
            if (strictly_dominated(key, q)) return;
        std::erase_if(out.evidence, [&](const auto& kv) { return strictly_dominated(q, kv.first); });
        out.evidence[q].push_back(std::move(l));
    };

    auto member = [&](auto&& self, std::size_t j) -> void {
        if (j == k) {
            record();
            return;
        }
        const Vertex s = inst.source(j);
        const Vertex t = inst.target(j);
        auto& seq = members[j].vertices;
        auto extend = [&](auto&& ext) -> void {
            meter.tick();
            const Vertex last = seq.back();
            if (last == t) {
                self(self, j + 1);
                return;
            }
            for (Vertex w = 0; w < n; ++w) {
                if (used[w] || forbidden[j][w] || !g.has_edge(last, w)) continue;
                used[w] = true;
                seq.push_back(w);
                ext(ext);
                seq.pop_back();
                used[w] = false;
            }
        };
        if (used[s]) return;
        used[s] = true;
        seq.assign(1, s);
        extend(extend);
        seq.clear();
        used[s] = false;
    };
    member(member, 0);

    std::vector<QualityVector> keys;
    for (const auto& [q, _] : out.evidence) keys.push_back(q);
    out.key_qualities = minimal_set(std::move(keys));
    return out;
}

inline ParetoSet oracle_key_qualities(const ProblemInstance& inst, const OracleBudget& budget = {}) {
    return oracle_key_linkages(inst, budget).key_qualities;
}

/// Minimal weight sums over all simple source->sink paths. With a cap, vectors
/// outside K_cap are dropped (the label search never represents them).
inline ParetoSet oracle_pareto_paths(const WeightedDigraph& g, const OracleBudget& budget = {},
                                     std::optional<long long> cap = std::nullopt) {
    BudgetMeter meter(budget);
    meter.require_vertices(g.vertex_count());
    std::vector<std::vector<std::pair<Vertex, std::size_t>>> out_edges(g.vertex_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) out_edges[g.edge(e).first].emplace_back(g.edge(e).second, e);

    std::vector<QualityVector> sums;
    std::vector<bool> on_path(g.vertex_count(), false);
    QualityVector acc(g.arity());
    auto dfs = [&](auto&& self, Vertex v) -> void {
        meter.tick();
        if (v == g.sink()) {
            sums.push_back(acc);
            return;
        }
        for (auto [w, e] : out_edges[v]) {
            if (on_path[w]) continue;
            const QualityVector we = g.weight_vector(e);
            on_path[w] = true;
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += we[i];
            self(self, w);
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] -= we[i];
            on_path[w] = false;
        }
    };
    on_path[g.source()] = true;
    dfs(dfs, g.source());

    ParetoSet all = minimal_set(std::move(sums));
    if (!cap) return all;
    std::vector<QualityVector> kept;
    for (const auto& x : all)
        if (x.in_k(*cap)) kept.push_back(x);
    return minimal_set(std::move(kept));
}

/// Searches for a planar (Q,R)-matching internally disjoint from L: members
/// are q->r or q->w->r with w outside V(L), pairwise vertex-disjoint, sources
/// in Q order and targets in R order. Returns one of cardinality `target` if
/// it exists; with target unset, returns a maximum one.
inline std::optional<Linkage> oracle_find_planar_matching(const Digraph& g, const Path& q, const Path& r,
                                                          const Linkage& l,
                                                          std::optional<std::size_t> target,
                                                          const OracleBudget& budget = {}) {
    BudgetMeter meter(budget);
    meter.require_vertices(g.vertex_count());
    const std::size_t n = g.vertex_count();
    if (!q.empty() && !is_path(g, q)) throw InvalidInput("Q is not a path");
    if (!r.empty() && !is_path(g, r)) throw InvalidInput("R is not a path");
    for (Vertex v : q)
        if (std::find(r.begin(), r.end(), v) != r.end()) throw InvalidInput("Q and R intersect");

    std::vector<bool> in_l(n, false);
    for (const auto& p : l)
        for (Vertex v : p) in_l[v] = true;

    std::vector<bool> used(n, false);
    std::vector<Path> cur;
    std::vector<Path> best;
    bool done = false;

    auto rec = [&](auto&& self, std::size_t qi, std::size_t ri) -> void {
        meter.tick();
        if (cur.size() > best.size()) best = cur;
        if (target && best.size() >= *target) {
            done = true;
            return;
        }
        const std::size_t room = std::min(q.size() - qi, r.size() - ri);
        if (cur.size() + room <= best.size()) return;
        for (std::size_t a = qi; a < q.size() && !done; ++a) {
            const Vertex from = q[a];
            if (used[from]) continue;
            for (std::size_t b = ri; b < r.size() && !done; ++b) {
                const Vertex to = r[b];
                if (used[to]) continue;
                used[from] = used[to] = true;
                if (g.has_edge(from, to)) {
                    cur.push_back(Path{from, to});
                    self(self, a + 1, b + 1);
                    cur.pop_back();
                }
                for (Vertex w = 0; w < n && !done; ++w) {
                    if (used[w] || in_l[w] || !g.has_edge(from, w) || !g.has_edge(w, to)) continue;
                    used[w] = true;
                    cur.push_back(Path{from, w, to});
                    self(self, a + 1, b + 1);
                    cur.pop_back();
                    used[w] = false;
                }
                used[from] = used[to] = false;
            }
        }
    };
    rec(rec, 0, 0);
    if (target && best.size() < *target) return std::nullopt;
    return Linkage(std::move(best));
}

inline std::size_t oracle_max_planar_matching(const Digraph& g, const Path& q, const Path& r, const Linkage& l,
                                              const OracleBudget& budget = {}) {
    return oracle_find_planar_matching(g, q, r, l, std::nullopt, budget)->size();
}

namespace oracle_detail {

inline std::set<Vertex> vset(const Path& p) { return {p.begin(), p.end()}; }

inline bool subset_of(const std::set<Vertex>& a, const std::set<Vertex>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// The graph union of a and b is a single path from s(a) to t(b).
inline bool union_is_path(const Path& a, const Path& b) {
    std::set<Vertex> vs = vset(a);
    vs.insert(b.begin(), b.end());
    std::set<std::pair<Vertex, Vertex>> es;
    for (const Path* p : {&a, &b})
        for (std::size_t i = 1; i < p->size(); ++i) es.emplace((*p)[i - 1], (*p)[i]);
    if (es.size() + 1 != vs.size()) return false;
    std::map<Vertex, int> in, out;
    for (auto [u, v] : es) {
        ++out[u];
        ++in[v];
    }
    for (Vertex v : vs) {
        const int di = in[v], dout = out[v];
        if (di > 1 || dout > 1) return false;
        if (v == a.source() ? di != 0 : di != 1) return false;
        if (v == b.target() ? dout != 0 : dout != 1) return false;
    }
    // |E| = |V| - 1 with these degrees and a unique start rules out cycles
    // only together with connectivity; walk it.
    std::map<Vertex, Vertex> succ;
    for (auto [u, v] : es) succ[u] = v;
    std::size_t steps = 1;
    for (Vertex cur = a.source(); succ.contains(cur); cur = succ[cur]) ++steps;
    return steps == vs.size();
}

}  // namespace oracle_detail

/// The arrow relation evaluated bullet by bullet on explicit vertex sets.
inline bool oracle_rail_arrow(const Rail& r1, const Rail& r2) {
    using namespace oracle_detail;
    if (r1 == r2) return false;
    const auto x1 = vertices_of(r1.x()), y1 = vertices_of(r1.y());
    const auto x2 = vertices_of(r2.x()), y2 = vertices_of(r2.y());
    const std::set<Vertex> sx1(x1.begin(), x1.end()), sy1(y1.begin(), y1.end());
    const std::set<Vertex> sx2(x2.begin(), x2.end()), sy2(y2.begin(), y2.end());
    for (std::size_t i = 0; i < r1.k(); ++i) {
        const Path& a = r1.member(i);
        const Path& b = r2.member(i);
        if (!union_is_path(a, b)) return false;
        std::set<Vertex> a_or_x = vset(a), b_or_y = vset(b);
        a_or_x.insert(sx1.begin(), sx1.end());
        b_or_y.insert(sy2.begin(), sy2.end());
        if (!subset_of(vset(b), a_or_x) || !subset_of(vset(a), b_or_y)) return false;
    }
    return subset_of(sx2, sx1) && subset_of(sy1, sy2);
}

/// (k,m,c)-rails straight from the definition: every k-tuple of vertex
/// sequences that are disjoint paths, the terminal rule, A(L) and B(L) via the
/// inward/outward predicates, and every assignment of the remaining vertices
/// to X, Y or neither. Sorted.
inline std::vector<Rail> oracle_rails(const ProblemInstance& inst, int m, int c,
                                      const OracleBudget& budget = {}) {
    BudgetMeter meter(budget);
    meter.require_vertices(inst.vertex_count());
    const Digraph& g = inst.graph();
    const auto n = static_cast<Vertex>(g.vertex_count());
    const std::size_t k = inst.k();
    const std::size_t cap = 2 * static_cast<std::size_t>(m);

    // All sequences of distinct vertices up to the cap, kept if they are paths.
    std::vector<Path> paths;
    std::vector<Vertex> seq;
    auto grow = [&](auto&& self) -> void {
        meter.tick();
        if (!seq.empty() && is_path(g, Path(seq))) paths.emplace_back(seq);
        if (seq.size() == cap) return;
        for (Vertex v = 0; v < n; ++v) {
            if (std::find(seq.begin(), seq.end(), v) != seq.end()) continue;
            seq.push_back(v);
            self(self);
            seq.pop_back();
        }
    };
    grow(grow);

    std::vector<Rail> out;
    std::vector<Path> chosen(k);
    auto pick = [&](auto&& self, std::size_t j) -> void {
        if (j == k) {
            const Linkage l(chosen);
            if (!validate_linkage(inst, l)) return;
            std::set<Vertex> in_l;
            for (const auto& p : l) in_l.insert(p.begin(), p.end());
            std::set<Vertex> a, b;
            for (Vertex v = 0; v < n; ++v) {
                if (in_l.contains(v)) continue;
                for (std::size_t i = 0; i < k; ++i) {
                    const Path& p = l[i];
                    if (p.target() != inst.target(i)) {
                        std::vector<Vertex> f(p.begin(), p.end() - 1);
                        if (is_inward(g, f, v)) a.insert(v);
                    }
                    if (p.source() != inst.source(i)) {
                        std::vector<Vertex> f(p.begin() + 1, p.end());
                        if (is_outward(g, f, v)) b.insert(v);
                    }
                }
            }
            std::vector<Vertex> both;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
            if (static_cast<int>(both.size()) > c) return;
            std::vector<Vertex> outside;
            for (Vertex v = 0; v < n; ++v)
                if (!in_l.contains(v)) outside.push_back(v);
            std::vector<int> colour(outside.size(), 0);
            while (true) {
                meter.tick();
                std::set<Vertex> x, y;
                for (std::size_t i = 0; i < outside.size(); ++i) {
                    if (colour[i] == 1) x.insert(outside[i]);
                    if (colour[i] == 2) y.insert(outside[i]);
                }
                std::set<Vertex> ab = a;
                ab.insert(b.begin(), b.end());
                std::set<Vertex> xy = x;
                xy.insert(y.begin(), y.end());
                if (oracle_detail::subset_of(x, a) && oracle_detail::subset_of(y, b) && xy == ab) {
                    VertexMask xm = 0, ym = 0;
                    for (Vertex v : x) xm |= bit(v);
                    for (Vertex v : y) ym |= bit(v);
                    out.emplace_back(l, xm, ym);
                }
                std::size_t i = 0;
                while (i < colour.size() && colour[i] == 2) colour[i++] = 0;
                if (i == colour.size()) break;
                ++colour[i];
            }
            return;
        }
        for (const Path& p : paths) {
            const bool short_ok = p.size() == cap || p.source() == inst.source(j) || p.target() == inst.target(j);
            if (!short_ok) continue;
            chosen[j] = p;
            self(self, j + 1);
        }
    };
    pick(pick, 0);
    std::sort(out.begin(), out.end());
    return out;
}

struct OracleTrackerEdge {
    std::size_t from;  ///< rail id, or npos for s0
    std::size_t to;    ///< rail id, or npos for t0
    QualityVector weight;

    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
    friend bool operator==(const OracleTrackerEdge&, const OracleTrackerEdge&) = default;
    friend auto operator<=>(const OracleTrackerEdge&, const OracleTrackerEdge&) = default;
};

/// Tracker edges and weights from the definition, over a given rail list.
inline std::vector<OracleTrackerEdge> oracle_tracker_edges(const ProblemInstance& inst,
                                                           const std::vector<Rail>& rails) {
    const std::size_t k = inst.k();
    std::vector<OracleTrackerEdge> out;
    for (std::size_t a = 0; a < rails.size(); ++a) {
        const Rail& r = rails[a];
        bool starts = true, ends = true;
        std::vector<int> sizes;
        for (std::size_t j = 0; j < k; ++j) {
            starts = starts && r.member(j).source() == inst.source(j);
            ends = ends && r.member(j).target() == inst.target(j);
            sizes.push_back(static_cast<int>(r.member(j).size()));
        }
        if (starts) out.push_back({OracleTrackerEdge::npos, a, QualityVector(sizes)});
        if (ends) out.push_back({a, OracleTrackerEdge::npos, QualityVector(k)});
        for (std::size_t b = 0; b < rails.size(); ++b) {
            if (!oracle_rail_arrow(r, rails[b])) continue;
            std::vector<int> w;
            for (std::size_t j = 0; j < k; ++j) {
                const auto old = oracle_detail::vset(r.member(j));
                int fresh = 0;
                for (Vertex v : rails[b].member(j)) fresh += old.contains(v) ? 0 : 1;
                w.push_back(fresh);
            }
            out.push_back({a, b, QualityVector(w)});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace kdp
