#pragma once

// Checks the vertex-ordering structure that key linkages of d-path-dominant
// graphs are known to have. These routines are deliberately exponential
// (matching checks go through the exact oracle search) and are meant for
// validation on small instances only.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "kdp/error.hpp"
#include "kdp/oracle.hpp"
#include "kdp/rails.hpp"

namespace kdp {

/// (k-1)d + k^2 + 2: the forbidden planar-matching size for acceptable sets.
inline int matching_threshold(std::size_t k, int d) {
    const int kk = static_cast<int>(k);
    return (kk - 1) * d + kk * kk + 2;
}

struct MatchingViolation {
    std::size_t i;  ///< member whose B-part holds the sources
    std::size_t j;  ///< member whose complement part holds the targets
    Linkage matching;
};

struct AcceptabilityReport {
    std::vector<Vertex> b;
    bool prefix_closed = true;
    std::optional<MatchingViolation> violating_pair;
    int threshold = 0;

    bool acceptable() const noexcept { return prefix_closed && !violating_pair; }
};

namespace detail {

inline Path restrict_path(const Path& p, const std::vector<bool>& keep, bool value) {
    Path out;
    for (Vertex v : p)
        if (keep[v] == value) out.vertices.push_back(v);
    return out;
}

}  // namespace detail

/// B is acceptable for L if it is closed under path predecessors and no
/// planar (P_i|B, P_j - B)-matching of threshold size is internally disjoint
/// from L, for any i, j.
inline AcceptabilityReport is_acceptable(const ProblemInstance& inst, const Linkage& l,
                                         const std::vector<Vertex>& b, const OracleBudget& budget = {}) {
    const Digraph& g = inst.graph();
    std::vector<bool> in_l(g.vertex_count(), false), in_b(g.vertex_count(), false);
    for (const auto& p : l)
        for (Vertex v : p) in_l.at(v) = true;
    for (Vertex v : b) {
        if (v >= g.vertex_count() || !in_l[v]) throw InvalidInput("B is not a subset of V(L)");
        in_b[v] = true;
    }

    AcceptabilityReport rep;
    rep.b = b;
    std::sort(rep.b.begin(), rep.b.end());
    rep.threshold = matching_threshold(inst.k(), inst.d());

    for (const auto& p : l)
        for (std::size_t t = 1; t < p.size(); ++t)
            if (in_b[p[t]] && !in_b[p[t - 1]]) rep.prefix_closed = false;
    if (!rep.prefix_closed) return rep;

    for (std::size_t i = 0; i < l.size(); ++i) {
        const Path q = detail::restrict_path(l[i], in_b, true);
        if (q.empty()) continue;
        for (std::size_t j = 0; j < l.size(); ++j) {
            const Path r = detail::restrict_path(l[j], in_b, false);
            if (r.empty()) continue;
            auto found = oracle_find_planar_matching(g, q, r, l, static_cast<std::size_t>(rep.threshold), budget);
            if (found) {
                rep.violating_pair = MatchingViolation{i, j, std::move(*found)};
                return rep;
            }
        }
    }
    return rep;
}

struct AcceptableEnumeration {
    bool success = false;
    std::vector<Vertex> order;  ///< on success, all of V(L); otherwise the grown prefix
    std::vector<Vertex> stuck;  ///< on failure, the acceptable set that could not grow

    explicit operator bool() const noexcept { return success; }
};

/// Grows B from the empty set, each time adding the least vertex v with
/// B u {v} acceptable. Failure is returned as data.
inline AcceptableEnumeration acceptable_enumeration(const ProblemInstance& inst, const Linkage& l,
                                                    const OracleBudget& budget = {}) {
    if (auto chk = check_linkage(inst, l, true); !chk)
        throw InvalidInput("not a linkage for the instance: " + chk.reason);
    const std::vector<Vertex> all = l.vertices();
    AcceptableEnumeration out;
    std::vector<Vertex> b;
    while (b.size() < all.size()) {
        bool grown = false;
        for (Vertex v : all) {
            if (std::find(b.begin(), b.end(), v) != b.end()) continue;
            b.push_back(v);
            if (is_acceptable(inst, l, b, budget).acceptable()) {
                grown = true;
                break;
            }
            b.pop_back();
        }
        if (!grown) {
            out.order = b;
            out.stuck = b;
            std::sort(out.stuck.begin(), out.stuck.end());
            return out;
        }
    }
    out.success = true;
    out.order = std::move(b);
    return out;
}

struct EnumerationBoundReport {
    bool holds = true;
    int worst = 0;  ///< largest count seen
    int bound = 0;  ///< c(2k+1)
    int window = 0; ///< cd

    explicit operator bool() const noexcept { return holds; }
};

/// For every split of the order into a prefix and the rest, every cd-vertex
/// subpath Q of a member restricted to the prefix and every cd-vertex subpath
/// R of a member restricted to the rest, counts vertices that are Q-outward
/// and R-inward and compares with c(2k+1), where c = (k-1)d + k^2 + 2.
inline EnumerationBoundReport check_enumeration_bound(const ProblemInstance& inst, const Linkage& l,
                                                      const std::vector<Vertex>& order) {
    const Digraph& g = inst.graph();
    const std::size_t n = g.vertex_count();
    const std::vector<Vertex> all = l.vertices();
    std::vector<Vertex> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != all) throw InvalidInput("order is not an enumeration of V(L)");
    std::vector<std::size_t> pos(n, 0);
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    for (const auto& p : l)
        for (std::size_t t = 1; t < p.size(); ++t)
            if (pos[p[t - 1]] > pos[p[t]]) throw InvalidInput("order does not respect member edges");

    const int c = matching_threshold(inst.k(), inst.d());
    EnumerationBoundReport rep;
    rep.bound = c * (2 * static_cast<int>(inst.k()) + 1);
    rep.window = c * inst.d();
    const auto window = static_cast<std::size_t>(rep.window);

    std::vector<bool> in_prefix(n, false);
    for (std::size_t split = 1; split < order.size(); ++split) {
        in_prefix[order[split - 1]] = true;
        for (const auto& ph : l) {
            const Path qh = detail::restrict_path(ph, in_prefix, true);
            if (qh.size() < window) continue;
            for (const auto& pi : l) {
                const Path ri = detail::restrict_path(pi, in_prefix, false);
                if (ri.size() < window) continue;
                for (std::size_t a = 0; a + window <= qh.size(); ++a) {
                    const std::vector<Vertex> qw(qh.begin() + a, qh.begin() + a + window);
                    for (std::size_t b = 0; b + window <= ri.size(); ++b) {
                        const std::vector<Vertex> rw(ri.begin() + b, ri.begin() + b + window);
                        int count = 0;
                        for (Vertex v = 0; v < n; ++v) {
                            if (std::find(qw.begin(), qw.end(), v) != qw.end()) continue;
                            if (std::find(rw.begin(), rw.end(), v) != rw.end()) continue;
                            if (is_outward(g, qw, v) && is_inward(g, rw, v)) ++count;
                        }
                        rep.worst = std::max(rep.worst, count);
                        if (count > rep.bound) rep.holds = false;
                    }
                }
            }
        }
    }
    return rep;
}

}  // namespace kdp
