#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kdp/digraph.hpp"
#include "kdp/error.hpp"
#include "kdp/pareto.hpp"

namespace kdp {

struct TerminalPair {
    Vertex source;
    Vertex target;

    friend bool operator==(const TerminalPair&, const TerminalPair&) = default;
};

/// A digraph with k terminal pairs and the domination parameter d. Terminals of
/// different pairs are pairwise distinct; s_i == t_i is allowed and asks for a
/// one-vertex path.
class ProblemInstance {
public:
    ProblemInstance(Digraph g, std::vector<TerminalPair> terminals, int d = 1)
        : g_(std::move(g)), terminals_(std::move(terminals)), d_(d) {
        if (d_ < 1) throw InvalidInput("d must be at least 1");
        for (const auto& [s, t] : terminals_)
            if (!g_.is_vertex(s) || !g_.is_vertex(t))
                throw InvalidInput("terminal vertex out of range");
        for (std::size_t i = 0; i < terminals_.size(); ++i)
            for (std::size_t j = i + 1; j < terminals_.size(); ++j) {
                const auto& a = terminals_[i];
                const auto& b = terminals_[j];
                if (a.source == b.source || a.target == b.target || a.source == b.target ||
                    a.target == b.source)
                    throw PreconditionError("terminals of pairs " + std::to_string(i + 1) +
                                            " and " + std::to_string(j + 1) + " collide");
            }
    }

    const Digraph& graph() const noexcept { return g_; }
    std::size_t k() const noexcept { return terminals_.size(); }
    int d() const noexcept { return d_; }
    std::size_t vertex_count() const noexcept { return g_.vertex_count(); }
    Vertex source(std::size_t j) const { return terminals_[j].source; }
    Vertex target(std::size_t j) const { return terminals_[j].target; }
    const std::vector<TerminalPair>& terminals() const noexcept { return terminals_; }

    friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;

private:
    Digraph g_;
    std::vector<TerminalPair> terminals_;
    int d_;
};

/// Ordered sequence of paths; a valid linkage has pairwise vertex-disjoint members.
struct Linkage {
    std::vector<Path> members;

    Linkage() = default;
    Linkage(std::initializer_list<Path> ps) : members(ps) {}
    explicit Linkage(std::vector<Path> ps) : members(std::move(ps)) {}

    std::size_t size() const noexcept { return members.size(); }
    const Path& operator[](std::size_t j) const { return members[j]; }
    auto begin() const noexcept { return members.begin(); }
    auto end() const noexcept { return members.end(); }

    /// Vertex counts of the members.
    QualityVector quality() const {
        std::vector<int> q;
        q.reserve(members.size());
        for (const auto& p : members) q.push_back(static_cast<int>(p.size()));
        return QualityVector(std::move(q));
    }

    std::vector<Vertex> vertices() const {
        std::vector<Vertex> vs;
        for (const auto& p : members) vs.insert(vs.end(), p.begin(), p.end());
        std::sort(vs.begin(), vs.end());
        return vs;
    }

    VertexMask vertex_mask() const {
        VertexMask s = 0;
        for (const auto& p : members) s |= mask_of(p.vertices);
        return s;
    }

    friend bool operator==(const Linkage&, const Linkage&) = default;
    friend auto operator<=>(const Linkage&, const Linkage&) = default;
};

struct LinkageCheck {
    bool ok = true;
    std::string reason;

    explicit operator bool() const noexcept { return ok; }
};

/// Diagnostic linkage validation. With for_instance, member i must also run
/// from s_i to t_i and the member count must equal k.
inline LinkageCheck check_linkage(const ProblemInstance& inst, const Linkage& l, bool for_instance) {
    const Digraph& g = inst.graph();
    if (for_instance && l.size() != inst.k())
        return {false, "expected " + std::to_string(inst.k()) + " members, got " +
                           std::to_string(l.size())};
    std::vector<int> owner(g.vertex_count(), -1);
    for (std::size_t j = 0; j < l.size(); ++j) {
        const Path& p = l[j];
        if (!is_path(g, p)) return {false, "member " + std::to_string(j + 1) + " is not a path"};
        for (Vertex v : p) {
            if (owner[v] >= 0)
                return {false, "members " + std::to_string(owner[v] + 1) + " and " +
                                   std::to_string(j + 1) + " share vertex " + std::to_string(v)};
            owner[v] = static_cast<int>(j);
        }
        if (for_instance && p.source() != inst.source(j))
            return {false, "member " + std::to_string(j + 1) + " does not start at s_" +
                               std::to_string(j + 1)};
        if (for_instance && p.target() != inst.target(j))
            return {false, "member " + std::to_string(j + 1) + " does not end at t_" +
                               std::to_string(j + 1)};
    }
    return {};
}

inline bool validate_linkage(const ProblemInstance& inst, const Linkage& l) {
    return check_linkage(inst, l, false).ok;
}

inline bool validate_linkage_for(const ProblemInstance& inst, const Linkage& l) {
    return check_linkage(inst, l, true).ok;
}

namespace detail {

inline void require_partial_linkage(const ProblemInstance& inst, const Linkage& l) {
    require_mask_capacity(inst.graph());
    if (l.size() != inst.k()) throw InvalidInput("linkage arity differs from k");
    if (!validate_linkage(inst, l)) throw InvalidInput("not a linkage of the graph");
}

/// A(L) given the member masks; see compute_a().
inline VertexMask a_set(const ProblemInstance& inst, const Linkage& l,
                        std::span<const VertexMask> masks, VertexMask used) {
    const Digraph& g = inst.graph();
    const auto n = static_cast<Vertex>(g.vertex_count());
    VertexMask a = 0;
    for (std::size_t j = 0; j < l.size(); ++j) {
        if (l[j].target() == inst.target(j)) continue;
        const VertexMask f = masks[j] & ~bit(l[j].target());
        for (Vertex v = 0; v < n; ++v)
            if (!contains(used, v) && (g.in_mask(v) & f) == 0) a |= bit(v);
    }
    return a;
}

inline VertexMask b_set(const ProblemInstance& inst, const Linkage& l,
                        std::span<const VertexMask> masks, VertexMask used) {
    const Digraph& g = inst.graph();
    const auto n = static_cast<Vertex>(g.vertex_count());
    VertexMask b = 0;
    for (std::size_t j = 0; j < l.size(); ++j) {
        if (l[j].source() == inst.source(j)) continue;
        const VertexMask f = masks[j] & ~bit(l[j].source());
        for (Vertex v = 0; v < n; ++v)
            if (!contains(used, v) && (g.out_mask(v) & f) == 0) b |= bit(v);
    }
    return b;
}

inline std::vector<VertexMask> member_masks(const Linkage& l) {
    std::vector<VertexMask> masks;
    masks.reserve(l.size());
    for (const auto& p : l) masks.push_back(mask_of(p.vertices));
    return masks;
}

}  // namespace detail

/// Vertices outside V(L) that are (M_j - t(M_j))-inward for some j with t(M_j) != t_j.
inline VertexMask compute_a(const ProblemInstance& inst, const Linkage& l) {
    detail::require_partial_linkage(inst, l);
    return detail::a_set(inst, l, detail::member_masks(l), l.vertex_mask());
}

/// Vertices outside V(L) that are (M_j - s(M_j))-outward for some j with s(M_j) != s_j.
inline VertexMask compute_b(const ProblemInstance& inst, const Linkage& l) {
    detail::require_partial_linkage(inst, l);
    return detail::b_set(inst, l, detail::member_masks(l), l.vertex_mask());
}

inline int confusion(const ProblemInstance& inst, const Linkage& l) {
    return popcount(compute_a(inst, l) & compute_b(inst, l));
}

/// A (k,m,c)-rail: a partial linkage with short members plus a partition
/// (X, Y) of A(L) u B(L) with X in A(L) and Y in B(L).
class Rail {
public:
    Rail(Linkage l, VertexMask x, VertexMask y)
        : linkage_(std::move(l)), x_(x), y_(y), masks_(detail::member_masks(linkage_)) {
        for (VertexMask s : masks_) used_ |= s;
    }

    const Linkage& linkage() const noexcept { return linkage_; }
    const Path& member(std::size_t j) const { return linkage_[j]; }
    std::size_t k() const noexcept { return linkage_.size(); }
    VertexMask x() const noexcept { return x_; }
    VertexMask y() const noexcept { return y_; }
    VertexMask member_mask(std::size_t j) const { return masks_[j]; }
    VertexMask vertex_mask() const noexcept { return used_; }

    friend bool operator==(const Rail& a, const Rail& b) {
        return a.x_ == b.x_ && a.y_ == b.y_ && a.linkage_ == b.linkage_;
    }
    friend auto operator<=>(const Rail& a, const Rail& b) {
        if (auto c = a.linkage_ <=> b.linkage_; c != 0) return c;
        if (auto c = a.x_ <=> b.x_; c != 0) return c;
        return a.y_ <=> b.y_;
    }

private:
    Linkage linkage_;
    VertexMask x_;
    VertexMask y_;
    std::vector<VertexMask> masks_;
    VertexMask used_ = 0;
};

/// Checks the rail definition. m and c are only checked when given.
inline LinkageCheck check_rail(const ProblemInstance& inst, const Rail& r,
                               std::optional<int> m = std::nullopt,
                               std::optional<int> c = std::nullopt) {
    if (r.k() != inst.k()) return {false, "rail arity differs from k"};
    if (inst.vertex_count() > kMaxMaskVertices) return {false, "graph too large for rails"};
    if (auto chk = check_linkage(inst, r.linkage(), false); !chk) return chk;
    for (std::size_t j = 0; j < r.k(); ++j) {
        const Path& p = r.member(j);
        if (p.empty()) return {false, "empty member"};
        if (m) {
            const auto cap = static_cast<std::size_t>(2 * *m);
            if (p.size() > cap) return {false, "member longer than 2m"};
            if (p.size() < cap && p.source() != inst.source(j) && p.target() != inst.target(j))
                return {false, "short member " + std::to_string(j + 1) + " touches no terminal"};
        }
    }
    const auto masks = detail::member_masks(r.linkage());
    const VertexMask used = r.vertex_mask();
    const VertexMask a = detail::a_set(inst, r.linkage(), masks, used);
    const VertexMask b = detail::b_set(inst, r.linkage(), masks, used);
    if (c && popcount(a & b) > *c) return {false, "confusion exceeds c"};
    if ((r.x() & r.y()) != 0) return {false, "X and Y intersect"};
    if (((r.x() | r.y()) & used) != 0) return {false, "X or Y meets V(L)"};
    if (!is_subset(r.x(), a)) return {false, "X not inside A(L)"};
    if (!is_subset(r.y(), b)) return {false, "Y not inside B(L)"};
    if ((r.x() | r.y()) != (a | b)) return {false, "X u Y differs from A(L) u B(L)"};
    return {};
}

/// 2^c * n^(2km) * (2km)^k, in log2 to stay finite.
inline double rail_count_bound_log2(std::size_t n, std::size_t k, int m, int c) {
    const double km2 = 2.0 * static_cast<double>(k) * m;
    if (n == 0) return km2 == 0 ? c : -std::numeric_limits<double>::infinity();
    double bound = c + km2 * std::log2(static_cast<double>(n));
    if (k > 0) bound += static_cast<double>(k) * std::log2(km2);
    return bound;
}

inline bool within_rail_count_bound(std::size_t count, std::size_t n, std::size_t k, int m, int c) {
    if (count == 0) return true;
    return std::log2(static_cast<double>(count)) <= rail_count_bound_log2(n, k, m, c) + 1e-9;
}

struct RailLimits {
    std::size_t max_rails = std::numeric_limits<std::size_t>::max();
    std::function<bool()> expired;
};

/// All (k,m,c)-rails, each once. Members are built by DFS over paths of at
/// most 2m vertices avoiding earlier members, so rails come out in
/// lexicographic order of their member sequences; for each surviving linkage,
/// one rail per subset S of A n B (in increasing bitmask order over the sorted
/// vertices of A n B), with X = (A - B) u S and Y = (A u B) - X.
inline std::vector<Rail> enumerate_rails(const ProblemInstance& inst, int m, int c,
                                         const RailLimits& limits = {}) {
    if (m < 1) throw InvalidInput("m must be at least 1");
    if (c < 0) throw InvalidInput("c must be nonnegative");
    const Digraph& g = inst.graph();
    require_mask_capacity(g);
    const auto n = static_cast<Vertex>(g.vertex_count());
    const std::size_t k = inst.k();
    const std::size_t cap = std::min<std::size_t>(2 * static_cast<std::size_t>(m), n);
    const std::size_t full = 2 * static_cast<std::size_t>(m);

    std::vector<Rail> out;
    std::vector<Path> members(k);
    std::vector<VertexMask> masks(k, 0);
    std::size_t ticks = 0;

    auto emit = [&](VertexMask used) {
        const Linkage l(members);
        const VertexMask a = detail::a_set(inst, l, masks, used);
        const VertexMask b = detail::b_set(inst, l, masks, used);
        const VertexMask both = a & b;
        if (popcount(both) > c) return;
        const auto mixed = vertices_of(both);
        const VertexMask base = a & ~b;
        const std::uint64_t count = std::uint64_t{1} << mixed.size();
        for (std::uint64_t s = 0; s < count; ++s) {
            VertexMask x = base;
            for (std::size_t i = 0; i < mixed.size(); ++i)
                if ((s >> i) & 1U) x |= bit(mixed[i]);
            if (out.size() >= limits.max_rails) throw BudgetExceeded("rail limit reached");
            out.emplace_back(l, x, (a | b) & ~x);
        }
    };

    auto member_rec = [&](auto&& self, std::size_t j, VertexMask used) -> void {
        if (j == k) {
            emit(used);
            return;
        }
        auto& seq = members[j].vertices;
        auto extend = [&](auto&& ext) -> void {
            if (limits.expired && (++ticks & 0xFFF) == 0 && limits.expired())
                throw BudgetExceeded("rail enumeration time limit reached");
            const bool ok = seq.size() == full || seq.front() == inst.source(j) ||
                            seq.back() == inst.target(j);
            if (ok) {
                masks[j] = mask_of(seq);
                self(self, j + 1, used | masks[j]);
            }
            if (seq.size() == cap) return;
            VertexMask next = g.out_mask(seq.back()) & ~used & ~mask_of(seq);
            while (next != 0) {
                const auto w = static_cast<Vertex>(std::countr_zero(next));
                next &= next - 1;
                seq.push_back(w);
                ext(ext);
                seq.pop_back();
            }
        };
        for (Vertex s = 0; s < n; ++s) {
            if (contains(used, s)) continue;
            seq.assign(1, s);
            extend(extend);
        }
        seq.clear();
        masks[j] = 0;
    };

    member_rec(member_rec, 0, 0);
    return out;
}

namespace detail {

/// M u M' is a path from s(M) to t(M'): the overlap is a suffix of M equal to
/// a prefix of M', and the rest of M' avoids M.
inline bool joins_as_path(const Path& a, const Path& b, VertexMask a_mask) {
    const Vertex head = b.source();
    if (!contains(a_mask, head)) return false;
    std::size_t pos = 0;
    while (a[pos] != head) ++pos;
    const std::size_t overlap = a.size() - pos;
    if (overlap > b.size()) return false;
    for (std::size_t t = 0; t < overlap; ++t)
        if (a[pos + t] != b[t]) return false;
    for (std::size_t t = overlap; t < b.size(); ++t)
        if (contains(a_mask, b[t])) return false;
    return true;
}

/// The arrow relation without checking that the rails belong to one instance.
inline bool arrow_unchecked(const Rail& r1, const Rail& r2) {
    if (!is_subset(r2.x(), r1.x()) || !is_subset(r1.y(), r2.y())) return false;
    for (std::size_t i = 0; i < r1.k(); ++i) {
        if (!is_subset(r2.member_mask(i), r1.member_mask(i) | r1.x())) return false;
        if (!is_subset(r1.member_mask(i), r2.member_mask(i) | r2.y())) return false;
    }
    for (std::size_t i = 0; i < r1.k(); ++i)
        if (!joins_as_path(r1.member(i), r2.member(i), r1.member_mask(i))) return false;
    return !(r1 == r2);
}

}  // namespace detail

/// r1 -> r2: distinct rails where each M_i u M_i' is a path from s(M_i) to
/// t(M_i'), V(M_i') lies in V(M_i) u X, V(M_i) lies in V(M_i') u Y', X' lies in
/// X and Y lies in Y'.
inline bool rail_arrow(const ProblemInstance& inst, const Rail& r1, const Rail& r2) {
    if (auto chk = check_rail(inst, r1); !chk) throw InvalidInput("first rail: " + chk.reason);
    if (auto chk = check_rail(inst, r2); !chk) throw InvalidInput("second rail: " + chk.reason);
    return detail::arrow_unchecked(r1, r2);
}

/// Contents of an instance file: `k d`, then k lines `s t`, then an optional
/// `bounds x_1 ... x_k` line.
struct InstanceSpec {
    int d = 1;
    std::vector<TerminalPair> terminals;
    std::optional<std::vector<int>> bounds;

    friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

inline InstanceSpec parse_instance_spec(std::istream& in, std::size_t vertex_count) {
    const auto lines = detail::tokenize_lines(in);
    if (lines.empty()) throw ParseError(1, 1, "missing 'k d' line");
    detail::expect_tokens(lines[0], 2, "'k d'");
    InstanceSpec spec;
    const auto k = detail::parse_integer(lines[0], lines[0].tokens[0], 0, 1 << 16);
    spec.d = static_cast<int>(detail::parse_integer(lines[0], lines[0].tokens[1], 1, 1 << 16));
    const auto vmax = static_cast<long long>(vertex_count) - 1;
    std::size_t i = 1;
    for (long long j = 0; j < k; ++j, ++i) {
        if (i >= lines.size())
            throw ParseError(lines.back().number + 1, 1, "missing terminal pair " + std::to_string(j + 1));
        const auto& line = lines[i];
        detail::expect_tokens(line, 2, "terminal pair 's t'");
        const auto s = detail::parse_integer(line, line.tokens[0], 0, vmax);
        const auto t = detail::parse_integer(line, line.tokens[1], 0, vmax);
        spec.terminals.push_back({static_cast<Vertex>(s), static_cast<Vertex>(t)});
    }
    if (i < lines.size()) {
        const auto& line = lines[i];
        if (line.tokens[0].text != "bounds")
            throw ParseError(line.number, line.tokens[0].column, "expected 'bounds' line");
        detail::expect_tokens(line, static_cast<std::size_t>(k) + 1, "'bounds x_1 ... x_k'");
        std::vector<int> b;
        for (std::size_t t = 1; t < line.tokens.size(); ++t)
            b.push_back(static_cast<int>(detail::parse_integer(line, line.tokens[t], 1, 1 << 30)));
        spec.bounds = std::move(b);
        ++i;
    }
    if (i < lines.size())
        throw ParseError(lines[i].number, lines[i].tokens[0].column, "unexpected trailing content");
    return spec;
}

inline InstanceSpec parse_instance_spec(std::string_view text, std::size_t vertex_count) {
    std::istringstream in{std::string(text)};
    return parse_instance_spec(in, vertex_count);
}

inline std::string format_instance_spec(const InstanceSpec& spec) {
    std::string out = std::to_string(spec.terminals.size()) + " " + std::to_string(spec.d) + "\n";
    for (const auto& [s, t] : spec.terminals) out += std::to_string(s) + " " + std::to_string(t) + "\n";
    if (spec.bounds) {
        out += "bounds";
        for (int x : *spec.bounds) out += " " + std::to_string(x);
        out += "\n";
    }
    return out;
}

inline std::string format_path(const Path& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(p[i]);
    }
    return s;
}

inline std::string format_mask(VertexMask s) {
    std::string out = "{";
    bool first = true;
    for (Vertex v : vertices_of(s)) {
        if (!first) out += ' ';
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

}  // namespace kdp
