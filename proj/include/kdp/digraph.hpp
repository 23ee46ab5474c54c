#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <sstream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kdp/error.hpp"

namespace kdp {

using Vertex = std::uint32_t;

/// Vertex subset of a graph with at most 64 vertices. The rail machinery is
/// exponential in n, so every routine that works with masks requires n <= 64.
using VertexMask = std::uint64_t;

inline constexpr std::size_t kMaxMaskVertices = 64;

constexpr VertexMask bit(Vertex v) noexcept { return VertexMask{1} << v; }

constexpr bool contains(VertexMask s, Vertex v) noexcept { return (s >> v) & 1U; }

constexpr bool is_subset(VertexMask a, VertexMask b) noexcept { return (a & ~b) == 0; }

inline int popcount(VertexMask s) noexcept { return std::popcount(s); }

inline VertexMask mask_of(std::span<const Vertex> vs) noexcept {
    VertexMask s = 0;
    for (Vertex v : vs) s |= bit(v);
    return s;
}

inline std::vector<Vertex> vertices_of(VertexMask s) {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(popcount(s)));
    while (s != 0) {
        out.push_back(static_cast<Vertex>(std::countr_zero(s)));
        s &= s - 1;
    }
    return out;
}

/// Directed path given by its vertex sequence. Every path has at least one
/// vertex; validity against a graph is checked by is_path().
struct Path {
    std::vector<Vertex> vertices;

    Path() = default;
    Path(std::initializer_list<Vertex> vs) : vertices(vs) {}
    explicit Path(std::vector<Vertex> vs) : vertices(std::move(vs)) {}

    std::size_t size() const noexcept { return vertices.size(); }
    bool empty() const noexcept { return vertices.empty(); }
    std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
    Vertex source() const { return vertices.front(); }
    Vertex target() const { return vertices.back(); }
    Vertex operator[](std::size_t i) const { return vertices[i]; }

    auto begin() const noexcept { return vertices.begin(); }
    auto end() const noexcept { return vertices.end(); }

    friend bool operator==(const Path&, const Path&) = default;
    friend auto operator<=>(const Path&, const Path&) = default;
};

/// Loop-free simple digraph on vertices 0..n-1 with O(1) adjacency queries.
/// Antiparallel pairs are allowed.
class Digraph {
public:
    Digraph() = default;

    explicit Digraph(std::size_t n)
        : n_(n), words_((n + 63) / 64), out_(n * words_, 0), in_(n * words_, 0) {}

    Digraph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) : Digraph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return m_; }

    /// Returns false if the edge was already present.
    bool add_edge(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InvalidInput("loop at vertex " + std::to_string(u));
        if (has_edge(u, v)) return false;
        out_[u * words_ + v / 64] |= VertexMask{1} << (v % 64);
        in_[v * words_ + u / 64] |= VertexMask{1} << (u % 64);
        ++m_;
        return true;
    }

    bool has_edge(Vertex u, Vertex v) const noexcept {
        return (out_[u * words_ + v / 64] >> (v % 64)) & 1U;
    }

    bool adjacent(Vertex u, Vertex v) const noexcept { return has_edge(u, v) || has_edge(v, u); }

    bool is_vertex(Vertex v) const noexcept { return v < n_; }

    /// Out-neighbourhood as a mask; requires vertex_count() <= 64.
    VertexMask out_mask(Vertex u) const noexcept { return out_[u * words_]; }
    VertexMask in_mask(Vertex v) const noexcept { return in_[v * words_]; }

    std::vector<Vertex> out_neighbours(Vertex u) const { return row_vertices(out_, u); }
    std::vector<Vertex> in_neighbours(Vertex v) const { return row_vertices(in_, v); }

    /// All edges in (source, target) lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        out.reserve(m_);
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v : out_neighbours(u)) out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.n_ == b.n_ && a.out_ == b.out_;
    }

private:
    void check_vertex(Vertex v) const {
        if (v >= n_) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
    }

    std::vector<Vertex> row_vertices(const std::vector<VertexMask>& rows, Vertex u) const {
        std::vector<Vertex> out;
        for (std::size_t w = 0; w < words_; ++w) {
            VertexMask bits = rows[u * words_ + w];
            while (bits != 0) {
                out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
        return out;
    }

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::size_t m_ = 0;
    std::vector<VertexMask> out_;
    std::vector<VertexMask> in_;
};

inline void require_mask_capacity(const Digraph& g) {
    if (g.vertex_count() > kMaxMaskVertices)
        throw InvalidInput("graph has " + std::to_string(g.vertex_count()) +
                           " vertices; at most 64 are supported here");
}

inline bool is_semicomplete(const Digraph& g) {
    const auto n = static_cast<Vertex>(g.vertex_count());
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) return false;
    return true;
}

/// Nonempty, distinct vertices, consecutive vertices joined by forward edges.
inline bool is_path(const Digraph& g, const Path& p) {
    if (p.empty()) return false;
    std::vector<bool> seen(g.vertex_count(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Vertex v = p[i];
        if (!g.is_vertex(v) || seen[v]) return false;
        seen[v] = true;
        if (i > 0 && !g.has_edge(p[i - 1], v)) return false;
    }
    return true;
}

/// No forward chords: every edge v_i v_j with both ends on the path has j <= i+1.
inline bool is_minimal_path(const Digraph& g, const Path& p) {
    if (!is_path(g, p)) throw InvalidInput("not a path of the graph");
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 2; j < p.size(); ++j)
            if (g.has_edge(p[i], p[j])) return false;
    return true;
}

/// No edge from any vertex of f into v. Vacuously true for empty f.
inline bool is_inward(const Digraph& g, std::span<const Vertex> f, Vertex v) {
    if (std::find(f.begin(), f.end(), v) != f.end())
        throw InvalidInput("vertex " + std::to_string(v) + " lies in F");
    return std::none_of(f.begin(), f.end(), [&](Vertex u) { return g.has_edge(u, v); });
}

/// No edge from v into any vertex of f. Vacuously true for empty f.
inline bool is_outward(const Digraph& g, std::span<const Vertex> f, Vertex v) {
    if (std::find(f.begin(), f.end(), v) != f.end())
        throw InvalidInput("vertex " + std::to_string(v) + " lies in F");
    return std::none_of(f.begin(), f.end(), [&](Vertex u) { return g.has_edge(v, u); });
}

/// Visits every path with between 1 and max_vertices vertices, in DFS preorder
/// (lexicographic by vertex sequence). The callback returns false to prune the
/// extensions of the path it was given.
template <typename Fn>
void for_each_path(const Digraph& g, std::size_t max_vertices, Fn&& fn) {
    const auto n = static_cast<Vertex>(g.vertex_count());
    if (max_vertices == 0) return;
    std::vector<Vertex> seq;
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self) -> void {
        if (!fn(std::as_const(seq))) return;
        if (seq.size() == max_vertices) return;
        const Vertex last = seq.back();
        for (Vertex w : g.out_neighbours(last)) {
            if (used[w]) continue;
            used[w] = true;
            seq.push_back(w);
            self(self);
            seq.pop_back();
            used[w] = false;
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        used[s] = true;
        seq.push_back(s);
        rec(rec);
        seq.pop_back();
        used[s] = false;
    }
}

/// Every minimal path with exactly d vertices dominates the whole graph.
inline bool is_d_path_dominant(const Digraph& g, int d) {
    if (d < 1) throw InvalidInput("d must be at least 1");
    const std::size_t n = g.vertex_count();
    bool ok = true;
    for_each_path(g, static_cast<std::size_t>(d), [&](const std::vector<Vertex>& seq) {
        if (!ok) return false;
        // Forward chord into the newest vertex breaks minimality for every extension.
        const Vertex w = seq.back();
        for (std::size_t a = 0; a + 2 < seq.size(); ++a)
            if (g.has_edge(seq[a], w)) return false;
        if (seq.size() < static_cast<std::size_t>(d)) return true;
        std::vector<bool> dominated(n, false);
        for (Vertex p : seq) {
            dominated[p] = true;
            for (Vertex x : g.out_neighbours(p)) dominated[x] = true;
            for (Vertex x : g.in_neighbours(p)) dominated[x] = true;
        }
        ok = std::all_of(dominated.begin(), dominated.end(), [](bool b) { return b; });
        return false;
    });
    return ok;
}

namespace detail {

/// Splits the non-comment, non-blank lines of a text stream into tokens with
/// their 1-based line and column numbers.
struct Token {
    std::string text;
    std::size_t column;
};

struct Line {
    std::size_t number;
    std::vector<Token> tokens;
};

inline std::vector<Line> tokenize_lines(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const auto first = raw.find_first_not_of(" \t");
        if (first == std::string::npos || raw[first] == '#') continue;
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
            if (i >= raw.size()) break;
            const std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
            line.tokens.push_back({raw.substr(start, i - start), start + 1});
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

inline long long parse_integer(const Line& line, const Token& tok, long long lo, long long hi) {
    long long value = 0;
    std::size_t used = 0;
    try {
        value = std::stoll(tok.text, &used);
    } catch (const std::exception&) {
        throw ParseError(line.number, tok.column, "expected an integer, got '" + tok.text + "'");
    }
    if (used != tok.text.size())
        throw ParseError(line.number, tok.column, "expected an integer, got '" + tok.text + "'");
    if (value < lo || value > hi)
        throw ParseError(line.number, tok.column,
                         "value " + tok.text + " outside [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "]");
    return value;
}

inline void expect_tokens(const Line& line, std::size_t count, const char* what) {
    if (line.tokens.size() != count) {
        const std::size_t col =
            line.tokens.size() > count ? line.tokens[count].column : line.tokens.back().column;
        throw ParseError(line.number, col,
                         std::string("expected ") + what + " (" + std::to_string(count) +
                             " fields), got " + std::to_string(line.tokens.size()));
    }
}

}  // namespace detail

/// Graph text format: first line `n`, then one `u v` line per edge u->v.
/// Blank lines and lines starting with '#' are ignored; duplicate edges are
/// rejected.
inline Digraph parse_graph(std::istream& in) {
    const auto lines = detail::tokenize_lines(in);
    if (lines.empty()) throw ParseError(1, 1, "missing vertex count");
    detail::expect_tokens(lines[0], 1, "vertex count");
    const auto n = detail::parse_integer(lines[0], lines[0].tokens[0], 0, 1 << 20);
    Digraph g(static_cast<std::size_t>(n));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        detail::expect_tokens(line, 2, "edge 'u v'");
        const auto u = detail::parse_integer(line, line.tokens[0], 0, n - 1);
        const auto v = detail::parse_integer(line, line.tokens[1], 0, n - 1);
        if (u == v) throw ParseError(line.number, line.tokens[0].column, "loop edge");
        if (!g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
            throw ParseError(line.number, line.tokens[0].column, "duplicate edge");
    }
    return g;
}

inline Digraph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

inline std::string format_graph(const Digraph& g) {
    std::string out = std::to_string(g.vertex_count()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace kdp
