#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "kdp/digraph.hpp"
#include "kdp/error.hpp"
#include "kdp/rails.hpp"

namespace kdp {

/// Reproducible randomness from one 64-bit seed.
///
/// The engine is std::mt19937_64 constructed from the seed; its output
/// sequence is fixed by the C++ standard. A coin is the top bit of one output.
/// A uniform draw below b discards outputs smaller than 2^64 mod b and returns
/// the first accepted output mod b. Nothing goes through std::*_distribution, whose
/// results differ between standard libraries.
class Random {
public:
    explicit Random(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    bool coin() { return (next() >> 63) != 0; }

    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw InvalidInput("empty range");
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t x = next();
            if (x >= threshold) return x % bound;
        }
    }

private:
    std::mt19937_64 engine_;
};

/// Orients every pair u < v (in lexicographic order) by one coin: heads u->v.
inline Digraph random_tournament(std::size_t n, Random& rng) {
    Digraph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (rng.coin())
                g.add_edge(u, v);
            else
                g.add_edge(v, u);
        }
    return g;
}

/// Each pair u < v: one draw below 8; 0 leaves it non-adjacent, 1 adds both
/// directions, 2-4 adds u->v and 5-7 adds v->u.
inline Digraph random_digraph(std::size_t n, Random& rng) {
    Digraph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            const auto r = rng.below(8);
            if (r == 1 || (r >= 2 && r <= 4)) g.add_edge(u, v);
            if (r == 1 || r >= 5) g.add_edge(v, u);
        }
    return g;
}

/// Rejection sampling over random_digraph() until the candidate is d-path-dominant.
inline Digraph random_dominant_digraph(std::size_t n, int d, Random& rng, std::size_t max_attempts = 100000) {
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        Digraph g = random_digraph(n, rng);
        if (is_d_path_dominant(g, d)) return g;
    }
    throw BudgetExceeded("no d-path-dominant candidate within the attempt limit");
}

/// k pairs with all 2k terminals distinct, via a partial Fisher-Yates shuffle
/// of 0..n-1; pair i is (v[2i], v[2i+1]).
inline std::vector<TerminalPair> random_terminals(std::size_t n, std::size_t k, Random& rng) {
    if (2 * k > n) throw InvalidInput("not enough vertices for 2k distinct terminals");
    std::vector<Vertex> v(n);
    for (Vertex i = 0; i < n; ++i) v[i] = i;
    for (std::size_t i = 0; i < 2 * k; ++i) {
        const auto j = i + static_cast<std::size_t>(rng.below(n - i));
        std::swap(v[i], v[j]);
    }
    std::vector<TerminalPair> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back({v[2 * i], v[2 * i + 1]});
    return out;
}

}  // namespace kdp
