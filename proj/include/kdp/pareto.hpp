#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kdp/digraph.hpp"
#include "kdp/error.hpp"

namespace kdp {

/// k-tuple of nonnegative integers: path sizes of a linkage, or an edge weight.
class QualityVector {
public:
    QualityVector() = default;
    explicit QualityVector(std::size_t arity) : c_(arity, 0) {}
    QualityVector(std::initializer_list<int> cs) : c_(cs) {}
    explicit QualityVector(std::vector<int> cs) : c_(std::move(cs)) {}
    explicit QualityVector(std::span<const int> cs) : c_(cs.begin(), cs.end()) {}

    std::size_t size() const noexcept { return c_.size(); }
    int operator[](std::size_t i) const { return c_[i]; }
    int& operator[](std::size_t i) { return c_[i]; }
    auto begin() const noexcept { return c_.begin(); }
    auto end() const noexcept { return c_.end(); }
    std::span<const int> components() const noexcept { return c_; }

    long long sum() const noexcept { return std::accumulate(c_.begin(), c_.end(), 0LL); }

    /// Member of K_n: nonnegative components summing to at most n.
    bool in_k(long long n) const noexcept {
        return std::all_of(c_.begin(), c_.end(), [](int x) { return x >= 0; }) && sum() <= n;
    }

    QualityVector& operator+=(const QualityVector& o) {
        check_arity(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }

    friend QualityVector operator+(QualityVector a, const QualityVector& b) { return a += b; }
    friend bool operator==(const QualityVector&, const QualityVector&) = default;
    friend auto operator<=>(const QualityVector&, const QualityVector&) = default;

    void check_arity(const QualityVector& o) const {
        if (o.size() != size())
            throw InvalidInput("arity mismatch: " + std::to_string(size()) + " vs " +
                               std::to_string(o.size()));
    }

    /// Components separated by single spaces.
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(c_[i]);
        }
        return s;
    }

private:
    std::vector<int> c_;
};

/// x <= y component-wise.
inline bool dominated(const QualityVector& x, const QualityVector& y) {
    x.check_arity(y);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] > y[i]) return false;
    return true;
}

/// x <= y and x != y.
inline bool strictly_dominated(const QualityVector& x, const QualityVector& y) {
    return dominated(x, y) && x != y;
}

/// Antichain of quality vectors under component-wise order, iterated in
/// lexicographic order.
class ParetoSet {
public:
    ParetoSet() = default;

    std::size_t size() const noexcept { return v_.size(); }
    bool empty() const noexcept { return v_.empty(); }
    auto begin() const noexcept { return v_.begin(); }
    auto end() const noexcept { return v_.end(); }
    const QualityVector& operator[](std::size_t i) const { return v_[i]; }
    const std::vector<QualityVector>& vectors() const noexcept { return v_; }

    bool contains(const QualityVector& x) const { return std::binary_search(v_.begin(), v_.end(), x); }

    /// Some member is <= x.
    bool covers(const QualityVector& x) const {
        return std::any_of(v_.begin(), v_.end(), [&](const auto& y) { return dominated(y, x); });
    }

    /// Adds x unless it is dominated by (or equal to) a member; drops members x dominates.
    bool insert(const QualityVector& x) {
        if (!v_.empty()) v_.front().check_arity(x);
        if (covers(x)) return false;
        std::erase_if(v_, [&](const auto& y) { return dominated(x, y); });
        v_.insert(std::upper_bound(v_.begin(), v_.end(), x), x);
        return true;
    }

    bool is_antichain() const {
        for (std::size_t i = 0; i < v_.size(); ++i)
            for (std::size_t j = 0; j < v_.size(); ++j)
                if (i != j && dominated(v_[i], v_[j])) return false;
        return std::is_sorted(v_.begin(), v_.end());
    }

    friend bool operator==(const ParetoSet&, const ParetoSet&) = default;

private:
    friend ParetoSet minimal_set(std::vector<QualityVector> vs);
    std::vector<QualityVector> v_;
};

/// The antichain of <=-minimal members of vs.
inline ParetoSet minimal_set(std::vector<QualityVector> vs) {
    for (const auto& x : vs) vs.front().check_arity(x);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    // A strict dominator is lexicographically smaller, so it is already kept.
    ParetoSet out;
    for (auto& x : vs) {
        const bool beaten = std::any_of(out.v_.begin(), out.v_.end(),
                                        [&](const auto& y) { return dominated(y, x); });
        if (!beaten) out.v_.push_back(std::move(x));
    }
    return out;
}

inline std::string format_pareto(const ParetoSet& s) {
    std::string out;
    for (const auto& x : s) out += x.to_string() + "\n";
    return out;
}

/// Digraph with distinguished source/sink and a k-vector weight on each edge.
/// Weights live in one flat array to keep large trackers compact.
class WeightedDigraph {
public:
    WeightedDigraph() = default;
    WeightedDigraph(std::size_t vertices, std::size_t arity, Vertex source, Vertex sink)
        : n_(vertices), k_(arity), source_(source), sink_(sink) {
        if (source >= vertices || sink >= vertices) throw InvalidInput("terminal out of range");
        if (source == sink) throw InvalidInput("source and sink must differ");
    }

    /// Edges added in increasing (tail, head) order are appended in O(1);
    /// out-of-order insertions fall back to a linear duplicate scan.
    void add_edge(Vertex u, Vertex v, std::span<const int> weight) {
        if (u >= n_ || v >= n_) throw InvalidInput("edge endpoint out of range");
        if (u == v) throw InvalidInput("loop edge");
        if (weight.size() != k_) throw InvalidInput("edge weight has wrong arity");
        const std::pair<Vertex, Vertex> key{u, v};
        if (!sorted_ || (!edges_.empty() && !(edges_.back() < key))) {
            if (std::find(edges_.begin(), edges_.end(), key) != edges_.end())
                throw InvalidInput("parallel edge");
            sorted_ = false;
        }
        edges_.push_back(key);
        w_.insert(w_.end(), weight.begin(), weight.end());
    }
    void add_edge(Vertex u, Vertex v, const QualityVector& weight) {
        add_edge(u, v, weight.components());
    }

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::size_t arity() const noexcept { return k_; }
    Vertex source() const noexcept { return source_; }
    Vertex sink() const noexcept { return sink_; }

    std::pair<Vertex, Vertex> edge(std::size_t e) const { return edges_[e]; }
    std::span<const int> weight(std::size_t e) const { return {w_.data() + e * k_, k_}; }
    QualityVector weight_vector(std::size_t e) const { return QualityVector(weight(e)); }

    bool has_edge(Vertex u, Vertex v) const { return find_edge(u, v).has_value(); }

    std::optional<std::size_t> find_edge(Vertex u, Vertex v) const {
        const std::pair<Vertex, Vertex> key{u, v};
        if (sorted_) {
            auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
            if (it == edges_.end() || *it != key) return std::nullopt;
            return static_cast<std::size_t>(it - edges_.begin());
        }
        auto it = std::find(edges_.begin(), edges_.end(), key);
        if (it == edges_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - edges_.begin());
    }

    /// Edge ids grouped by head vertex, each group ordered by tail vertex id.
    std::vector<std::vector<std::size_t>> in_edges() const {
        std::vector<std::vector<std::size_t>> in(n_);
        std::vector<std::size_t> order(edges_.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return edges_[a] < edges_[b]; });
        for (std::size_t e : order) in[edges_[e].second].push_back(e);
        return in;
    }

    std::vector<std::vector<Vertex>> out_adjacency() const {
        std::vector<std::vector<Vertex>> out(n_);
        for (auto [u, v] : edges_) out[u].push_back(v);
        for (auto& row : out) std::sort(row.begin(), row.end());
        return out;
    }

private:
    std::size_t n_ = 0;
    std::size_t k_ = 0;
    Vertex source_ = 0;
    Vertex sink_ = 0;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<int> w_;
    bool sorted_ = true;
};

/// Per-vertex label sets Q_i(v) of the vector shortest-path iteration.
using LabelMap = std::vector<ParetoSet>;

/// Label-correcting search for the minimal weight vectors of source->sink
/// paths. Round i computes, for every vertex v, the minimal members of K_n
/// among Q_{i-1}(v) and l(uv) + x for x in Q_{i-1}(u). Rounds use the frozen
/// labels of the previous round, run at most |V| times and stop early at a
/// fixpoint. Every label keeps the (edge, label) it was first derived from,
/// which is enough to rebuild a witness path.
class ParetoSearch {
public:
    using RoundObserver = std::function<void(std::size_t round, const LabelMap&)>;

    ParetoSearch(const WeightedDigraph& g, long long cap) : g_(&g), cap_(cap) {
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            const QualityVector w = g.weight_vector(e);
            if (!w.in_k(cap))
                throw InvalidInput("edge weight (" + w.to_string() + ") outside K_" +
                                   std::to_string(cap));
        }
    }

    void run(const RoundObserver& observer = {}) {
        const std::size_t n = g_->vertex_count();
        const std::size_t k = g_->arity();
        const auto in = g_->in_edges();
        arena_.clear();
        records_.clear();
        std::vector<std::vector<std::size_t>> cur(n), next(n);
        cur[g_->source()].push_back(new_label(std::vector<int>(k, 0), kNone, kNone));
        if (observer) observer(0, snapshot(cur));

        std::vector<int> cand(k);
        rounds_ = 0;
        stabilized_ = false;
        for (std::size_t round = 1; round <= n; ++round) {
            bool changed = false;
            for (std::size_t v = 0; v < n; ++v) {
                auto& dst = next[v];
                dst = cur[v];
                for (std::size_t e : in[v]) {
                    const Vertex u = g_->edge(e).first;
                    const auto w = g_->weight(e);
                    for (std::size_t lab : cur[u]) {
                        const int* x = value(lab);
                        long long total = 0;
                        for (std::size_t i = 0; i < k; ++i) {
                            cand[i] = w[i] + x[i];
                            total += cand[i];
                        }
                        if (total > cap_) continue;
                        if (offer(dst, cand)) {
                            dst.push_back(new_label(cand, e, lab));
                            changed = true;
                        }
                    }
                }
            }
            std::swap(cur, next);
            rounds_ = round;
            if (observer) observer(round, snapshot(cur));
            if (!changed) {
                stabilized_ = true;
                break;
            }
        }
        final_ = std::move(cur);
    }

    std::size_t rounds() const noexcept { return rounds_; }
    bool stabilized() const noexcept { return stabilized_; }

    ParetoSet labels_at(Vertex v) const { return to_set(final_.at(v)); }
    ParetoSet frontier() const { return labels_at(g_->sink()); }

    /// A simple source->sink path whose weight sum equals target.
    std::vector<Vertex> witness(const QualityVector& target) const {
        if (target.size() != g_->arity()) throw InvalidInput("target has wrong arity");
        std::size_t lab = kNone;
        for (std::size_t id : final_.at(g_->sink()))
            if (std::equal(target.begin(), target.end(), value(id))) lab = id;
        if (lab == kNone) throw NotFound("vector (" + target.to_string() + ") is not in the frontier");

        std::vector<Vertex> path{g_->sink()};
        QualityVector total(g_->arity());
        while (records_[lab].edge != kNone) {
            const std::size_t e = records_[lab].edge;
            total += g_->weight_vector(e);
            path.push_back(g_->edge(e).first);
            lab = records_[lab].pred;
        }
        std::reverse(path.begin(), path.end());
        if (path.front() != g_->source())
            throw InvariantViolation("witness does not start at the source");
        std::vector<Vertex> sorted = path;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InvariantViolation("witness walk repeats a vertex");
        if (total != target) throw InvariantViolation("witness weight differs from its label");
        return path;
    }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    struct Record {
        std::size_t edge;
        std::size_t pred;
    };

    std::size_t new_label(std::span<const int> v, std::size_t edge, std::size_t pred) {
        arena_.insert(arena_.end(), v.begin(), v.end());
        records_.push_back({edge, pred});
        return records_.size() - 1;
    }

    const int* value(std::size_t lab) const { return arena_.data() + lab * g_->arity(); }

    bool leq(const int* a, const int* b) const {
        for (std::size_t i = 0; i < g_->arity(); ++i)
            if (a[i] > b[i]) return false;
        return true;
    }

    /// True if cand is not covered by dst; in that case the members it
    /// dominates are removed and the caller appends it.
    bool offer(std::vector<std::size_t>& dst, std::span<const int> cand) const {
        for (std::size_t lab : dst)
            if (leq(value(lab), cand.data())) return false;
        std::erase_if(dst, [&](std::size_t lab) { return leq(cand.data(), value(lab)); });
        return true;
    }

    ParetoSet to_set(const std::vector<std::size_t>& labs) const {
        ParetoSet s;
        for (std::size_t lab : labs) s.insert(QualityVector(std::span<const int>(value(lab), g_->arity())));
        return s;
    }

    LabelMap snapshot(const std::vector<std::vector<std::size_t>>& cur) const {
        LabelMap m;
        m.reserve(cur.size());
        for (const auto& labs : cur) m.push_back(to_set(labs));
        return m;
    }

    const WeightedDigraph* g_;
    long long cap_;
    std::vector<int> arena_;
    std::vector<Record> records_;
    std::vector<std::vector<std::size_t>> final_;
    std::size_t rounds_ = 0;
    bool stabilized_ = false;
};

/// Minimal weight vectors (restricted to K_n) over all source->sink paths.
inline ParetoSet vector_shortest_paths(const WeightedDigraph& g, long long n) {
    ParetoSearch search(g, n);
    search.run();
    return search.frontier();
}

inline std::vector<Vertex> reconstruct_witness(const WeightedDigraph& g, long long n,
                                               const QualityVector& target) {
    ParetoSearch search(g, n);
    search.run();
    return search.witness(target);
}

}  // namespace kdp
