// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "kdp/kdp.hpp"
#include "support.hpp"

namespace {

using namespace kdp;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
    return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Tally {
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string first_failure;

    void fail(const std::string& what) {
        if (failures++ == 0) first_failure = what;
    }
    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok) fail(what);
    }
};

std::string describe(const ProblemInstance& inst) {
    std::ostringstream s;
    s << "n=" << inst.vertex_count() << " terminals=";
    for (const auto& [a, b] : inst.terminals()) s << "(" << a << "," << b << ")";
    s << " edges=";
    for (auto [u, v] : inst.graph().edges()) s << u << ">" << v << " ";
    return s.str();
}

// Shared bookkeeping for criteria 5 and 6, fed by every tracker built in 1-3.
struct TrackerAudit {
    Tally bound;
    Tally accounting;
    std::size_t paths = 0;
    Random rng{0xACCE55};

    void audit(const ProblemInstance& inst, const Tracker& t) {
        bound.expect(within_rail_count_bound(t.rails.size(), inst.vertex_count(), inst.k(), t.m, t.c),
                     "rail count " + std::to_string(t.rails.size()) + " above bound on " + describe(inst));
        ++accounting.checked;
        for (const auto& p : testing::sample_tracker_paths(t, 50, rng)) {
            ++paths;
            try {
                const Linkage l = trace_path(inst, t, p);
                if (!validate_linkage_for(inst, l)) {
                    accounting.fail("invalid traced linkage on " + describe(inst));
                    return;
                }
                if (path_weight(t, p) != l.quality()) {
                    accounting.fail("weight sum differs from traced quality on " + describe(inst));
                    return;
                }
            } catch (const Error& e) {
                accounting.fail(std::string(e.what()) + " on " + describe(inst));
                return;
            }
        }
    }
};

void report(int id, const std::string& name, const Tally& t, const std::string& detail, bool& all_ok) {
    const bool ok = t.failures == 0 && t.checked > 0;
    all_ok = all_ok && ok;
    std::cout << "criterion " << id << " " << (ok ? "PASS" : "FAIL") << ": " << name << " (" << detail;
    if (t.failures) std::cout << "; " << t.failures << " failures, first: " << t.first_failure;
    std::cout << ")" << std::endl;
}

SolverParams keep_tracker() {
    SolverParams p;
    p.keep_tracker = true;
    return p;
}

// ---------------------------------------------------------------------------

struct OneResult {
    Tally equivalence;
    Tally structure;
    std::size_t instances = 0;
    std::size_t evidence = 0;
    double seconds = 0;
};

void compare_and_collect(const ProblemInstance& inst, OneResult& r, TrackerAudit& audit) {
    ++r.instances;
    const auto res = key_qualities(inst, keep_tracker());
    audit.audit(inst, *res.tracker);
    const OracleKeySet oracle = oracle_key_linkages(inst);
    r.equivalence.expect(res.key_qualities == oracle.key_qualities,
                         "key set (" + format_pareto(res.key_qualities) + ") vs oracle (" +
                             format_pareto(oracle.key_qualities) + ") on " + describe(inst));
    for (const auto& [q, linkages] : oracle.evidence)
        for (const Linkage& l : linkages) {
            ++r.evidence;
            const auto en = acceptable_enumeration(inst, l);
            if (!en) {
                r.structure.expect(false, "enumeration stuck at " + format_path(Path(en.stuck)) + " for " +
                                              format_path(l[0]) + " on " + describe(inst));
                continue;
            }
            r.structure.expect(check_enumeration_bound(inst, l, en.order).holds,
                               "enumeration bound violated on " + describe(inst));
        }
}

OneResult criterion_one(TrackerAudit& audit) {
    const auto start = Clock::now();
    OneResult r;
    auto all_pairs = [&](const Digraph& g) {
        const auto n = static_cast<Vertex>(g.vertex_count());
        for (Vertex s = 0; s < n; ++s)
            for (Vertex t = 0; t < n; ++t) compare_and_collect(ProblemInstance(g, {{s, t}}), r, audit);
    };
    for (std::size_t n = 1; n <= 4; ++n) testing::for_each_tournament(n, all_pairs);
    Random rng(1);
    for (int i = 0; i < 300; ++i) all_pairs(random_tournament(1 + rng.below(6), rng));
    r.seconds = seconds_since(start);
    return r;
}

struct TwoResult {
    Tally equivalence;
    std::size_t instances = 0;
    std::size_t skipped = 0;
    double seconds = 0;
};

TwoResult criterion_two(TrackerAudit& audit) {
    const auto start = Clock::now();
    TwoResult r;
    Random rng(2);
    const auto placements = testing::distinct_placements(5, 2);
    for (int i = 0; i < 100; ++i) {
        const Digraph g = random_tournament(5, rng);
        for (const auto& terminals : placements) {
            ++r.instances;
            const ProblemInstance inst(g, terminals);
            const auto deadline = Clock::now() + std::chrono::seconds(60);
            SolverParams params = keep_tracker();
            params.limits.expired = [deadline] { return Clock::now() > deadline; };
            OracleBudget budget;
            budget.time_limit = std::chrono::seconds(60);
            try {
                const auto res = key_qualities(inst, params);
                audit.audit(inst, *res.tracker);
                const auto oracle = oracle_key_qualities(inst, budget);
                r.equivalence.expect(res.key_qualities == oracle,
                                     "key set (" + format_pareto(res.key_qualities) + ") vs oracle (" +
                                         format_pareto(oracle) + ") on " + describe(inst));
            } catch (const BudgetExceeded&) {
                ++r.skipped;
            }
        }
    }
    if (r.skipped * 10 > r.instances) r.equivalence.fail("more than 10% of instances skipped");
    r.seconds = seconds_since(start);
    return r;
}

struct ThreeResult {
    Tally soundness;
    std::size_t vectors = 0;
    double seconds = 0;
};

ThreeResult criterion_three(TrackerAudit& audit) {
    const auto start = Clock::now();
    ThreeResult r;
    Random rng(3);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 2 + rng.below(7);
        const std::size_t k = 1 + rng.below(std::min<std::size_t>(2, n / 2));
        const ProblemInstance inst(random_digraph(n, rng), random_terminals(n, k, rng));
        SolverParams params = keep_tracker();
        params.m = 1 + static_cast<int>(rng.below(3));
        params.c = static_cast<int>(rng.below(3));
        params.check_dominance = false;
        params.emit_witness = true;
        try {
            const auto res = key_qualities(inst, params);
            audit.audit(inst, *res.tracker);
            r.soundness.expect(res.key_qualities.is_antichain(), "output not an antichain on " + describe(inst));
            for (const auto& q : res.key_qualities) {
                ++r.vectors;
                const Linkage& l = res.witnesses.at(q);
                r.soundness.expect(validate_linkage_for(inst, l) && l.quality() == q,
                                   "witness for (" + q.to_string() + ") fails on " + describe(inst));
            }
        } catch (const Error& e) {
            r.soundness.expect(false, std::string(e.what()) + " on " + describe(inst));
        }
    }
    r.seconds = seconds_since(start);
    return r;
}

struct FourResult {
    Tally equivalence;
    double seconds = 0;
};

FourResult criterion_four() {
    const auto start = Clock::now();
    FourResult r;
    Random rng(4);
    for (int i = 0; i < 200; ++i) {
        const WeightedDigraph g = testing::random_weighted_digraph(2 + rng.below(7), 1 + rng.below(3), rng);
        const auto fast = vector_shortest_paths(g, 10);
        const auto slow = oracle_pareto_paths(g, {}, 10);
        r.equivalence.expect(fast == slow, "graph " + std::to_string(i) + ": (" + format_pareto(fast) +
                                               ") vs (" + format_pareto(slow) + ")");
    }
    r.seconds = seconds_since(start);
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 8: the small hand-checkable examples of every module.

struct Examples {
    Tally tally;

    void check(const std::string& name, const std::function<bool()>& fn) {
        bool ok = false;
        try {
            ok = fn();
        } catch (const std::exception& e) {
            tally.expect(false, name + " threw: " + e.what());
            return;
        }
        tally.expect(ok, name);
    }

    template <typename E>
    void check_throws(const std::string& name, const std::function<void()>& fn) {
        try {
            fn();
        } catch (const E&) {
            tally.expect(true, name);
            return;
        } catch (const std::exception& e) {
            tally.expect(false, name + " threw the wrong error: " + e.what());
            return;
        }
        tally.expect(false, name + " did not throw");
    }
};

int run_cli(const std::string& args, std::string& out) {
    const std::string cmd = std::string(KDP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return -1;
    out.clear();
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    const int status = pclose(pipe);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Tally criterion_eight() {
    using Q = QualityVector;
    Examples ex;
    const Digraph cycle = testing::three_cycle();

    // digraph
    ex.check("3-cycle is semicomplete", [&] { return is_semicomplete(cycle); });
    ex.check("two isolated vertices are not semicomplete", [] { return !is_semicomplete(Digraph(2)); });
    ex.check("single vertex is semicomplete", [] { return is_semicomplete(Digraph(1)); });
    ex.check("chordless path is minimal", [] { return is_minimal_path(Digraph(3, {{0, 1}, {1, 2}}), Path{0, 1, 2}); });
    ex.check("forward chord breaks minimality",
             [] { return !is_minimal_path(Digraph(3, {{0, 1}, {1, 2}, {0, 2}}), Path{0, 1, 2}); });
    ex.check("backward edge keeps minimality",
             [] { return is_minimal_path(Digraph(3, {{0, 1}, {1, 2}, {2, 0}}), Path{0, 1, 2}); });
    ex.check_throws<InvalidInput>("minimality of a non-path", [] { is_minimal_path(Digraph(2), Path{0, 1}); });
    ex.check("isolated pair is not 1-path-dominant", [] { return !is_d_path_dominant(Digraph(2), 1); });
    ex.check("semicomplete graph is 1-path-dominant", [&] { return is_d_path_dominant(cycle, 1); });
    ex.check("complete bipartite orientation is 2-path-dominant", [] {
        return is_d_path_dominant(Digraph(5, {{0, 3}, {4, 0}, {1, 3}, {1, 4}, {3, 2}, {4, 2}}), 2);
    });
    ex.check_throws<InvalidInput>("d = 0 rejected", [] { is_d_path_dominant(Digraph(2), 0); });
    ex.check("empty F is inward and outward", [] {
        const Digraph g(2, {{0, 1}});
        return is_inward(g, {}, 1) && is_outward(g, {}, 1);
    });
    ex.check("u->v: v not {u}-inward but {u}-outward", [] {
        const Digraph g(2, {{0, 1}});
        const std::vector<Vertex> f{0};
        return !is_inward(g, f, 1) && is_outward(g, f, 1);
    });
    ex.check("u<->v: neither", [] {
        const Digraph g(2, {{0, 1}, {1, 0}});
        const std::vector<Vertex> f{0};
        return !is_inward(g, f, 1) && !is_outward(g, f, 1);
    });
    ex.check_throws<InvalidInput>("v in F rejected", [] {
        const std::vector<Vertex> f{0};
        is_inward(Digraph(2), f, 0);
    });

    // rails
    const ProblemInstance two_pairs(Digraph(4, {{0, 1}, {2, 3}, {1, 3}}), {{0, 1}, {2, 3}});
    ex.check("two single-edge paths form a linkage",
             [&] { return validate_linkage_for(two_pairs, Linkage{Path{0, 1}, Path{2, 3}}); });
    ex.check("shared vertex is not a linkage",
             [&] { return !validate_linkage(two_pairs, Linkage{Path{0, 1, 3}, Path{2, 3}}); });
    ex.check("path ending at t_2 is not a linkage for the instance",
             [&] { return !validate_linkage_for(two_pairs, Linkage{Path{1, 3}, Path{0}}); });
    ex.check("A empty when members end at targets",
             [&] { return compute_a(ProblemInstance(cycle, {{0, 2}}), Linkage{Path{1, 2}}) == 0; });
    ex.check("single-vertex member at s_1 makes A everything else",
             [&] { return compute_a(ProblemInstance(cycle, {{0, 2}}), Linkage{Path{0}}) == (bit(1) | bit(2)); });
    ex.check("confusion 0 for a full s-t member",
             [&] { return confusion(ProblemInstance(cycle, {{0, 1}}), Linkage{Path{0, 1}}) == 0; });
    ex.check("confusion 0 when the linkage covers V(G)",
             [&] { return confusion(ProblemInstance(cycle, {{0, 1}}), Linkage{Path{2, 0, 1}}) == 0; });
    const ProblemInstance edge(Digraph(2, {{0, 1}}), {{0, 1}});
    ex.check("single-edge rails", [&] {
        const std::vector<Rail> expected{Rail(Linkage{Path{0}}, bit(1), 0), Rail(Linkage{Path{0, 1}}, 0, 0),
                                         Rail(Linkage{Path{1}}, 0, bit(0))};
        return enumerate_rails(edge, 1, 0) == expected && oracle_rails(edge, 1, 0) == expected;
    });
    const ProblemInstance path3(Digraph(3, {{0, 1}, {1, 2}}), {{0, 2}});
    const Rail r1(Linkage{Path{0, 1}}, bit(2), 0);
    const Rail r2(Linkage{Path{1, 2}}, 0, bit(0));
    ex.check("arrow is irreflexive", [&] { return !rail_arrow(path3, r1, r1); });
    ex.check("arrow needs X' inside X", [&] { return !rail_arrow(path3, r2, r1); });
    ex.check("hand-built arrow", [&] { return rail_arrow(path3, r1, r2) && oracle_rail_arrow(r1, r2); });

    // tracker
    ex.check("single-edge tracker", [&] {
        const Tracker t = build_tracker(edge, 1, 0);
        return t.graph.edge_count() == 6 && oracle_tracker_edges(edge, t.rails).size() == 6 &&
               vector_shortest_paths(t.graph, 2) == minimal_set({Q{2}});
    });
    ex.check("s0 isolated without source rails", [&] {
        std::vector<Rail> rails;
        for (Rail& r : enumerate_rails(edge, 1, 0))
            if (r.member(0).source() != 0) rails.push_back(std::move(r));
        const Tracker t = build_tracker_from_rails(edge, rails, 1, 0);
        for (std::size_t e = 0; e < t.graph.edge_count(); ++e)
            if (t.graph.edge(e).first == t.s0()) return false;
        return true;
    });
    ex.check("trace of s0, r, t0 is r's linkage", [&] {
        const Tracker t = build_tracker(edge, 1, 0);
        const std::vector<Vertex> p{t.s0(), 2, t.t0()};
        return trace_path(edge, t, p) == t.rails[1].linkage();
    });

    // pareto
    ex.check("(1,2) <= (1,2), not strictly", [] { return dominated(Q{1, 2}, Q{1, 2}) && !strictly_dominated(Q{1, 2}, Q{1, 2}); });
    ex.check("(1,3), (2,2) incomparable", [] { return !dominated(Q{1, 3}, Q{2, 2}); });
    ex.check("zero vector dominates", [] { return dominated(Q{0, 0}, Q{5, 1}); });
    ex.check_throws<InvalidInput>("arity mismatch", [] { dominated(Q{1}, Q{1, 1}); });
    ex.check("minimal_set example",
             [] { return minimal_set({Q{1, 3}, Q{2, 2}, Q{3, 1}, Q{2, 3}}) == minimal_set({Q{1, 3}, Q{2, 2}, Q{3, 1}}) &&
                         minimal_set({Q{1, 3}, Q{2, 2}, Q{3, 1}, Q{2, 3}}).size() == 3; });
    ex.check("minimal_set of nothing", [] { return minimal_set({}).empty(); });
    ex.check("minimal_set k=1", [] { return minimal_set({Q{5}, Q{3}, Q{4}}).vectors() == std::vector<Q>{Q{3}}; });
    ex.check("no s0-t0 path gives empty frontier", [] {
        WeightedDigraph g(3, 1, 0, 2);
        g.add_edge(0, 1, Q{1});
        return vector_shortest_paths(g, 3).empty() && oracle_pareto_paths(g).empty();
    });
    ex.check("zero edge gives zero vector", [] {
        WeightedDigraph g(2, 2, 0, 1);
        g.add_edge(0, 1, Q{0, 0});
        return oracle_pareto_paths(g).vectors() == std::vector<Q>{(Q{0, 0})};
    });
    ex.check("incomparable routes kept, dominated route ignored", [] {
        WeightedDigraph g(6, 2, 0, 5);
        g.add_edge(0, 1, Q{2, 1});
        g.add_edge(0, 2, Q{1, 1});
        g.add_edge(0, 3, Q{1, 1});
        g.add_edge(1, 5, Q{1, 0});
        g.add_edge(2, 5, Q{0, 2});
        g.add_edge(3, 4, Q{1, 1});
        g.add_edge(4, 5, Q{1, 0});
        return vector_shortest_paths(g, 10).vectors() == std::vector<Q>{Q{1, 3}, Q{3, 1}};
    });
    ex.check("sums leaving K_n are discarded", [] {
        WeightedDigraph g(3, 2, 0, 2);
        g.add_edge(0, 1, Q{1, 1});
        g.add_edge(1, 2, Q{1, 1});
        return vector_shortest_paths(g, 3).empty();
    });
    ex.check_throws<InvalidInput>("weights outside K_n rejected", [] {
        WeightedDigraph g(2, 2, 0, 1);
        g.add_edge(0, 1, Q{2, 2});
        vector_shortest_paths(g, 3);
    });
    ex.check("witness of a direct route", [] {
        WeightedDigraph g(3, 1, 0, 2);
        g.add_edge(0, 1, Q{2});
        g.add_edge(1, 2, Q{0});
        return reconstruct_witness(g, 5, Q{2}) == std::vector<Vertex>{0, 1, 2};
    });
    ex.check_throws<NotFound>("witness of a missing vector", [] {
        WeightedDigraph g(2, 1, 0, 1);
        g.add_edge(0, 1, Q{1});
        reconstruct_witness(g, 5, Q{2});
    });

    // solver
    ex.check("3-cycle s=a t=b gives {(2)}",
             [&] { return key_qualities(ProblemInstance(cycle, {{0, 1}})).key_qualities.vectors() == std::vector<Q>{Q{2}}; });
    ex.check("3-cycle s=b t=a gives {(3)}",
             [&] { return key_qualities(ProblemInstance(cycle, {{1, 0}})).key_qualities.vectors() == std::vector<Q>{Q{3}}; });
    ex.check("s_i = t_i gives (1,...,1)", [] {
        Random rng(8);
        const auto res = key_qualities(ProblemInstance(random_tournament(5, rng), {{0, 0}, {2, 2}}));
        return res.key_qualities.vectors() == std::vector<Q>{(Q{1, 1})};
    });
    ex.check_throws<PreconditionError>("k=2 with 4 distinct terminals on 3 vertices",
                                       [&] { ProblemInstance(cycle, {{0, 1}, {2, 0}}); });
    ex.check("bounds (2) -> no, (3) -> yes", [&] {
        const ProblemInstance ba(cycle, {{1, 0}});
        return !has_bounded_linkage(ba, {}, {2}) && has_bounded_linkage(ba, {}, {3});
    });
    ex.check("bounds (n,...,n) equal has_linkage", [&] {
        const ProblemInstance ab(cycle, {{0, 1}});
        return has_bounded_linkage(ab, {}, {3}) == has_linkage(ab);
    });
    ex.check("k = 0 gives {()}",
             [&] { return key_qualities(ProblemInstance(cycle, {})).key_qualities.vectors() == std::vector<Q>{Q{}}; });

    // oracle
    ex.check("oracle on a single edge", [&] { return oracle_key_qualities(edge).vectors() == std::vector<Q>{Q{2}}; });
    ex.check("oracle without a linkage",
             [] { return oracle_key_qualities(ProblemInstance(Digraph(4, {{0, 1}, {1, 3}, {2, 0}}), {{0, 3}, {1, 2}})).empty(); });
    const Path q{0, 1};
    const Path r{2, 3};
    const Linkage qr{Path{0, 1}, Path{2, 3}};
    ex.check("no Q-R connections", [&] { return oracle_max_planar_matching(Digraph(4, {{0, 1}, {2, 3}}), q, r, qr) == 0; });
    ex.check("order-respecting pair", [&] {
        return oracle_max_planar_matching(Digraph(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}}), q, r, qr) == 2;
    });
    ex.check("crossing pair", [&] {
        return oracle_max_planar_matching(Digraph(4, {{0, 1}, {2, 3}, {0, 3}, {1, 2}}), q, r, qr) == 1;
    });

    // diagnostics
    const ProblemInstance ba(cycle, {{1, 0}});
    const Linkage bca{Path{1, 2, 0}};
    ex.check("empty B acceptable", [&] { return is_acceptable(ba, bca, {}).acceptable(); });
    ex.check("B = V(L) acceptable", [&] { return is_acceptable(ba, bca, {0, 1, 2}).acceptable(); });
    ex.check("B missing a predecessor", [&] { return !is_acceptable(ba, bca, {2}).prefix_closed; });
    ex.check_throws<InvalidInput>("B outside V(L)",
                                  [&] { is_acceptable(ProblemInstance(cycle, {{0, 1}}), Linkage{Path{0, 1}}, {2}); });
    ex.check("single minimal path enumerates in order",
             [&] { return acceptable_enumeration(ba, bca).order == std::vector<Vertex>{1, 2, 0}; });
    ex.check("short paths make the bound vacuous", [&] { return check_enumeration_bound(ba, bca, {1, 2, 0}).holds; });
    ex.check_throws<InvalidInput>("invalid order", [&] { check_enumeration_bound(ba, bca, {2, 1, 0}); });

    // cli
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "kdp_acceptance";
    fs::create_directories(dir);
    std::ofstream(dir / "cycle.graph") << "3\n0 1\n1 2\n2 0\n";
    std::ofstream(dir / "ba.inst") << "1 1\n1 0\n";
    const std::string files =
        "--graph " + (dir / "cycle.graph").string() + " --instance " + (dir / "ba.inst").string();
    ex.check("cli solve prints 3", [&] {
        std::string out;
        return run_cli("solve " + files, out) == 0 && out == "3\n";
    });
    ex.check("cli gen is deterministic", [&] {
        std::string a, b;
        return run_cli("gen --seed 11 --n 6 --k 2", a) == 0 && run_cli("gen --seed 11 --n 6 --k 2", b) == 0 &&
               a == b && !a.empty();
    });
    ex.check("cli bounded below every key quality prints no", [&] {
        std::string out;
        return run_cli("bounded --bounds 2 " + files, out) == 0 && out == "no\n";
    });
    fs::remove_all(dir);
    return ex.tally;
}

}  // namespace

int main() {
    bool all_ok = true;
    TrackerAudit audit;

    const OneResult one = criterion_one(audit);
    report(1, "oracle equivalence, k=1", one.equivalence,
           std::to_string(one.instances) + " instances, " + std::to_string(one.seconds) + " s", all_ok);

    const TwoResult two = criterion_two(audit);
    const auto params2 = default_rail_parameters(2, 1);
    report(2, "oracle equivalence, k=2", two.equivalence,
           std::to_string(two.instances) + " instances, " + std::to_string(two.skipped) + " skipped, m=" +
               std::to_string(params2.m) + " c=" + std::to_string(params2.c) + ", " +
               std::to_string(two.seconds) + " s",
           all_ok);

    const ThreeResult three = criterion_three(audit);
    report(3, "soundness under small (m,c)", three.soundness,
           std::to_string(three.vectors) + " output vectors, " + std::to_string(three.seconds) + " s", all_ok);

    const FourResult four = criterion_four();
    report(4, "vector shortest paths vs exhaustive paths", four.equivalence,
           "200 graphs, " + std::to_string(four.seconds) + " s", all_ok);

    report(5, "rail-count bound", audit.bound, std::to_string(audit.bound.checked) + " enumerations", all_ok);
    report(6, "tracker accounting", audit.accounting,
           std::to_string(audit.accounting.checked) + " trackers, " + std::to_string(audit.paths) + " paths",
           all_ok);
    report(7, "acceptable enumerations and bound on key linkages", one.structure,
           std::to_string(one.evidence) + " evidence linkages", all_ok);

    const Tally eight = criterion_eight();
    report(8, "hand-checkable examples", eight, std::to_string(eight.checked) + " examples", all_ok);

    return all_ok ? 0 : 1;
}
