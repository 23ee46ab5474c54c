// Command-line front end for the k disjoint paths library.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "kdp/kdp.hpp"

namespace {

enum ExitCode : int {
    kSolved = 0,
    kUsage = 1,
    kPrecondition = 2,
    kHeuristic = 3,
    kBudget = 4,
    kInternal = 5,
};

struct RunConfig {
    std::string subcommand;
    std::string graph_path;
    std::string instance_path;
    std::optional<int> m;
    std::optional<int> c;
    std::vector<int> bounds;
    std::uint64_t seed = 1;
    std::optional<std::size_t> budget_vertices;
    std::optional<double> budget_seconds;
    bool witness = false;
    bool no_check = false;
    std::string out_path;
    // gen
    std::size_t n = 6;
    std::size_t k = 1;
    int d = 1;
    std::string kind = "tournament";
};

class CliError : public std::runtime_error {
public:
    CliError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
    int code() const noexcept { return code_; }

private:
    int code_;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError(kPrecondition, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

kdp::Digraph load_graph(const RunConfig& cfg) {
    if (cfg.graph_path.empty()) throw CliError(kUsage, "--graph is required");
    try {
        return kdp::parse_graph(read_file(cfg.graph_path));
    } catch (const kdp::ParseError& e) {
        throw CliError(kPrecondition, cfg.graph_path + ": " + e.what());
    }
}

struct Loaded {
    kdp::ProblemInstance instance;
    kdp::InstanceSpec spec;
};

Loaded load_instance(const RunConfig& cfg) {
    kdp::Digraph g = load_graph(cfg);
    if (cfg.instance_path.empty()) throw CliError(kUsage, "--instance is required");
    kdp::InstanceSpec spec;
    try {
        spec = kdp::parse_instance_spec(read_file(cfg.instance_path), g.vertex_count());
    } catch (const kdp::ParseError& e) {
        throw CliError(kPrecondition, cfg.instance_path + ": " + e.what());
    }
    if (cfg.budget_vertices && g.vertex_count() > *cfg.budget_vertices)
        throw kdp::BudgetExceeded("graph exceeds --budget-vertices");
    return {kdp::ProblemInstance(std::move(g), spec.terminals, spec.d), spec};
}

kdp::OracleBudget oracle_budget(const RunConfig& cfg) {
    kdp::OracleBudget b;
    if (cfg.budget_vertices) b.max_vertices = *cfg.budget_vertices;
    if (cfg.budget_seconds) b.time_limit = std::chrono::duration<double>(*cfg.budget_seconds);
    return b;
}

kdp::SolverParams solver_params(const RunConfig& cfg) {
    kdp::SolverParams p;
    p.m = cfg.m;
    p.c = cfg.c;
    p.check_dominance = !cfg.no_check;
    p.emit_witness = cfg.witness;
    if (cfg.budget_seconds) {
        const auto deadline = std::chrono::steady_clock::now() +
                              std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                  std::chrono::duration<double>(*cfg.budget_seconds));
        p.limits.expired = [deadline] { return std::chrono::steady_clock::now() > deadline; };
    }
    return p;
}

std::string format_linkage(const kdp::Linkage& l) {
    std::string out;
    for (std::size_t j = 0; j < l.size(); ++j)
        out += "  P" + std::to_string(j + 1) + ": " + kdp::format_path(l[j]) + "\n";
    return out;
}

std::string mode_header(const kdp::SolveResult& r) {
    std::string out;
    if (r.heuristic)
        out += "# heuristic: m=" + std::to_string(r.m) + " c=" + std::to_string(r.c) +
               " (every line is a quality; key qualities may be missing)\n";
    if (r.sound_only) out += "# sound-only: d-path-dominance check waived\n";
    return out;
}

int mode_exit(const kdp::SolveResult& r) { return r.heuristic || r.sound_only ? kHeuristic : kSolved; }

int run_solve(const RunConfig& cfg, std::string& out) {
    const auto [inst, spec] = load_instance(cfg);
    const auto r = kdp::key_qualities(inst, solver_params(cfg));
    out += mode_header(r);
    for (const auto& q : r.key_qualities) {
        out += q.to_string() + "\n";
        if (cfg.witness) out += format_linkage(r.witnesses.at(q));
    }
    return mode_exit(r);
}

int run_decide(const RunConfig& cfg, std::string& out) {
    const auto [inst, spec] = load_instance(cfg);
    const auto r = kdp::key_qualities(inst, solver_params(cfg));
    out += mode_header(r);
    out += r.key_qualities.empty() ? "no\n" : "yes\n";
    if (cfg.witness && !r.key_qualities.empty()) out += format_linkage(r.witnesses.begin()->second);
    return mode_exit(r);
}

int run_bounded(const RunConfig& cfg, std::string& out) {
    const auto [inst, spec] = load_instance(cfg);
    std::vector<int> bounds = cfg.bounds;
    if (bounds.empty() && spec.bounds) bounds = *spec.bounds;
    if (bounds.empty()) throw CliError(kUsage, "bounded needs --bounds or a 'bounds' line in the instance");
    if (bounds.size() != inst.k()) throw CliError(kPrecondition, "expected one bound per terminal pair");
    for (int b : bounds)
        if (b < 1) throw CliError(kPrecondition, "bounds must be positive");
    const auto r = kdp::key_qualities(inst, solver_params(cfg));
    out += mode_header(r);
    const kdp::QualityVector limit(bounds);
    const kdp::QualityVector* hit = nullptr;
    for (const auto& q : r.key_qualities)
        if (kdp::dominated(q, limit)) {
            hit = &q;
            break;
        }
    out += hit ? "yes\n" : "no\n";
    if (hit && cfg.witness) out += format_linkage(r.witnesses.at(*hit));
    return mode_exit(r);
}

int run_oracle(const RunConfig& cfg, std::string& out) {
    const auto [inst, spec] = load_instance(cfg);
    const auto r = kdp::oracle_key_linkages(inst, oracle_budget(cfg));
    for (const auto& q : r.key_qualities) {
        out += q.to_string() + "\n";
        if (cfg.witness) out += format_linkage(r.evidence.at(q).front());
    }
    return kSolved;
}

int run_diagnose(const RunConfig& cfg, std::string& out) {
    const auto [inst, spec] = load_instance(cfg);
    const auto budget = oracle_budget(cfg);
    const auto keys = kdp::oracle_key_linkages(inst, budget);
    std::size_t index = 0;
    bool all_ok = true;
    for (const auto& [q, linkages] : keys.evidence)
        for (const auto& l : linkages) {
            out += "linkage " + std::to_string(++index) + " quality (" + q.to_string() + ")\n";
            out += format_linkage(l);
            const auto en = kdp::acceptable_enumeration(inst, l, budget);
            if (!en) {
                all_ok = false;
                out += "  enumeration: stuck at B=" + kdp::format_path(kdp::Path(en.stuck)) + "\n";
                continue;
            }
            out += "  enumeration: " + kdp::format_path(kdp::Path(en.order)) + "\n";
            const auto bound = kdp::check_enumeration_bound(inst, l, en.order);
            all_ok = all_ok && bound.holds;
            out += std::string("  bound: ") + (bound.holds ? "holds" : "VIOLATED") +
                   " (worst " + std::to_string(bound.worst) + ", bound " + std::to_string(bound.bound) +
                   ", window " + std::to_string(bound.window) + ")\n";
        }
    out += all_ok ? "summary: ok\n" : "summary: failures\n";
    return kSolved;
}

int run_gen(const RunConfig& cfg, std::string& out) {
    kdp::Random rng(cfg.seed);
    kdp::Digraph g;
    if (cfg.kind == "tournament")
        g = kdp::random_tournament(cfg.n, rng);
    else if (cfg.kind == "dominant")
        g = kdp::random_dominant_digraph(cfg.n, cfg.d, rng);
    else
        throw CliError(kUsage, "--kind must be 'tournament' or 'dominant'");
    kdp::InstanceSpec spec;
    spec.d = cfg.kind == "tournament" ? 1 : cfg.d;
    spec.terminals = kdp::random_terminals(cfg.n, cfg.k, rng);
    if (!cfg.out_path.empty()) {
        std::ofstream(cfg.out_path + ".graph", std::ios::binary) << kdp::format_graph(g);
        std::ofstream(cfg.out_path + ".inst", std::ios::binary) << kdp::format_instance_spec(spec);
        return kSolved;
    }
    out += "# graph\n" + kdp::format_graph(g) + "# instance\n" + kdp::format_instance_spec(spec);
    return kSolved;
}

int run_dump_tracker(const RunConfig& cfg, std::string& out) {
    const auto [inst, spec] = load_instance(cfg);
    if (!cfg.no_check && !kdp::is_d_path_dominant(inst.graph(), inst.d()))
        throw kdp::PreconditionError("graph is not " + std::to_string(inst.d()) + "-path-dominant");
    const auto defaults = kdp::default_rail_parameters(inst.k(), inst.d());
    const auto params = solver_params(cfg);
    const auto t = kdp::build_tracker(inst, cfg.m.value_or(defaults.m), cfg.c.value_or(defaults.c), params.limits);
    out += kdp::dump_tracker(t);
    return cfg.m || cfg.c ? kHeuristic : kSolved;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"k vertex-disjoint paths on d-path-dominant digraphs"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--graph", cfg.graph_path, "graph file");
        sub->add_option("--instance", cfg.instance_path, "instance file");
        sub->add_option("--m", cfg.m, "rail window override");
        sub->add_option("--c", cfg.c, "confusion bound override");
        sub->add_option("--budget-vertices", cfg.budget_vertices, "maximum graph size");
        sub->add_option("--budget-seconds", cfg.budget_seconds, "wall-clock limit");
        sub->add_flag("--witness", cfg.witness, "print witness linkages");
        sub->add_flag("--no-check", cfg.no_check, "skip the d-path-dominance check");
        sub->add_option("--out", cfg.out_path, "write output to this file");
    };

    const std::pair<const char*, const char*> commands[] = {
        {"solve", "minimal quality vectors of all linkages"},
        {"decide", "whether any linkage exists"},
        {"bounded", "whether a linkage fits under per-path bounds"},
        {"oracle", "minimal quality vectors by exhaustive search"},
        {"diagnose", "acceptable enumerations of key linkages"},
        {"dump-tracker", "rails and tracker edges as text"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        add_common(sub);
        if (std::string(name) == "bounded") sub->add_option("--bounds", cfg.bounds, "per-path vertex bounds");
    }
    auto* gen = app.add_subcommand("gen", "random tournament or d-path-dominant graph plus instance");
    gen->add_option("--seed", cfg.seed, "64-bit seed");
    gen->add_option("--n", cfg.n, "vertex count");
    gen->add_option("--k", cfg.k, "terminal pairs");
    gen->add_option("--d", cfg.d, "domination parameter (kind=dominant)");
    gen->add_option("--kind", cfg.kind, "tournament | dominant");
    gen->add_option("--out", cfg.out_path, "write PREFIX.graph and PREFIX.inst");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kUsage;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();

    std::string out;
    int code = kSolved;
    try {
        if (cfg.subcommand == "solve") code = run_solve(cfg, out);
        else if (cfg.subcommand == "decide") code = run_decide(cfg, out);
        else if (cfg.subcommand == "bounded") code = run_bounded(cfg, out);
        else if (cfg.subcommand == "oracle") code = run_oracle(cfg, out);
        else if (cfg.subcommand == "diagnose") code = run_diagnose(cfg, out);
        else if (cfg.subcommand == "gen") code = run_gen(cfg, out);
        else if (cfg.subcommand == "dump-tracker") code = run_dump_tracker(cfg, out);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code();
    } catch (const kdp::BudgetExceeded& e) {
        std::cerr << "error: budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const kdp::PreconditionError& e) {
        std::cerr << "error: precondition: " << e.what() << "\n";
        return kPrecondition;
    } catch (const kdp::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPrecondition;
    } catch (const kdp::Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }

    if (!cfg.out_path.empty() && cfg.subcommand != "gen") {
        std::ofstream f(cfg.out_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write '" << cfg.out_path << "'\n";
            return kPrecondition;
        }
        f << out;
    } else {
        std::cout << out;
    }
    return code;
}
