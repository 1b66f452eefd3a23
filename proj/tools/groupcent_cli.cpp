/*
 * groupcent_cli.cpp
 *
 * Command-line front end: solve, compare, check, export-ilp.
 *
 * Exit codes: 0 success, 1 usage or input error, 2 infeasible input
 * (closeness on a disconnected graph), 3 exhaustive budget exceeded.
 */

#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "groupcent/checks.hpp"
#include "groupcent/closeness.hpp"
#include "groupcent/harmonic.hpp"
#include "groupcent/kernels.hpp"
#include "groupcent/oracles.hpp"
#include "groupcent/report_io.hpp"

using namespace groupcent;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kInfeasible = 2, kBudget = 3 };

const std::vector<std::string> kAlgorithms = {"greedy-h", "ls-h",   "greedy-c",
                                              "ls-c",     "multiswap-c", "exact-h",
                                              "exact-c",  "random-h", "random-c"};

bool is_closeness(const std::string &algo) { return algo.back() == 'c'; }

struct GraphArgs {
    bool directed = false;
    bool weighted = false;
    bool scc = false;
    bool no_scc = false;
};

struct SolveArgs {
    std::vector<std::string> graphs;
    std::string algo;
    std::string output = "json";
    std::string baseline = "exact";
    GraphArgs graph;
    AlgoConfig cfg;
};

void add_graph_flags(CLI::App *cmd, GraphArgs &args) {
    cmd->add_flag("--directed", args.directed, "Treat edges as arcs u -> v");
    cmd->add_flag("--weighted", args.weighted, "Read a third column of positive integer weights");
}

void add_algo_flags(CLI::App *cmd, SolveArgs &args) {
    cmd->add_option("--k", args.cfg.k, "Group size")->required();
    cmd->add_option("--algo", args.algo, "Algorithm")
        ->required()
        ->check(CLI::IsMember(kAlgorithms));
    cmd->add_option("--eps", args.cfg.eps, "Local-search acceptance epsilon");
    cmd->add_option("--p", args.cfg.p, "Multi-swap width");
    cmd->add_option("--trials", args.cfg.trials, "Random baseline trials");
    cmd->add_option("--seed", args.cfg.seed, "Random seed");
    cmd->add_option("--workers", args.cfg.workers, "Worker threads (0 = all cores)");
    cmd->add_option("--budget", args.cfg.exhaustive_budget, "Exhaustive evaluation budget");
    cmd->add_flag("--deterministic", args.cfg.deterministic, "Single worker, reproducible counters");
    cmd->add_flag("--no-prune{false}", args.cfg.pruning, "Evaluate every candidate exactly");
    auto *scc = cmd->add_flag("--scc", args.graph.scc,
                              "Restrict to the largest (strongly) connected component");
    cmd->add_flag("--no-scc", args.graph.no_scc,
                  "Never restrict; closeness on a disconnected graph then fails")
        ->excludes(scc);
    add_graph_flags(cmd, args.graph);
}

Graph load(const std::string &path, const GraphArgs &args, bool closeness) {
    std::vector<std::string> warnings;
    Graph g = load_edge_list(path, {args.directed, args.weighted, IsolatedVertexPolicy::drop},
                             &warnings);
    for (const std::string &w : warnings)
        std::cerr << "warning: " << path << ": " << w << '\n';
    const bool restrict = args.scc || (closeness && !args.no_scc);
    if (restrict && !is_connected(g)) {
        const Vertex before = g.num_vertices();
        g = largest_component(g);
        std::cerr << "note: " << path << ": using the largest component, " << g.num_vertices()
                  << " of " << before << " vertices\n";
    }
    return g;
}

RunReport run(const Graph &g, const std::string &algo, const AlgoConfig &cfg) {
    if (algo == "greedy-h")
        return greedy_harmonic(g, cfg);
    if (algo == "ls-h")
        return local_search_harmonic(g, cfg);
    if (algo == "greedy-c")
        return greedy_closeness(g, cfg);
    if (algo == "ls-c")
        return local_search_closeness(g, cfg);
    if (algo == "multiswap-c")
        return multi_swap_closeness(g, cfg);
    if (algo == "exact-h")
        return exhaustive_best(g, cfg, ObjectiveKind::harmonic);
    if (algo == "exact-c")
        return exhaustive_best(g, cfg, ObjectiveKind::closeness);
    if (algo == "random-h")
        return best_random(g, cfg, ObjectiveKind::harmonic);
    if (algo == "random-c")
        return best_random(g, cfg, ObjectiveKind::closeness);
    throw InputError("unknown algorithm " + algo);
}

int cmd_solve(const SolveArgs &args) {
    const Graph g = load(args.graphs.front(), args.graph, is_closeness(args.algo));
    if (args.cfg.k > g.num_vertices())
        throw InputError("k exceeds the number of vertices");
    const RunReport report = run(g, args.algo, args.cfg);
    if (args.output == "csv")
        std::cout << report_csv_header() << '\n' << report_csv_row(g, report) << '\n';
    else
        std::cout << report_json(g, report) << '\n';
    return kOk;
}

// Higher is better for both objectives: GH, and GC = n / raw.
double quality(const RunReport &r) { return r.objective_value; }

int cmd_compare(const SolveArgs &args) {
    const bool closeness = is_closeness(args.algo);
    const std::string baseline = (args.baseline == "exact" ? "exact-" : "random-") +
                                 std::string(closeness ? "c" : "h");
    std::printf("graph,algorithm,baseline,k,value,baseline_value,quality_ratio,time_ratio\n");
    double log_quality = 0.0, log_time = 0.0;
    std::size_t rows = 0;
    for (const std::string &path : args.graphs) {
        const Graph g = load(path, args.graph, closeness);
        const RunReport target = run(g, args.algo, args.cfg);
        const RunReport base = run(g, baseline, args.cfg);
        verify_report(g, target);
        verify_report(g, base);
        const double q = quality(base) > 0.0 ? quality(target) / quality(base) : 1.0;
        const double t = (target.wall_time_ms + 1e-3) / (base.wall_time_ms + 1e-3);
        std::printf("%s,%s,%s,%u,%.17g,%.17g,%.6f,%.6f\n", path.c_str(), args.algo.c_str(),
                    baseline.c_str(), args.cfg.k, quality(target), quality(base), q, t);
        log_quality += std::log(q);
        log_time += std::log(t);
        ++rows;
    }
    if (rows > 1)
        std::printf("geomean,%s,%s,%u,,,%.6f,%.6f\n", args.algo.c_str(), baseline.c_str(),
                    args.cfg.k, std::exp(log_quality / rows), std::exp(log_time / rows));
    return kOk;
}

struct CheckArgs {
    std::string graph;
    GraphArgs graph_args;
    std::string suite = "all";
    std::size_t count = 50;
    std::size_t cases = 1000;
    std::uint64_t seed = 1;
};

int cmd_check(const CheckArgs &args) {
    std::vector<Graph> graphs;
    std::vector<Graph> small;
    if (!args.graph.empty()) {
        graphs.push_back(load(args.graph, args.graph_args, false));
        small = graphs;
    } else {
        graphs = sample_graphs(args.count, 12, args.seed);
        small = sample_graphs(args.count, 8, args.seed + 1);
    }
    std::vector<CheckResult> results;
    const bool all = args.suite == "all";
    if (all || args.suite == "submodularity")
        results.push_back(check_submodularity(graphs, args.cases, args.seed));
    if (all || args.suite == "bounds") {
        const std::size_t per = std::max<std::size_t>(1, args.cases / 5);
        results.push_back(check_harmonic_bounds(graphs, false, per, args.seed));
        results.push_back(check_harmonic_bounds(graphs, true, per, args.seed));
        results.push_back(check_farness_bounds(graphs, per, args.seed));
    }
    if (all || args.suite == "oracle") {
        results.push_back(check_oracle_ratios(small, args.seed));
        results.push_back(check_weighted_path_example());
        results.push_back(check_single_edge());
    }
    for (const CheckResult &r : results) {
        std::printf("%s %s cases=%llu violations=%llu %s\n", r.passed ? "PASS" : "FAIL",
                    r.name.c_str(), static_cast<unsigned long long>(r.cases),
                    static_cast<unsigned long long>(r.violations), r.detail.c_str());
        if (!r.passed)
            std::printf("  counterexample: %s\n", r.counterexample.c_str());
    }
    return kOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Group harmonic and group closeness maximization"};
    app.require_subcommand(1);
    std::string simd = "auto";
    app.add_option("--simd", simd, "Kernel variant")
        ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

    SolveArgs solve;
    auto *solve_cmd = app.add_subcommand("solve", "Run one algorithm on one graph");
    solve_cmd->add_option("--graph", solve.graphs, "Edge-list file")->required()->expected(1);
    add_algo_flags(solve_cmd, solve);
    solve_cmd->add_option("--output", solve.output, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));

    SolveArgs compare;
    auto *compare_cmd =
        app.add_subcommand("compare", "Quality and runtime against a baseline, per graph");
    compare_cmd->add_option("--graph", compare.graphs, "Edge-list file (repeatable)")
        ->required()
        ->take_all();
    add_algo_flags(compare_cmd, compare);
    compare_cmd->add_option("--baseline", compare.baseline, "Baseline")
        ->check(CLI::IsMember({"exact", "random"}));

    CheckArgs check;
    auto *check_cmd = app.add_subcommand("check", "Run property suites");
    check_cmd->add_option("--graph", check.graph, "Edge-list file (default: generated graphs)");
    add_graph_flags(check_cmd, check.graph_args);
    check_cmd->add_option("--suite", check.suite, "Suite")
        ->check(CLI::IsMember({"submodularity", "bounds", "oracle", "all"}));
    check_cmd->add_option("--count", check.count, "Generated graphs");
    check_cmd->add_option("--cases", check.cases, "Sampled cases");
    check_cmd->add_option("--seed", check.seed, "Random seed");

    std::string ilp_graph, ilp_out;
    GraphArgs ilp_args;
    Vertex ilp_k = 1;
    auto *ilp_cmd = app.add_subcommand("export-ilp", "Write the harmonic 0/1 program as LP");
    ilp_cmd->add_option("--graph", ilp_graph, "Edge-list file")->required();
    ilp_cmd->add_option("--k", ilp_k, "Group size")->required();
    ilp_cmd->add_option("--out", ilp_out, "Output LP file")->required();
    add_graph_flags(ilp_cmd, ilp_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (simd != "auto")
            kernels::force_isa(simd == "scalar" ? kernels::Isa::scalar : kernels::Isa::avx2);
        if (solve_cmd->parsed())
            return cmd_solve(solve);
        if (compare_cmd->parsed())
            return cmd_compare(compare);
        if (check_cmd->parsed())
            return cmd_check(check);
        if (ilp_cmd->parsed()) {
            const Graph g = load(ilp_graph, ilp_args, false);
            export_ilp_harmonic(g, ilp_k, ilp_out);
            return kOk;
        }
    } catch (const BudgetExceededError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBudget;
    } catch (const DisconnectedError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInfeasible;
    } catch (const InputError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
