// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "groupcent/checks.hpp"
#include "groupcent/closeness.hpp"
#include "groupcent/harmonic.hpp"
#include "groupcent/oracles.hpp"

using namespace groupcent;

namespace {

int failures = 0;

void verdict(int id, bool ok, const std::string &what, double seconds) {
    std::printf("criterion %2d %s  %s  (%.2fs)\n", id, ok ? "PASS" : "FAIL", what.c_str(), seconds);
    std::fflush(stdout);
    if (!ok)
        ++failures;
}

void verdict(int id, const CheckResult &r, double seconds) {
    verdict(id, r.passed, r.name + " cases=" + std::to_string(r.cases) +
                              " violations=" + std::to_string(r.violations) + " " + r.detail,
            seconds);
    if (!r.passed)
        std::printf("    counterexample: %s\n", r.counterexample.c_str());
}

// Connected ignoring arc directions.
bool weakly_connected(const Graph &g) {
    if (!g.is_directed())
        return is_connected(g);
    const auto edges = g.edges();
    return is_connected(Graph::from_edges(g.num_vertices(), false, edges));
}

// Every generator family, n in 4..9, weights in {1, 2}, a few seeds each.
std::vector<Graph> sweep_graphs(bool directed) {
    std::vector<Family> families = {Family::erdos_renyi, Family::path, Family::star,
                                    Family::connected};
    if (directed)
        families.push_back(Family::layered_dag);
    Rng rng(directed ? 2024 : 1024);
    std::vector<Graph> out;
    for (Family f : families)
        for (Vertex n = 4; n <= 9; ++n)
            for (WeightChoice w : {WeightChoice::unit, WeightChoice::up_to_two})
                for (int rep = 0; rep < 3; ++rep) {
                    Graph g = generate(f, n, directed, w, rng);
                    if (!g.has_isolated_vertex() && weakly_connected(g))
                        out.push_back(std::move(g));
                }
    return out;
}

struct SweepSummary {
    std::size_t instances = 0;
    std::size_t floor_violations = 0;
    std::size_t ls_below_greedy = 0;
    std::size_t closeness_instances = 0;
    std::size_t ratio5_violations = 0;
    std::size_t negative_gain_cases = 0;
    std::size_t half_violations = 0;
    double greedy_ratio_sum = 0.0;
    double ls_ratio_sum = 0.0;
    double worst_greedy = 1.0;
    double worst_closeness = 1.0;
    double harmonic_seconds = 0.0;
    double closeness_seconds = 0.0;
    std::string first_problem;
};

double ratio(double value, double opt) { return opt > 0.0 ? value / opt : 1.0; }

SweepSummary run_sweep(const std::vector<Graph> &graphs) {
    constexpr Vertex ks[] = {1, 2, 3};
    SweepSummary s;
    for (const OracleRecord &rec : oracle_sweep(graphs, ks)) {
        const Graph &g = graphs[rec.graph_index];
        const std::string where = describe_graph(g) + " k=" + std::to_string(rec.k);
        ++s.instances;
        const double gr = ratio(rec.greedy_harmonic, rec.opt_harmonic);
        s.greedy_ratio_sum += gr;
        s.ls_ratio_sum += ratio(rec.ls_harmonic, rec.opt_harmonic);
        s.worst_greedy = std::min(s.worst_greedy, gr);
        s.harmonic_seconds += rec.harmonic_ms / 1000.0;
        s.closeness_seconds += rec.closeness_ms / 1000.0;
        if (gr < rec.floor - 1e-9) {
            ++s.floor_violations;
            if (s.first_problem.empty())
                s.first_problem = where + " greedy ratio below floor";
        }
        if (rec.ls_harmonic < rec.greedy_harmonic) {
            ++s.ls_below_greedy;
            if (s.first_problem.empty())
                s.first_problem = where + " ls-h below greedy-h";
        }
        if (rec.has_closeness) {
            ++s.closeness_instances;
            s.worst_closeness = std::min(s.worst_closeness, static_cast<double>(rec.opt_raw) /
                                                                static_cast<double>(rec.ls_raw));
            if (rec.ls_raw > 5 * rec.opt_raw) {
                ++s.ratio5_violations;
                if (s.first_problem.empty())
                    s.first_problem = where + " ls-c above five times optimum";
            }
        }
        if (g.is_directed()) {
            AlgoConfig cfg;
            cfg.k = rec.k;
            cfg.deterministic = true;
            const RunReport greedy = greedy_harmonic(g, cfg);
            const bool negative = std::any_of(greedy.step_gains.begin(), greedy.step_gains.end(),
                                              [](double x) { return x < 0.0; });
            if (negative) {
                ++s.negative_gain_cases;
                if (gr < 0.5 - 1e-9)
                    ++s.half_violations;
            }
        }
    }
    return s;
}

std::string fmt(const char *pattern, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, value);
    return buf;
}

double seconds_since(const Stopwatch &w) { return w.elapsed_ms() / 1000.0; }

} // namespace

int main() {
    std::printf("building sweeps\n");
    const std::vector<Graph> directed = sweep_graphs(true);
    const std::vector<Graph> undirected = sweep_graphs(false);
    const SweepSummary sd = run_sweep(directed);
    const SweepSummary su = run_sweep(undirected);

    // 1, 2: greedy floors
    {
        const double mean = sd.greedy_ratio_sum / std::max<std::size_t>(1, sd.instances);
        const bool ok = sd.instances >= 300 && sd.floor_violations == 0 &&
                        sd.half_violations == 0 && sd.harmonic_seconds < 120.0;
        verdict(1, ok,
                "directed greedy-h floor: instances=" + std::to_string(sd.instances) +
                    " violations=" + std::to_string(sd.floor_violations) + " mean ratio=" +
                    fmt("%.4f", mean) + " worst=" + fmt("%.4f", sd.worst_greedy) +
                    " negative-gain runs=" + std::to_string(sd.negative_gain_cases) +
                    " below 0.5=" + std::to_string(sd.half_violations),
                sd.harmonic_seconds);
    }
    {
        const double mean = su.greedy_ratio_sum / std::max<std::size_t>(1, su.instances);
        const bool ok =
            su.instances >= 300 && su.floor_violations == 0 && su.harmonic_seconds < 120.0;
        verdict(2, ok,
                "undirected greedy-h floor: instances=" + std::to_string(su.instances) +
                    " violations=" + std::to_string(su.floor_violations) + " mean ratio=" +
                    fmt("%.4f", mean) + " worst=" + fmt("%.4f", su.worst_greedy),
                su.harmonic_seconds);
    }

    // 3: ls-h never below greedy-h, and not worse on average
    {
        const std::size_t count = sd.instances + su.instances;
        const double greedy_mean = (sd.greedy_ratio_sum + su.greedy_ratio_sum) / count;
        const double ls_mean = (sd.ls_ratio_sum + su.ls_ratio_sum) / count;
        const std::size_t below = sd.ls_below_greedy + su.ls_below_greedy;
        verdict(3, below == 0 && ls_mean >= greedy_mean,
                "ls-h >= greedy-h: instances=" + std::to_string(count) +
                    " below=" + std::to_string(below) + " mean ls ratio=" + fmt("%.4f", ls_mean) +
                    " mean greedy ratio=" + fmt("%.4f", greedy_mean),
                sd.harmonic_seconds + su.harmonic_seconds);
    }

    // 4: single-swap closeness within five times optimum
    {
        const std::size_t count = sd.closeness_instances + su.closeness_instances;
        const std::size_t bad = sd.ratio5_violations + su.ratio5_violations;
        const double secs = sd.closeness_seconds + su.closeness_seconds;
        verdict(4, bad == 0 && count > 0 && secs < 180.0,
                "ls-c <= 5 opt: connected instances=" + std::to_string(count) +
                    " violations=" + std::to_string(bad) + " worst opt/ls=" +
                    fmt("%.4f", std::min(sd.worst_closeness, su.worst_closeness)),
                secs);
    }
    if (!sd.first_problem.empty() || !su.first_problem.empty())
        std::printf("    first problem: %s\n",
                    (sd.first_problem.empty() ? su.first_problem : sd.first_problem).c_str());

    // 5: weighted path, exact integers
    {
        Stopwatch w;
        const CheckResult r = check_weighted_path_example();
        verdict(5, r, seconds_since(w));
    }

    // 6: submodularity
    {
        Stopwatch w;
        const std::vector<Graph> graphs = sample_graphs(50, 12, 6);
        const CheckResult r = check_submodularity(graphs, 1000, 6, 1e-9);
        verdict(6, r.passed && r.cases >= 1000, r.name + " cases=" + std::to_string(r.cases) +
                                                    " graphs=50 violations=" +
                                                    std::to_string(r.violations),
                seconds_since(w));
        if (!r.passed)
            std::printf("    counterexample: %s\n", r.counterexample.c_str());
    }

    // 7: bound soundness
    {
        Stopwatch w;
        const std::vector<Graph> graphs = sample_graphs(60, 14, 7);
        const CheckResult parts[] = {check_harmonic_bounds(graphs, false, 200, 7),
                                     check_harmonic_bounds(graphs, true, 200, 7),
                                     check_farness_bounds(graphs, 200, 7)};
        bool ok = true;
        std::string what;
        for (const CheckResult &r : parts) {
            ok = ok && r.passed && r.cases >= 200;
            what += r.name + " cases=" + std::to_string(r.cases) +
                    " violations=" + std::to_string(r.violations) + "; ";
        }
        verdict(7, ok, what, seconds_since(w));
        for (const CheckResult &r : parts)
            if (!r.passed)
                std::printf("    counterexample: %s\n", r.counterexample.c_str());
    }

    // 8: pruning leaves results unchanged
    {
        Stopwatch w;
        Rng rng(8);
        std::size_t greedy_same = 0, greedy_cases = 0, ls_same = 0, ls_cases = 0;
        const Family families[] = {Family::erdos_renyi, Family::connected, Family::path,
                                   Family::star, Family::layered_dag};
        for (std::size_t i = 0; greedy_cases < 100; ++i) {
            const bool dir = i % 2;
            const Family f = families[i % 5];
            const Vertex n = 10 + static_cast<Vertex>(rng() % 31);
            const WeightChoice wc = i % 4 < 2 ? WeightChoice::unit : WeightChoice::up_to_three;
            const Graph g = generate(f, n, dir, wc, rng);
            AlgoConfig cfg;
            cfg.k = 2 + static_cast<Vertex>(rng() % 5);
            cfg.deterministic = true;
            AlgoConfig plain = cfg;
            plain.pruning = false;
            ++greedy_cases;
            greedy_same += greedy_harmonic(g, cfg).group == greedy_harmonic(g, plain).group;
        }
        while (ls_cases < 50) {
            const bool dir = ls_cases % 2;
            const Vertex n = 10 + static_cast<Vertex>(rng() % 31);
            const WeightChoice wc =
                ls_cases % 4 < 2 ? WeightChoice::unit : WeightChoice::up_to_three;
            const Graph g = random_connected(n, 0.1, dir, wc, rng);
            AlgoConfig cfg;
            cfg.k = 2 + static_cast<Vertex>(rng() % 5);
            cfg.deterministic = true;
            cfg.eps = 0.001;
            AlgoConfig plain = cfg;
            plain.pruning = false;
            const RunReport a = local_search_closeness(g, cfg);
            const RunReport b = local_search_closeness(g, plain);
            ++ls_cases;
            ls_same += a.swaps == b.swaps && a.group == b.group;
        }
        verdict(8, greedy_same == greedy_cases && ls_same == ls_cases,
                "greedy-h identical " + std::to_string(greedy_same) + "/" +
                    std::to_string(greedy_cases) + ", ls-c swap sequences identical " +
                    std::to_string(ls_same) + "/" + std::to_string(ls_cases),
                seconds_since(w));
    }

    // 9: 0/1 program evaluated at the optimum
    {
        Stopwatch w;
        Rng rng(9);
        std::size_t agree = 0;
        double worst = 0.0;
        for (int i = 0; i < 30; ++i) {
            const Graph g = random_connected(5 + static_cast<Vertex>(rng() % 5), 0.2, i % 2,
                                             i % 3 ? WeightChoice::unit : WeightChoice::up_to_three,
                                             rng);
            AlgoConfig cfg;
            cfg.k = 1 + static_cast<Vertex>(rng() % 3);
            cfg.deterministic = true;
            const RunReport opt = exhaustive_best(g, cfg, ObjectiveKind::harmonic);
            const double lp = evaluate_assignment(build_ilp_harmonic(g, cfg.k), opt.group);
            const double gh = group_harmonic(g, opt.group).value;
            const double rel = std::abs(lp - gh) / std::max(1.0, std::abs(gh));
            worst = std::max(worst, rel);
            agree += rel <= 1e-12;
        }
        verdict(9, agree == 30,
                "ILP assignment matches GH(opt) " + std::to_string(agree) +
                    "/30, worst relative gap " + fmt("%.3g", worst),
                seconds_since(w));
    }

    // 10: single edge
    {
        Stopwatch w;
        verdict(10, check_single_edge(), seconds_since(w));
    }

    std::printf("%s: %d criterion failure(s)\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
