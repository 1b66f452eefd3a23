/*
 * oracles.cpp
 */

#include "groupcent/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>

#include "groupcent/kernels.hpp"
#include "groupcent/shortest_paths.hpp"
#include "groupcent/worker_pool.hpp"

namespace groupcent {

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
    if (r > n)
        return 0;
    r = std::min(r, n - r);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(acc);
}

namespace {

void check_oracle_input(const Graph &g, const AlgoConfig &cfg, ObjectiveKind objective) {
    cfg.validate();
    if (objective == ObjectiveKind::farness)
        throw InputError("oracles maximize harmonic or closeness");
    if (g.num_vertices() == 0)
        throw InputError("empty graph");
    if (cfg.k > g.num_vertices())
        throw InputError("k exceeds the number of vertices");
    if (objective == ObjectiveKind::closeness) {
        if (cfg.k >= g.num_vertices())
            throw InputError("k must be smaller than the number of vertices");
        if (!is_connected(g))
            throw DisconnectedError(g.is_directed() ? "graph is not strongly connected"
                                                    : "graph is not connected");
    }
}

void finish_report(const Graph &g, RunReport &report, ObjectiveKind objective) {
    report.objective = objective;
    if (objective == ObjectiveKind::harmonic) {
        report.objective_value = group_harmonic(g, report.group).value;
    } else {
        const std::uint64_t raw = group_farness_raw(g, report.group);
        report.raw_farness = raw;
        report.objective_value = closeness_from_raw(g.num_vertices(), raw);
    }
}

bool harmonic_beats(double value, double best) {
    return value > best + 1e-12 * std::max(1.0, std::abs(best));
}

// Best group among combinations whose first element is `first`.
struct PartialBest {
    bool found = false;
    Group group;
    double harmonic = 0.0;
    std::uint64_t raw = 0;
};

} // namespace

RunReport exhaustive_best(const Graph &g, const AlgoConfig &cfg, ObjectiveKind objective) {
    check_oracle_input(g, cfg, objective);
    Stopwatch clock;
    const Vertex n = g.num_vertices();
    const Vertex k = cfg.k;
    const std::uint64_t total = binomial(n, k);
    if (total > cfg.exhaustive_budget)
        throw BudgetExceededError("exhaustive search needs " + std::to_string(total) +
                                      " evaluations, budget is " +
                                      std::to_string(cfg.exhaustive_budget),
                                  total);

    const DistanceMatrix matrix(g);
    const bool harmonic = objective == ObjectiveKind::harmonic;
    std::vector<PartialBest> partial(n - k + 1);
    WorkerPool pool(cfg.effective_workers());

    pool.run(partial.size(), [&](std::size_t task, std::size_t) {
        PartialBest &best = partial[task];
        // acc[d] = min of rows of the first d + 1 chosen vertices
        std::vector<DistanceArray> acc(k, DistanceArray(n));
        std::vector<Vertex> comb(k);
        comb[0] = static_cast<Vertex>(task);
        const auto row0 = matrix.row(comb[0]);
        std::copy(row0.begin(), row0.end(), acc[0].begin());

        Vertex depth = 1;
        if (k > 1)
            comb[1] = comb[0];
        for (;;) {
            if (depth == k) {
                const DistanceArray &d = acc[k - 1];
                if (harmonic) {
                    const double value = kernels::harmonic_sum(d);
                    if (!best.found || harmonic_beats(value, best.harmonic)) {
                        best = {true, comb, value, 0};
                    }
                } else {
                    const kernels::FarnessSum f = kernels::farness_sum(d);
                    if (f.unreached == 0 && (!best.found || f.sum < best.raw))
                        best = {true, comb, 0.0, f.sum};
                }
                --depth;
                if (depth == 0)
                    break;
            }
            // advance position `depth`
            ++comb[depth];
            if (comb[depth] > n - (k - depth)) {
                --depth;
                if (depth == 0)
                    break;
                continue;
            }
            acc[depth] = acc[depth - 1];
            kernels::min_into(acc[depth], matrix.row(comb[depth]));
            ++depth;
            if (depth < k)
                comb[depth] = comb[depth - 1];
        }
    });

    PartialBest best;
    for (const PartialBest &p : partial) {
        if (!p.found)
            continue;
        const bool better = !best.found ||
                            (harmonic ? harmonic_beats(p.harmonic, best.harmonic) : p.raw < best.raw);
        if (better)
            best = p;
    }

    RunReport report;
    report.algorithm = harmonic ? "exact-h" : "exact-c";
    report.config = cfg;
    report.group = best.group;
    report.iterations = 1;
    report.candidates_evaluated = total;
    finish_report(g, report, objective);
    report.wall_time_ms = clock.elapsed_ms();
    return report;
}

RunReport best_random(const Graph &g, const AlgoConfig &cfg, ObjectiveKind objective) {
    check_oracle_input(g, cfg, objective);
    Stopwatch clock;
    const Vertex n = g.num_vertices();
    const bool harmonic = objective == ObjectiveKind::harmonic;

    std::vector<Vertex> perm(n);
    Group best_group;
    double best_harmonic = 0.0;
    std::uint64_t best_raw = 0;
    for (unsigned t = 0; t < cfg.trials; ++t) {
        std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed),
                          static_cast<std::uint32_t>(cfg.seed >> 32), static_cast<std::uint32_t>(t)};
        std::mt19937_64 rng(seq);
        std::iota(perm.begin(), perm.end(), Vertex{0});
        for (Vertex i = 0; i < cfg.k; ++i) {
            std::uniform_int_distribution<Vertex> pick(i, n - 1);
            std::swap(perm[i], perm[pick(rng)]);
        }
        Group group(perm.begin(), perm.begin() + cfg.k);
        std::sort(group.begin(), group.end());
        if (harmonic) {
            const double value = group_harmonic(g, group).value;
            if (best_group.empty() || value > best_harmonic) {
                best_group = std::move(group);
                best_harmonic = value;
            }
        } else {
            const std::uint64_t raw = group_farness_raw(g, group);
            if (best_group.empty() || raw < best_raw) {
                best_group = std::move(group);
                best_raw = raw;
            }
        }
    }

    RunReport report;
    report.algorithm = harmonic ? "random-h" : "random-c";
    report.config = cfg;
    report.group = best_group;
    report.iterations = cfg.trials;
    report.candidates_evaluated = cfg.trials;
    finish_report(g, report, objective);
    report.wall_time_ms = clock.elapsed_ms();
    return report;
}

// ---------------------------------------------------------------------------
// 0/1 program
// ---------------------------------------------------------------------------

IlpModel build_ilp_harmonic(const Graph &g, Vertex k) {
    const Vertex n = g.num_vertices();
    if (k < 1 || k > n)
        throw InputError("k out of range");
    const DistanceMatrix matrix(g);
    IlpModel model;
    model.n = n;
    model.k = k;
    for (Vertex i = 0; i < n; ++i) {
        bool served = false;
        for (Vertex j = 0; j < n; ++j) {
            if (i == j)
                continue;
            const Distance d = matrix.at(j, i);
            if (d == kUnreachable)
                continue;
            model.x.push_back({i, j, 1.0 / static_cast<double>(d)});
            served = true;
        }
        if (!served)
            model.uncovered.push_back(i);
    }
    return model;
}

namespace {

std::string number(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

} // namespace

void write_lp(const IlpModel &model, std::ostream &out) {
    out << "\\ group-harmonic maximization, n = " << model.n << ", k = " << model.k << '\n';
    out << "\\ variables: " << model.num_variables()
        << ", constraints: " << model.num_constraints() << '\n';
    if (!model.uncovered.empty()) {
        out << "\\ warning: vertices reached by no other vertex must be members; the model is "
               "infeasible when there are more than k of them:";
        for (Vertex v : model.uncovered)
            out << ' ' << v;
        out << '\n';
    }

    out << "Maximize\n obj:";
    if (model.x.empty())
        out << " 0 y_0";
    for (const auto &a : model.x)
        out << " + " << number(a.coefficient) << " x_" << a.i << '_' << a.j;
    out << "\nSubject To\n";

    std::size_t at = 0;
    for (Vertex i = 0; i < model.n; ++i) {
        out << " serve_" << i << ":";
        while (at < model.x.size() && model.x[at].i == i) {
            out << " + x_" << i << '_' << model.x[at].j;
            ++at;
        }
        out << " + y_" << i << " = 1\n";
    }
    out << " size:";
    for (Vertex j = 0; j < model.n; ++j)
        out << " + y_" << j;
    out << " = " << model.k << '\n';
    for (const auto &a : model.x)
        out << " open_" << a.i << '_' << a.j << ": x_" << a.i << '_' << a.j << " - y_" << a.j
            << " <= 0\n";

    out << "Binary\n";
    for (Vertex j = 0; j < model.n; ++j)
        out << " y_" << j << '\n';
    for (const auto &a : model.x)
        out << " x_" << a.i << '_' << a.j << '\n';
    out << "End\n";
}

void export_ilp_harmonic(const Graph &g, Vertex k, const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot open " + path.string() + " for writing");
    write_lp(build_ilp_harmonic(g, k), out);
    if (!out)
        throw InputError("failed writing " + path.string());
}

double evaluate_assignment(const IlpModel &model, std::span<const Vertex> group) {
    std::vector<std::uint8_t> y(model.n, 0);
    for (Vertex v : group) {
        if (v >= model.n)
            throw InputError("vertex out of range");
        y[v] = 1;
    }
    const auto members = static_cast<Vertex>(std::count(y.begin(), y.end(), 1));
    if (members != model.k || group.size() != model.k)
        throw InputError("group size differs from k");

    double objective = 0.0;
    std::size_t at = 0;
    for (Vertex i = 0; i < model.n; ++i) {
        const IlpModel::Assignment *chosen = nullptr;
        for (; at < model.x.size() && model.x[at].i == i; ++at) {
            const auto &a = model.x[at];
            if (!y[a.j])
                continue; // x_ij <= y_j
            if (!chosen || a.coefficient > chosen->coefficient)
                chosen = &a;
        }
        if (y[i])
            continue; // served by itself; x_i* = 0
        if (!chosen)
            throw InputError("vertex " + std::to_string(i) + " cannot be served by the group");
        objective += chosen->coefficient;
    }
    return objective;
}

} // namespace groupcent
