/*
 * checks.cpp
 */

#include "groupcent/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "groupcent/closeness.hpp"
#include "groupcent/harmonic.hpp"
#include "groupcent/oracles.hpp"
#include "groupcent/shortest_paths.hpp"

namespace groupcent {

std::string describe_graph(const Graph &g) {
    std::ostringstream out;
    out << "n=" << g.num_vertices() << (g.is_directed() ? " directed" : " undirected")
        << " edges:";
    for (const Edge &e : g.edges())
        out << ' ' << e.source << (g.is_directed() ? ">" : "-") << e.target << ':' << e.weight;
    return out.str();
}

namespace {

std::string describe_group(std::span<const Vertex> group) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < group.size(); ++i)
        out << (i ? "," : "") << group[i];
    out << '}';
    return out.str();
}

double harmonic_or_zero(const Graph &g, std::span<const Vertex> group) {
    return group.empty() ? 0.0 : group_harmonic(g, group).value;
}

Group random_subset(Vertex n, Vertex size, Rng &rng) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    Group out(perm.begin(), perm.begin() + size);
    std::sort(out.begin(), out.end());
    return out;
}

Vertex random_outside(const Graph &g, std::span<const Vertex> group, Rng &rng) {
    std::vector<Vertex> outside;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (!std::binary_search(group.begin(), group.end(), v))
            outside.push_back(v);
    return outside[std::uniform_int_distribution<std::size_t>(0, outside.size() - 1)(rng)];
}

Vertex pick(Vertex lo, Vertex hi, Rng &rng) {
    return std::uniform_int_distribution<Vertex>(lo, hi)(rng);
}

void record_violation(CheckResult &r, const std::string &what) {
    if (r.violations++ == 0)
        r.counterexample = what;
    r.passed = false;
}

std::string format_double(double x) {
    std::ostringstream out;
    out.precision(17);
    out << x;
    return out.str();
}

} // namespace

std::vector<Graph> sample_graphs(std::size_t count, Vertex max_n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Graph> graphs;
    constexpr Family families[] = {Family::erdos_renyi, Family::connected, Family::path,
                                   Family::star, Family::layered_dag};
    const Vertex min_n = std::min<Vertex>(4, max_n);
    for (std::size_t i = 0; i < count; ++i) {
        const bool directed = i % 2 == 1;
        const WeightChoice w = (i / 2) % 2 == 0 ? WeightChoice::unit : WeightChoice::up_to_three;
        Family f = families[(i / 4) % std::size(families)];
        if (f == Family::layered_dag && !directed)
            f = Family::erdos_renyi;
        graphs.push_back(generate(f, pick(min_n, max_n, rng), directed, w, rng));
    }
    return graphs;
}

double harmonic_floor(const Graph &g) {
    const double e = std::exp(1.0);
    return g.is_directed() ? g.lambda() * (1.0 - 2.0 / e) : g.lambda() / 2.0 * (1.0 - 1.0 / e);
}

// ---------------------------------------------------------------------------

CheckResult check_submodularity(std::span<const Graph> graphs, std::size_t triples,
                                std::uint64_t seed, double tol) {
    CheckResult r;
    r.name = "submodularity";
    Rng rng(seed);
    std::size_t skipped = 0;
    for (std::size_t t = 0; t < triples + skipped && !graphs.empty(); ++t) {
        const Graph &g = graphs[t % graphs.size()];
        const Vertex n = g.num_vertices();
        if (n < 2) {
            ++skipped;
            continue;
        }
        const Group big = random_subset(n, pick(1, n - 1, rng), rng);
        Group small;
        for (Vertex x : big)
            if (std::bernoulli_distribution(0.5)(rng))
                small.push_back(x);
        const Vertex v = random_outside(g, big, rng);

        auto plus = [v](Group s) {
            s.insert(std::upper_bound(s.begin(), s.end(), v), v);
            return s;
        };
        const double gain_small = harmonic_or_zero(g, plus(small)) - harmonic_or_zero(g, small);
        const double gain_big = harmonic_or_zero(g, plus(big)) - harmonic_or_zero(g, big);
        ++r.cases;
        if (gain_small < gain_big - tol)
            record_violation(r, describe_graph(g) + " S=" + describe_group(small) +
                                    " T=" + describe_group(big) + " v=" + std::to_string(v) +
                                    " gainS=" + format_double(gain_small) +
                                    " gainT=" + format_double(gain_big));
    }
    r.detail = std::to_string(r.cases) + " triples over " + std::to_string(graphs.size()) +
               " graphs";
    return r;
}

CheckResult check_harmonic_bounds(std::span<const Graph> graphs, bool weighted, std::size_t cases,
                                  std::uint64_t seed) {
    CheckResult r;
    r.name = weighted ? "harmonic-bounds-weighted" : "harmonic-bounds-unit";
    Rng rng(seed);
    std::vector<const Graph *> usable;
    for (const Graph &g : graphs)
        if (g.has_unit_weights() != weighted && g.num_vertices() >= 2)
            usable.push_back(&g);
    if (usable.empty()) {
        r.detail = "no graph with matching weights";
        return r;
    }

    std::uint64_t observations = 0;
    std::vector<std::uint32_t> storage;
    for (std::size_t c = 0; c < cases; ++c) {
        const Graph &g = *usable[c % usable.size()];
        const Vertex n = g.num_vertices();
        const Group group = random_subset(n, pick(1, n - 1, rng), rng);
        const Vertex v = random_outside(g, group, rng);

        const HarmonicContext ctx(g);
        HarmonicGainEvaluator evaluator(ctx);
        const DistanceArray dist = multi_source_sssp(g, group);
        const HarmonicGroupView view = make_harmonic_view(ctx, dist, storage);
        std::vector<double> bounds;
        const HarmonicGainEvaluator::BoundObserver observer = [&](Distance, double b) {
            bounds.push_back(b);
        };
        const PrunedGainResult result =
            evaluator.evaluate(view, v, -std::numeric_limits<double>::infinity(), &observer);

        Group with = group;
        with.insert(std::upper_bound(with.begin(), with.end(), v), v);
        const double exact = group_harmonic(g, with).value - group_harmonic(g, group).value;
        const double tol = 1e-9 * std::max(1.0, std::abs(exact));
        ++r.cases;
        observations += bounds.size();
        const std::string where =
            describe_graph(g) + " S=" + describe_group(group) + " v=" + std::to_string(v);
        if (!result.is_exact || std::abs(result.value - exact) > tol) {
            record_violation(r, where + " traversal gain " + format_double(result.value) +
                                    " != " + format_double(exact));
            continue;
        }
        for (double b : bounds)
            if (b < exact - tol) {
                record_violation(r, where + " bound " + format_double(b) + " < gain " +
                                        format_double(exact));
                break;
            }
    }
    r.detail = std::to_string(observations) + " bounds observed";
    return r;
}

CheckResult check_farness_bounds(std::span<const Graph> graphs, std::size_t cases,
                                 std::uint64_t seed) {
    CheckResult r;
    r.name = "farness-bounds";
    Rng rng(seed);
    std::vector<const Graph *> usable;
    for (const Graph &g : graphs)
        if (g.num_vertices() >= 3 && is_connected(g))
            usable.push_back(&g);
    if (usable.empty()) {
        r.detail = "no connected graph";
        return r;
    }

    std::uint64_t observations = 0;
    for (std::size_t c = 0; c < cases; ++c) {
        const Graph &g = *usable[c % usable.size()];
        const Vertex n = g.num_vertices();
        const Group group = random_subset(n, pick(2, n - 1, rng), rng);
        const Vertex u = group[pick(0, static_cast<Vertex>(group.size() - 1), rng)];
        const Vertex v = random_outside(g, group, rng);
        Group base_group;
        for (Vertex x : group)
            if (x != u)
                base_group.push_back(x);
        Group with = base_group;
        with.insert(std::upper_bound(with.begin(), with.end(), v), v);
        const std::string where = describe_graph(g) + " S=" + describe_group(group) +
                                  " u=" + std::to_string(u) + " v=" + std::to_string(v);
        ++r.cases;

        const GroupDistanceState state(g, group);
        DistanceArray base(n);
        state.distances_without(u, base);
        const DistanceArray fresh = multi_source_sssp(g, base_group);
        const std::uint64_t raw_base = group_farness_raw(g, base_group);
        const std::uint64_t raw_group = group_farness_raw(g, group);
        const auto cost = state.removal_cost(u);
        if (base != fresh || !cost || *cost != raw_base - raw_group) {
            record_violation(r, where + " removal state disagrees with recomputation");
            continue;
        }
        const LevelBuckets buckets(base);
        if (!buckets.matches(fresh)) {
            record_violation(r, where + " level profile mismatch");
            continue;
        }

        FarnessDecreaseEvaluator evaluator(g);
        std::vector<std::uint64_t> bounds;
        const FarnessDecreaseEvaluator::BoundObserver observer = [&](Distance, std::uint64_t b) {
            bounds.push_back(b);
        };
        const DecreaseResult result = evaluator.evaluate({base, &buckets}, v, 0, &observer);
        const std::uint64_t exact = raw_base - group_farness_raw(g, with);
        observations += bounds.size();
        if (!result.is_exact || result.value != exact) {
            record_violation(r, where + " traversal decrease " + std::to_string(result.value) +
                                    " != " + std::to_string(exact));
            continue;
        }
        for (std::uint64_t b : bounds)
            if (b < exact) {
                record_violation(r, where + " bound " + std::to_string(b) + " < decrease " +
                                        std::to_string(exact));
                break;
            }
    }
    r.detail = std::to_string(observations) + " bounds observed";
    return r;
}

std::vector<OracleRecord> oracle_sweep(std::span<const Graph> graphs, std::span<const Vertex> ks) {
    std::vector<OracleRecord> out;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph &g = graphs[i];
        const bool connected = is_connected(g);
        for (Vertex k : ks) {
            if (k >= g.num_vertices())
                continue;
            AlgoConfig cfg;
            cfg.k = k;
            cfg.deterministic = true;
            OracleRecord rec;
            rec.graph_index = i;
            rec.directed = g.is_directed();
            rec.weighted = !g.has_unit_weights();
            rec.n = g.num_vertices();
            rec.k = k;
            rec.floor = harmonic_floor(g);

            Stopwatch clock;
            rec.opt_harmonic = exhaustive_best(g, cfg, ObjectiveKind::harmonic).objective_value;
            rec.greedy_harmonic = greedy_harmonic(g, cfg).objective_value;
            rec.ls_harmonic = local_search_harmonic(g, cfg).objective_value;
            rec.harmonic_ms = clock.elapsed_ms();

            if (connected) {
                Stopwatch cclock;
                AlgoConfig ccfg = cfg;
                ccfg.eps = 0.001;
                rec.has_closeness = true;
                rec.opt_raw = *exhaustive_best(g, ccfg, ObjectiveKind::closeness).raw_farness;
                rec.ls_raw = *local_search_closeness(g, ccfg).raw_farness;
                rec.closeness_ms = cclock.elapsed_ms();
            }
            out.push_back(rec);
        }
    }
    return out;
}

namespace {

double ratio(double value, double opt) { return opt > 0.0 ? value / opt : 1.0; }

} // namespace

CheckResult check_oracle_ratios(std::span<const Graph> graphs, std::uint64_t) {
    CheckResult r;
    r.name = "oracle-ratios";
    constexpr Vertex ks[] = {1, 2, 3};
    const auto records = oracle_sweep(graphs, ks);
    double greedy_sum = 0.0, ls_sum = 0.0;
    std::uint64_t closeness_cases = 0;
    for (const OracleRecord &rec : records) {
        ++r.cases;
        const double gr = ratio(rec.greedy_harmonic, rec.opt_harmonic);
        const double lr = ratio(rec.ls_harmonic, rec.opt_harmonic);
        greedy_sum += gr;
        ls_sum += lr;
        const std::string where =
            describe_graph(graphs[rec.graph_index]) + " k=" + std::to_string(rec.k);
        if (gr < rec.floor - 1e-9)
            record_violation(r, where + " greedy-h ratio " + format_double(gr) + " below floor " +
                                    format_double(rec.floor));
        if (rec.ls_harmonic < rec.greedy_harmonic - 1e-12 * std::max(1.0, rec.greedy_harmonic))
            record_violation(r, where + " ls-h below greedy-h");
        if (rec.has_closeness) {
            ++closeness_cases;
            if (rec.ls_raw > 5 * rec.opt_raw)
                record_violation(r, where + " ls-c farness " + std::to_string(rec.ls_raw) +
                                        " above 5 x " + std::to_string(rec.opt_raw));
        }
    }
    if (r.cases) {
        std::ostringstream out;
        out.precision(6);
        out << "mean greedy-h/opt " << greedy_sum / r.cases << ", mean ls-h/opt "
            << ls_sum / r.cases << ", closeness instances " << closeness_cases;
        r.detail = out.str();
    }
    return r;
}

// ---------------------------------------------------------------------------

namespace {

// Exact positive rational, always reduced.
struct Fraction {
    std::int64_t num;
    std::int64_t den;
};

Fraction reduce(std::int64_t num, std::int64_t den) {
    const std::int64_t g = std::gcd(num, den);
    return {num / g, den / g};
}

Fraction minus(Fraction a, Fraction b) {
    return reduce(a.num * b.den - b.num * a.den, a.den * b.den);
}

bool greater(Fraction a, Fraction b) { return a.num * b.den > b.num * a.den; }

} // namespace

CheckResult check_weighted_path_example() {
    CheckResult r;
    r.name = "weighted-path";
    constexpr Weight L = 2;
    const Edge edges[] = {{0, 1, L}, {1, 2, 1}, {2, 3, 1}};
    const Graph g = Graph::from_edges(4, false, edges);
    const Vertex n = g.num_vertices();

    struct Expect {
        Group group;
        std::uint64_t raw;
    };
    const Expect expected[] = {{{0}, 9}, {{1}, 5}, {{0, 1}, 3}, {{3}, 7}};
    for (const Expect &e : expected) {
        ++r.cases;
        const std::uint64_t raw = group_farness_raw(g, e.group);
        if (raw != e.raw)
            record_violation(r, "raw" + describe_group(e.group) + " = " + std::to_string(raw) +
                                    ", expected " + std::to_string(e.raw));
    }

    // GC(S) = n / raw(S); GC(empty) = 0
    auto gc = [&](std::span<const Vertex> s) {
        return reduce(n, static_cast<std::int64_t>(group_farness_raw(g, s)));
    };
    const Group v1{0}, v2{1}, v12{0, 1};
    const Fraction gain_v2_after_v1 = minus(gc(v12), gc(v1));
    const Fraction gain_v2_alone = gc(v2);
    ++r.cases;
    if (gain_v2_after_v1.num != 8 || gain_v2_after_v1.den != 9 || gain_v2_alone.num != 4 ||
        gain_v2_alone.den != 5 || !greater(gain_v2_after_v1, gain_v2_alone))
        record_violation(r, "closeness gains " + std::to_string(gain_v2_after_v1.num) + "/" +
                                std::to_string(gain_v2_after_v1.den) + " vs " +
                                std::to_string(gain_v2_alone.num) + "/" +
                                std::to_string(gain_v2_alone.den));

    AlgoConfig cfg;
    cfg.k = 1;
    cfg.deterministic = true;
    const RunReport best = exhaustive_best(g, cfg, ObjectiveKind::closeness);
    ++r.cases;
    if (best.group != Group{1} || best.raw_farness != 5u)
        record_violation(r, "exhaustive k=1 picked " + describe_group(best.group));
    r.detail = "8/9 > 4/5 on raw farness 9, 5, 3";
    return r;
}

CheckResult check_single_edge() {
    CheckResult r;
    r.name = "single-edge";
    const Edge e[] = {{0, 1, 1}};
    const Graph g = Graph::from_edges(2, false, e);
    const Group u{0}, both{0, 1};
    const double one = group_harmonic(g, u).value;
    const double zero = group_harmonic(g, both).value;
    r.cases = 2;
    if (one != 1.0 || zero != 0.0)
        record_violation(r, "GH({u}) = " + format_double(one) + ", GH({u,v}) = " +
                                format_double(zero));
    return r;
}

} // namespace groupcent
