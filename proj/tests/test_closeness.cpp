#include <gtest/gtest.h>

#include "groupcent/closeness.hpp"
#include "groupcent/oracles.hpp"
#include "groupcent/shortest_paths.hpp"
#include "test_support.hpp"

using namespace groupcent;
namespace t = groupcent::testing;

namespace {

AlgoConfig config(Vertex k, bool pruning = true, double eps = 0.01) {
    AlgoConfig cfg;
    cfg.k = k;
    cfg.eps = eps;
    cfg.deterministic = true;
    cfg.pruning = pruning;
    return cfg;
}

Graph connected_graph(std::size_t i, Vertex n, Rng &rng) {
    const bool directed = i % 2;
    const WeightChoice w = (i / 2) % 2 ? WeightChoice::up_to_three : WeightChoice::unit;
    const double p = (i / 4) % 3 == 0 ? 0.0 : 0.15;
    return random_connected(n, p, directed, w, rng);
}

Graph weighted_path() { return t::graph_of(4, false, {{0, 1, 2}, {1, 2, 1}, {2, 3, 1}}); }

bool qualifies(std::uint64_t after, std::uint64_t before, double eps, std::uint64_t q) {
    const std::int64_t limit = acceptance_limit(before, eps, q);
    return limit >= 0 && after <= static_cast<std::uint64_t>(limit);
}

} // namespace

TEST(LevelBucketsTest, CountsAndSums) {
    const DistanceArray d{0, 1, 3, 1, 2, 0, 3};
    const LevelBuckets b(d);
    EXPECT_EQ(b.count_at_least(1), 5u);
    EXPECT_EQ(b.count_at_least(2), 3u);
    EXPECT_EQ(b.count_at_least(3), 2u);
    EXPECT_EQ(b.count_at_least(4), 0u);
    EXPECT_EQ(b.sum_at_least(1), 10u);
    EXPECT_EQ(b.sum_at_least(3), 6u);
    EXPECT_EQ(b.by_distance(), (std::vector<Vertex>{1, 3, 4, 2, 6}));
    EXPECT_EQ(b.levels(), (std::vector<Distance>{1, 2, 3}));
    EXPECT_TRUE(b.matches(d));
    DistanceArray changed = d;
    changed[4] = 3;
    EXPECT_FALSE(b.matches(changed));
}

TEST(LevelBucketsTest, NonIncreasingAndCoversNonMembers) {
    Rng rng(5);
    for (int i = 0; i < 30; ++i) {
        const Graph g = random_connected(20, 0.1, i % 2, WeightChoice::up_to_three, rng);
        const auto s = t::random_group(20, 3, rng);
        const DistanceArray d = multi_source_sssp(g, s);
        const LevelBuckets b(d);
        EXPECT_EQ(b.count_at_least(1), 17u);
        for (Distance lvl = 1; lvl < 40; ++lvl)
            EXPECT_GE(b.count_at_least(lvl), b.count_at_least(lvl + 1));
    }
}

TEST(AddEstimate, Formula) {
    // vertex 1 is adjacent to the group {0} and has degree 3
    const Graph g = t::graph_of(5, false, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
    const GroupDistanceState st(g, Group{0});
    EXPECT_DOUBLE_EQ(add_estimate(st, 1), 4.0);
    // 2 and 4 both have degree 1; 4 is farther and ranks first
    EXPECT_GT(add_estimate(st, 4), add_estimate(st, 2));
}

TEST(AcceptanceLimit, ExactIntegerThreshold) {
    EXPECT_EQ(acceptance_limit(1000, 0.01, 10), 999);
    EXPECT_EQ(acceptance_limit(999, 0.01, 10), 998);
    EXPECT_EQ(acceptance_limit(100, 0.5, 1), 50);
    EXPECT_LT(acceptance_limit(100, 2.0, 1), 0);
    EXPECT_EQ(acceptance_limit(5, 0.001, 3), 4);
}

TEST(FarnessDecrease, ExactAndBoundsSound) {
    Rng rng(13);
    std::size_t observed = 0;
    for (std::size_t i = 0; i < 400; ++i) {
        const Graph g = connected_graph(i, 4 + static_cast<Vertex>(rng() % 12), rng);
        const Vertex n = g.num_vertices();
        const auto s = t::random_group(n, 1 + static_cast<Vertex>(rng() % (n - 2)), rng);
        Vertex v = static_cast<Vertex>(rng() % n);
        while (std::binary_search(s.begin(), s.end(), v))
            v = (v + 1) % n;
        const DistanceArray base = multi_source_sssp(g, s);
        const LevelBuckets buckets(base);
        FarnessDecreaseEvaluator ev(g);
        std::vector<std::uint64_t> bounds;
        const FarnessDecreaseEvaluator::BoundObserver obs = [&](Distance, std::uint64_t b) {
            bounds.push_back(b);
        };
        const DecreaseResult r = ev.evaluate({base, &buckets}, v, 0, &obs);
        const std::uint64_t exact = group_farness_raw(g, s) - group_farness_raw(g, t::with(s, v));
        ASSERT_TRUE(r.is_exact);
        EXPECT_EQ(r.value, exact) << t::describe(g);
        for (auto b : bounds)
            EXPECT_GE(b, exact) << t::describe(g);
        observed += bounds.size();

        // with a demand above the exact decrease the traversal may stop early,
        // and then reports a bound below the demand
        const DecreaseResult pruned =
            ev.evaluate({base, &buckets}, v, static_cast<std::int64_t>(exact) + 1);
        if (!pruned.is_exact)
            EXPECT_LE(pruned.value, exact);
        else
            EXPECT_EQ(pruned.value, exact);
    }
    EXPECT_GT(observed, 400u);
}

TEST(GreedyCloseness, StarAndWeightedPath) {
    const Graph star = t::graph_of(5, false, {{3, 0}, {3, 1}, {3, 2}, {3, 4}});
    EXPECT_EQ(greedy_closeness(star, config(1)).group, Group{3});
    const RunReport r = greedy_closeness(weighted_path(), config(1));
    EXPECT_EQ(r.group, Group{1});
    EXPECT_EQ(r.raw_farness, 5u);
    EXPECT_DOUBLE_EQ(r.objective_value, 0.8);
}

TEST(GreedyCloseness, RejectsDisconnectedAndFullGroup) {
    const Graph g = t::graph_of(4, false, {{0, 1}, {2, 3}});
    EXPECT_THROW(greedy_closeness(g, config(1)), DisconnectedError);
    EXPECT_THROW(local_search_closeness(g, config(1)), DisconnectedError);
    const Graph path = t::graph_of(3, false, {{0, 1}, {1, 2}});
    EXPECT_THROW(greedy_closeness(path, config(3)), InputError);
    const Graph dag = t::graph_of(3, true, {{0, 1}, {1, 2}});
    EXPECT_THROW(greedy_closeness(dag, config(1)), DisconnectedError);
}

TEST(GreedyCloseness, MatchesPlainGreedyWithExactTies) {
    Rng rng(23);
    for (std::size_t i = 0; i < 80; ++i) {
        const Graph g = connected_graph(i, 6 + static_cast<Vertex>(rng() % 20), rng);
        const Vertex n = g.num_vertices();
        const Vertex k = 1 + static_cast<Vertex>(rng() % 4);
        Group s;
        for (Vertex step = 0; step < k; ++step) {
            Vertex best = kNoVertex;
            std::uint64_t best_raw = 0;
            for (Vertex v = 0; v < n; ++v) {
                if (std::binary_search(s.begin(), s.end(), v))
                    continue;
                const std::uint64_t raw = group_farness_raw(g, t::with(s, v));
                if (best == kNoVertex || raw < best_raw) {
                    best = v;
                    best_raw = raw;
                }
            }
            s = t::with(s, best);
        }
        const RunReport pruned = greedy_closeness(g, config(k));
        const RunReport plain = greedy_closeness(g, config(k, false));
        EXPECT_EQ(pruned.group, s) << t::describe(g);
        EXPECT_EQ(plain.group, s);
        EXPECT_EQ(plain.traversals_pruned, 0u);
    }
}

TEST(LocalSearchCloseness, LocallyOptimalOverAllSwaps) {
    Rng rng(33);
    for (std::size_t i = 0; i < 80; ++i) {
        const Graph g = connected_graph(i, 5 + static_cast<Vertex>(rng() % 8), rng);
        const Vertex n = g.num_vertices();
        const Vertex k = 1 + static_cast<Vertex>(rng() % 3);
        const AlgoConfig cfg = config(k);
        const RunReport r = local_search_closeness(g, cfg);
        ASSERT_EQ(r.group.size(), k);
        const std::uint64_t raw = *r.raw_farness;
        const std::uint64_t q = std::uint64_t{k} * (n - k);
        for (Vertex u : r.group)
            for (Vertex v = 0; v < n; ++v) {
                if (std::binary_search(r.group.begin(), r.group.end(), v))
                    continue;
                const Group swapped = t::with(t::without(r.group, u), v);
                const std::uint64_t after = group_farness_raw(g, swapped);
                EXPECT_FALSE(qualifies(after, raw, cfg.eps, q))
                    << t::describe(g) << " swap " << u << "->" << v;
            }
    }
}

TEST(LocalSearchCloseness, EverySwapMeetsThreshold) {
    Rng rng(37);
    for (std::size_t i = 0; i < 60; ++i) {
        const Graph g = connected_graph(i, 8 + static_cast<Vertex>(rng() % 10), rng);
        const Vertex n = g.num_vertices();
        const AlgoConfig cfg = config(3);
        const Group start = t::random_group(n, 3, rng);
        const RunReport r = local_search_closeness(g, cfg, start);
        Group s = start;
        std::uint64_t raw = group_farness_raw(g, s);
        for (const SwapRecord &sw : r.swaps) {
            s = t::with(t::without(s, sw.removed), sw.added);
            const std::uint64_t next = group_farness_raw(g, s);
            EXPECT_TRUE(qualifies(next, raw, cfg.eps, 3ull * (n - 3)));
            raw = next;
        }
        EXPECT_EQ(s, r.group);
        EXPECT_EQ(raw, *r.raw_farness);
        EXPECT_LE(raw, group_farness_raw(g, start));
    }
}

TEST(LocalSearchCloseness, OptimumStartMakesNoSwap) {
    Rng rng(39);
    for (std::size_t i = 0; i < 20; ++i) {
        const Graph g = connected_graph(i, 8, rng);
        const AlgoConfig cfg = config(2);
        const RunReport opt = exhaustive_best(g, cfg, ObjectiveKind::closeness);
        const RunReport r = local_search_closeness(g, cfg, opt.group);
        EXPECT_EQ(r.swaps_committed, 0u);
        EXPECT_EQ(r.group, opt.group);
    }
}

TEST(LocalSearchCloseness, SingleMemberGroups) {
    const RunReport r = local_search_closeness(weighted_path(), config(1), Group{0});
    EXPECT_EQ(r.raw_farness, 5u);
    EXPECT_EQ(r.swaps.size(), 1u);
}

TEST(LocalSearchCloseness, PruningDoesNotChangeSwaps) {
    Rng rng(43);
    for (std::size_t i = 0; i < 50; ++i) {
        const Graph g = connected_graph(i, 10 + static_cast<Vertex>(rng() % 20), rng);
        const Vertex k = 1 + static_cast<Vertex>(rng() % 4);
        const Group start = t::random_group(g.num_vertices(), k, rng);
        const RunReport a = local_search_closeness(g, config(k), start);
        const RunReport b = local_search_closeness(g, config(k, false), start);
        EXPECT_EQ(a.swaps, b.swaps);
        EXPECT_EQ(b.traversals_pruned, 0u);
    }
}

TEST(LocalSearchCloseness, WorkerCountDoesNotChangeSwaps) {
    Rng rng(47);
    for (std::size_t i = 0; i < 10; ++i) {
        const Graph g = connected_graph(i, 30, rng);
        AlgoConfig par = config(4);
        par.deterministic = false;
        par.workers = 3;
        EXPECT_EQ(local_search_closeness(g, par).swaps, local_search_closeness(g, config(4)).swaps);
    }
}

TEST(LeafSwaps, DominatedOnUndirectedUnitGraphs) {
    // leaf l with neighbour w: if w is outside S - u then swapping in w is at
    // least as good; otherwise the leaf swap does not beat S itself
    Rng rng(53);
    std::size_t leaf_swaps = 0;
    for (int i = 0; i < 120; ++i) {
        const Graph g = random_connected(4 + static_cast<Vertex>(rng() % 7), i % 3 ? 0.1 : 0.0,
                                         false, WeightChoice::unit, rng);
        const Vertex n = g.num_vertices();
        for (Vertex k = 1; k < std::min<Vertex>(n, 4); ++k) {
            const auto s = t::random_group(n, k, rng);
            const std::uint64_t raw = group_farness_raw(g, s);
            for (Vertex leaf = 0; leaf < n; ++leaf) {
                if (!excluded_from_swaps(g, leaf) || std::binary_search(s.begin(), s.end(), leaf))
                    continue;
                const Vertex w = g.out_arcs(leaf)[0].target;
                for (Vertex u : s) {
                    ++leaf_swaps;
                    const Group rest = t::without(s, u);
                    const std::uint64_t with_leaf = group_farness_raw(g, t::with(rest, leaf));
                    if (!std::binary_search(rest.begin(), rest.end(), w))
                        EXPECT_LE(group_farness_raw(g, t::with(rest, w)), with_leaf);
                    else
                        EXPECT_GE(with_leaf, raw);
                }
            }
        }
    }
    EXPECT_GT(leaf_swaps, 100u);
}

TEST(LeafSwaps, CanStrictlyImproveSoOnlyDominanceHolds) {
    // 0 - 1 - 2 - 3 - 4 - 5 with a leaf 6 hanging off 2: moving the group
    // from the end of the path to the leaf lowers farness
    const Graph g =
        t::graph_of(7, false, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}});
    EXPECT_TRUE(excluded_from_swaps(g, 6));
    EXPECT_LT(group_farness_raw(g, Group{6}), group_farness_raw(g, Group{0}));
    EXPECT_LT(group_farness_raw(g, Group{2}), group_farness_raw(g, Group{6}));
}

TEST(LeafSwaps, NotExcludedWithWeights) {
    const Graph g = t::graph_of(3, false, {{0, 1, 5}, {1, 2, 1}});
    EXPECT_FALSE(excluded_from_swaps(g, 0));
}

TEST(MultiSwap, Preconditions) {
    Rng rng(59);
    const Graph g = random_connected(10, 0.2, false, WeightChoice::unit, rng);
    AlgoConfig cfg = config(3);
    cfg.p = 1;
    EXPECT_THROW(multi_swap_closeness(g, cfg), InputError);
    cfg.p = 3;
    EXPECT_THROW(multi_swap_closeness(g, cfg), InputError);
    cfg.p = 2;
    EXPECT_NO_THROW(multi_swap_closeness(g, cfg));
}

TEST(MultiSwap, NeverWorseThanStart) {
    Rng rng(61);
    std::size_t at_least_as_good = 0, trials = 0;
    for (std::size_t i = 0; i < 60; ++i) {
        const Graph g = connected_graph(i, 8 + static_cast<Vertex>(rng() % 8), rng);
        AlgoConfig cfg = config(3);
        cfg.p = 2;
        const Group start = t::random_group(g.num_vertices(), 3, rng);
        const RunReport r = multi_swap_closeness(g, cfg, start);
        ASSERT_EQ(r.group.size(), 3u);
        EXPECT_LE(*r.raw_farness, group_farness_raw(g, start));
        const RunReport single = local_search_closeness(g, config(3), start);
        ++trials;
        if (*r.raw_farness <= *single.raw_farness)
            ++at_least_as_good;
    }
    RecordProperty("multi_swap_at_least_as_good", std::to_string(at_least_as_good) + "/" +
                                                       std::to_string(trials));
}
