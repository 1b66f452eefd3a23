/*
 * harmonic.hpp
 *
 * Group-harmonic maximization: lazy greedy with pruned marginal-gain
 * traversals, and single-swap local search seeded with the greedy group.
 */

#pragma once

#include <functional>
#include <span>
#include <vector>

#include "groupcent/graph.hpp"
#include "groupcent/report.hpp"

namespace groupcent {

class WorkerPool;

/// Upper bound on the marginal gain of adding `vertex` to the current group.
struct BoundEntry {
    Vertex vertex;
    double bound;
};

/// Heap order: larger bound first, smaller id first among equal bounds.
struct BoundEntryLess {
    bool operator()(const BoundEntry &a, const BoundEntry &b) const {
        if (a.bound != b.bound)
            return a.bound < b.bound;
        return a.vertex > b.vertex;
    }
};

struct PrunedGainResult {
    /// When true `value` is GH(S + u) - GH(S); otherwise an upper bound on it
    /// that fell below the cutoff.
    bool is_exact = false;
    double value = 0.0;
};

/// Harmonic centrality of every vertex (one SSSP each).
std::vector<double> harmonic_centralities(const Graph &g, WorkerPool *pool = nullptr);

/// argmax of harmonic centrality; ties to the smaller id.
Vertex top_harmonic_vertex(const Graph &g);

/// Tolerance below the cutoff that a bound must reach before a traversal is
/// abandoned. Only widens the set of exactly evaluated candidates.
double prune_margin(double cutoff);

/// Per-graph data shared by all evaluators: reach counts and, for
/// undirected unit-weight graphs, the component of every vertex.
class HarmonicContext {
public:
    explicit HarmonicContext(const Graph &g);

    const Graph &graph() const noexcept { return *graph_; }
    std::uint64_t reach(Vertex u) const { return reach_[u]; }
    /// True when the "distance 1 from S" reduction of r(u) applies.
    bool reduces_reach() const noexcept { return reduces_reach_; }
    std::uint32_t component(Vertex u) const { return component_[u]; }
    std::size_t num_components() const noexcept { return num_components_; }

private:
    const Graph *graph_;
    std::vector<std::uint64_t> reach_;
    bool reduces_reach_ = false;
    std::vector<std::uint32_t> component_;
    std::size_t num_components_ = 0;
};

/// Read-only description of the current group for gain evaluation.
struct HarmonicGroupView {
    /// dist(S, x); 0 exactly on members.
    std::span<const Distance> dist;
    /// Per component: vertices at distance 1 from S (undirected unit weights).
    std::span<const std::uint32_t> at_distance_one;
};

/// Fills `storage` with the per-component counts and returns the view.
HarmonicGroupView make_harmonic_view(const HarmonicContext &ctx, std::span<const Distance> dist,
                                     std::vector<std::uint32_t> &storage);

/**
 * Marginal-gain evaluation by a traversal from the candidate that only
 * enters vertices strictly closer to the candidate than to the group.
 *
 * After every completed distance level the evaluator recomputes an upper
 * bound on the gain: on unit-weight graphs it assumes the next level holds at
 * most the out-degree sum of the current one and every other reachable
 * vertex lies one level further; on weighted graphs it assumes every
 * unexplored reachable vertex sits at the current distance. The traversal
 * stops as soon as the bound drops below the cutoff.
 *
 * Owns O(n) scratch; one instance per worker.
 */
class HarmonicGainEvaluator {
public:
    using BoundObserver = std::function<void(Distance level, double bound)>;

    explicit HarmonicGainEvaluator(const HarmonicContext &ctx);

    /// `cutoff` is the gain to beat (-inf disables pruning). The observer,
    /// when given, sees every bound the traversal computes.
    PrunedGainResult evaluate(const HarmonicGroupView &view, Vertex candidate, double cutoff,
                              const BoundObserver *observer = nullptr);

private:
    PrunedGainResult evaluate_unit(const HarmonicGroupView &view, Vertex u, double cutoff,
                                   const BoundObserver *observer);
    PrunedGainResult evaluate_weighted(const HarmonicGroupView &view, Vertex u, double cutoff,
                                       const BoundObserver *observer);
    void reset();

    const HarmonicContext *ctx_;
    DistanceArray local_;
    std::vector<Vertex> touched_;
    std::vector<Vertex> frontier_;
    std::vector<Vertex> next_;
    std::vector<std::pair<Distance, Vertex>> heap_;
};

/// Greedy: start from the top harmonic vertex, then repeatedly add the
/// vertex of largest marginal gain (kept even when negative) using lazy
/// upper bounds across rounds. cfg.pruning = false evaluates every candidate
/// exactly in every round.
RunReport greedy_harmonic(const Graph &g, const AlgoConfig &cfg);

/**
 * Single-swap local search. Commits the first swap (members by ascending
 * removal loss, candidates by descending harmonic centrality) reaching
 * GH(S') >= (1 + eps / (k (n - k))) GH(S), or GH(S') > GH(S) + 1e-9 when
 * GH(S) <= 0. Stops after a full scan without commit.
 */
RunReport local_search_harmonic(const Graph &g, const AlgoConfig &cfg);
RunReport local_search_harmonic(const Graph &g, const AlgoConfig &cfg,
                                std::span<const Vertex> initial);

} // namespace groupcent
