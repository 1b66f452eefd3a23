/*
 * closeness.hpp
 *
 * Group-closeness maximization, phrased as minimization of the raw farness
 * sum: greedy, prioritized single-swap local search with lower-bound
 * pruning, and the restricted multi-swap variant.
 */

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "groupcent/centrality.hpp"
#include "groupcent/report.hpp"

namespace groupcent {

/**
 * Distance profile of the non-members of a group: for every threshold t the
 * number of vertices with dist >= t and the sum of their distances, plus the
 * non-members sorted by (dist, id). Entries equal to 0 (members) or
 * kUnreachable are left out.
 */
class LevelBuckets {
public:
    LevelBuckets() = default;
    explicit LevelBuckets(std::span<const Distance> dist);

    std::uint64_t count_at_least(Distance t) const;
    std::uint64_t sum_at_least(Distance t) const;
    /// Non-members ordered by distance to the group, ties by id.
    const std::vector<Vertex> &by_distance() const noexcept { return order_; }
    /// Distinct distances, ascending.
    const std::vector<Distance> &levels() const noexcept { return levels_; }
    /// True if rebuilding from `dist` gives exactly this profile.
    bool matches(std::span<const Distance> dist) const;

private:
    std::size_t first_at_least(Distance t) const;

    std::vector<Distance> levels_;
    std::vector<std::uint64_t> count_ge_;
    std::vector<std::uint64_t> sum_ge_;
    std::vector<Vertex> order_;
};

/// Group the candidate is added to: per-vertex distances and their profile.
struct FarnessBase {
    std::span<const Distance> dist;
    const LevelBuckets *buckets;
};

struct DecreaseResult {
    /// When true `value` is the exact raw-farness decrease caused by adding
    /// the candidate; otherwise an upper bound on it below `required`.
    bool is_exact = false;
    std::uint64_t value = 0;
};

/**
 * Exact farness decrease of adding a candidate, by a traversal restricted to
 * vertices strictly closer to the candidate than to the base group.
 *
 * After every completed distance level i an upper bound on the decrease is
 * recomputed. Unit weights: vertices at distance i + 1 are at most the
 * neighbour count of level i (capped by the unexplored vertices at distance
 * >= i + 2 from the group) and everything else sits at i + 2. Weighted: every
 * unexplored vertex sits at distance i. Unexplored means outside the
 * improved set; improved vertices are removed from the profile terms.
 */
class FarnessDecreaseEvaluator {
public:
    using BoundObserver = std::function<void(Distance level, std::uint64_t bound)>;

    explicit FarnessDecreaseEvaluator(const Graph &g);

    /// Stops once the bound is below `required` (<= 0 never stops).
    DecreaseResult evaluate(const FarnessBase &base, Vertex candidate, std::int64_t required,
                            const BoundObserver *observer = nullptr);

private:
    void reset();

    const Graph *graph_;
    DistanceArray local_;
    std::vector<Vertex> touched_;
    std::vector<Vertex> frontier_;
    std::vector<Vertex> next_;
    std::vector<std::pair<Distance, Vertex>> heap_;
    std::vector<Distance> improved_; // min-heap of base distances
};

/// Priority of adding v: dist(S, v) * (1 + out-degree). Higher goes first.
double add_estimate(const GroupDistanceState &state, Vertex v);

/// Candidates excluded from swaps: degree-1 vertices of undirected
/// unit-weight graphs, which never beat a swap with their neighbour.
bool excluded_from_swaps(const Graph &g, Vertex v);

/// Greedy: start from the vertex of minimum farness, then repeatedly add the
/// vertex giving the smallest farness. Requires a (strongly) connected graph
/// and k < n; throws DisconnectedError otherwise.
RunReport greedy_closeness(const Graph &g, const AlgoConfig &cfg);

/**
 * Single-swap local search. A swap (u, v) is committed when
 * raw((S - u) + v) <= (1 - eps / (k (n - k))) raw(S), compared exactly in
 * integers. Members are tried by ascending removal cost, candidates by
 * descending add_estimate; the first qualifying swap wins.
 */
RunReport local_search_closeness(const Graph &g, const AlgoConfig &cfg);
RunReport local_search_closeness(const Graph &g, const AlgoConfig &cfg,
                                 std::span<const Vertex> initial);

/**
 * Multi-swap: remove cfg.p members one by one at minimum removal cost, then
 * add candidates in add_estimate order, dropping the cheapest member again
 * whenever the group is full but not good enough. The composite move is kept
 * when raw(S_new) <= (1 - eps / C(n - k + p, p)) raw(S_old); otherwise S_old is
 * restored and the search ends. Requires 1 < p < k.
 */
RunReport multi_swap_closeness(const Graph &g, const AlgoConfig &cfg);
RunReport multi_swap_closeness(const Graph &g, const AlgoConfig &cfg,
                               std::span<const Vertex> initial);

/// Largest raw farness that satisfies raw <= (1 - eps / neighbours) * current,
/// evaluated in exact integer arithmetic (eps rounded to 1e-12). Negative
/// when nothing qualifies.
std::int64_t acceptance_limit(std::uint64_t current, double eps, std::uint64_t neighbours);

} // namespace groupcent
