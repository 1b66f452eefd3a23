/*
 * closeness.cpp
 */

#include "groupcent/closeness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <numeric>

#include "groupcent/kernels.hpp"
#include "groupcent/shortest_paths.hpp"
#include "groupcent/worker_pool.hpp"

namespace groupcent {

// ---------------------------------------------------------------------------
// LevelBuckets
// ---------------------------------------------------------------------------

LevelBuckets::LevelBuckets(std::span<const Distance> dist) {
    for (Vertex x = 0; x < dist.size(); ++x)
        if (dist[x] != 0 && dist[x] != kUnreachable)
            order_.push_back(x);
    std::sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
        return dist[a] != dist[b] ? dist[a] < dist[b] : a < b;
    });
    for (Vertex x : order_) {
        if (levels_.empty() || levels_.back() != dist[x]) {
            levels_.push_back(dist[x]);
            count_ge_.push_back(0);
            sum_ge_.push_back(0);
        }
        ++count_ge_.back();
        sum_ge_.back() += dist[x];
    }
    count_ge_.push_back(0);
    sum_ge_.push_back(0);
    for (std::size_t i = levels_.size(); i-- > 0;) {
        count_ge_[i] += count_ge_[i + 1];
        sum_ge_[i] += sum_ge_[i + 1];
    }
}

std::size_t LevelBuckets::first_at_least(Distance t) const {
    return static_cast<std::size_t>(std::lower_bound(levels_.begin(), levels_.end(), t) -
                                    levels_.begin());
}

std::uint64_t LevelBuckets::count_at_least(Distance t) const {
    return count_ge_[first_at_least(t)];
}

std::uint64_t LevelBuckets::sum_at_least(Distance t) const { return sum_ge_[first_at_least(t)]; }

bool LevelBuckets::matches(std::span<const Distance> dist) const {
    const LevelBuckets fresh(dist);
    return fresh.levels_ == levels_ && fresh.count_ge_ == count_ge_ &&
           fresh.sum_ge_ == sum_ge_ && fresh.order_ == order_;
}

// ---------------------------------------------------------------------------
// FarnessDecreaseEvaluator
// ---------------------------------------------------------------------------

FarnessDecreaseEvaluator::FarnessDecreaseEvaluator(const Graph &g)
    : graph_(&g), local_(g.num_vertices(), kUnreachable) {}

void FarnessDecreaseEvaluator::reset() {
    for (Vertex x : touched_)
        local_[x] = kUnreachable;
    touched_.clear();
}

namespace {

// Improved vertices whose base distance is still >= the current threshold.
class ImprovedTail {
public:
    explicit ImprovedTail(std::vector<Distance> &heap) : heap_(heap) { heap_.clear(); }

    void add(Distance d) {
        heap_.push_back(d);
        std::push_heap(heap_.begin(), heap_.end(), std::greater<>());
        ++count_;
        sum_ += d;
    }
    void raise_threshold(Distance t) {
        while (!heap_.empty() && heap_.front() < t) {
            --count_;
            sum_ -= heap_.front();
            std::pop_heap(heap_.begin(), heap_.end(), std::greater<>());
            heap_.pop_back();
        }
    }
    std::uint64_t count() const { return count_; }
    std::uint64_t sum() const { return sum_; }

private:
    std::vector<Distance> &heap_;
    std::uint64_t count_ = 0;
    std::uint64_t sum_ = 0;
};

} // namespace

DecreaseResult FarnessDecreaseEvaluator::evaluate(const FarnessBase &base, Vertex v,
                                                  std::int64_t required,
                                                  const BoundObserver *observer) {
    const Graph &g = *graph_;
    const std::span<const Distance> dist = base.dist;
    if (dist[v] == 0)
        throw InputError("candidate is already a group member");
    const bool bounding = observer != nullptr || required > 0;
    const LevelBuckets &buckets = *base.buckets;
    ImprovedTail tail(improved_);

    auto finish = [this](DecreaseResult r) {
        reset();
        return r;
    };

    std::uint64_t partial = 0;
    local_[v] = 0;
    touched_.push_back(v);

    if (g.has_unit_weights()) {
        const bool directed = g.is_directed();
        partial += dist[v];
        tail.add(dist[v]);
        frontier_.assign(1, v);
        Distance level = 0;
        for (;;) {
            if (bounding) {
                const Distance t = level + 2;
                tail.raise_threshold(t);
                const std::uint64_t count = buckets.count_at_least(t) - tail.count();
                const std::uint64_t sum = buckets.sum_at_least(t) - tail.sum();
                std::uint64_t reachable_next = 0;
                for (Vertex x : frontier_) {
                    if (directed)
                        reachable_next += g.out_degree(x);
                    else
                        reachable_next += level == 0 ? g.degree(x) : g.degree(x) - 1;
                }
                // vertices at distance t gain nothing at i + 2, so summing
                // from t instead of t + 1 adds zeros only
                const std::uint64_t bound = partial + (sum - t * count) +
                                            std::min(count, reachable_next);
                if (observer)
                    (*observer)(level, bound);
                if (static_cast<std::int64_t>(bound) < required)
                    return finish({false, bound});
            }

            next_.clear();
            const Distance d = level + 1;
            for (Vertex x : frontier_) {
                for (const Arc &a : g.out_arcs(x)) {
                    const Vertex y = a.target;
                    if (local_[y] != kUnreachable || d >= dist[y])
                        continue;
                    local_[y] = d;
                    touched_.push_back(y);
                    next_.push_back(y);
                    partial += dist[y] - d;
                    tail.add(dist[y]);
                }
            }
            if (next_.empty())
                return finish({true, partial});
            frontier_.swap(next_);
            ++level;
        }
    }

    auto cmp = std::greater<>();
    heap_.clear();
    heap_.emplace_back(0, v);
    while (!heap_.empty()) {
        std::pop_heap(heap_.begin(), heap_.end(), cmp);
        const auto [d, x] = heap_.back();
        heap_.pop_back();
        if (d != local_[x])
            continue;
        partial += dist[x] - d;
        tail.add(dist[x]);
        for (const Arc &a : g.out_arcs(x)) {
            const Vertex y = a.target;
            const Distance nd = d + a.weight;
            if (nd >= dist[y] || nd >= local_[y])
                continue;
            if (local_[y] == kUnreachable)
                touched_.push_back(y);
            local_[y] = nd;
            heap_.emplace_back(nd, y);
            std::push_heap(heap_.begin(), heap_.end(), cmp);
        }
        while (!heap_.empty() && heap_.front().first != local_[heap_.front().second]) {
            std::pop_heap(heap_.begin(), heap_.end(), cmp);
            heap_.pop_back();
        }
        if (heap_.empty())
            break;
        if (bounding && heap_.front().first > d) {
            const Distance t = d + 1;
            tail.raise_threshold(t);
            const std::uint64_t count = buckets.count_at_least(t) - tail.count();
            const std::uint64_t sum = buckets.sum_at_least(t) - tail.sum();
            const std::uint64_t bound = partial + (sum - d * count);
            if (observer)
                (*observer)(d, bound);
            if (static_cast<std::int64_t>(bound) < required)
                return finish({false, bound});
        }
    }
    return finish({true, partial});
}

// ---------------------------------------------------------------------------
// helpers
// ---------------------------------------------------------------------------

double add_estimate(const GroupDistanceState &state, Vertex v) {
    const Distance d = state.nearest()[v];
    return static_cast<double>(d) * (1.0 + state.graph().out_degree(v));
}

bool excluded_from_swaps(const Graph &g, Vertex v) {
    return !g.is_directed() && g.has_unit_weights() && g.degree(v) == 1;
}

std::int64_t acceptance_limit(std::uint64_t current, double eps, std::uint64_t neighbours) {
    using i128 = __int128;
    constexpr std::int64_t kScale = 1'000'000'000'000LL;
    const auto eps_scaled = static_cast<i128>(std::llround(eps * static_cast<double>(kScale)));
    const i128 denom = static_cast<i128>(neighbours) * kScale;
    const i128 numer = static_cast<i128>(current) * (denom - eps_scaled);
    if (numer < 0)
        return -1;
    return static_cast<std::int64_t>(numer / denom);
}

namespace {

void check_closeness_input(const Graph &g, const AlgoConfig &cfg) {
    cfg.validate();
    if (g.num_vertices() < 2)
        throw InputError("closeness needs at least two vertices");
    if (cfg.k >= g.num_vertices())
        throw InputError("k must be smaller than the number of vertices");
    if (!is_connected(g))
        throw DisconnectedError(g.is_directed() ? "graph is not strongly connected"
                                                : "graph is not connected");
}

std::vector<Vertex> candidates_by_estimate(const GroupDistanceState &state, bool skip_leaves) {
    const Graph &g = state.graph();
    std::vector<std::pair<double, Vertex>> keyed;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (state.contains(v) || (skip_leaves && excluded_from_swaps(g, v)))
            continue;
        keyed.emplace_back(add_estimate(state, v), v);
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto &a, const auto &b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    std::vector<Vertex> out;
    out.reserve(keyed.size());
    for (const auto &[key, v] : keyed)
        out.push_back(v);
    return out;
}

class FarnessEvaluators {
public:
    FarnessEvaluators(const Graph &g, std::size_t workers) {
        for (std::size_t w = 0; w < workers; ++w)
            evaluators_.push_back(std::make_unique<FarnessDecreaseEvaluator>(g));
    }
    FarnessDecreaseEvaluator &operator[](std::size_t w) { return *evaluators_[w]; }

private:
    std::vector<std::unique_ptr<FarnessDecreaseEvaluator>> evaluators_;
};

void finish_closeness_report(const Graph &g, RunReport &report, const GroupDistanceState &state) {
    report.group = state.group();
    report.objective = ObjectiveKind::closeness;
    const std::uint64_t raw = group_farness_raw(g, report.group);
    report.raw_farness = raw;
    report.objective_value = closeness_from_raw(g.num_vertices(), raw);
}

Distance eccentricity(const DistanceArray &d) {
    Distance ecc = 0;
    for (Distance x : d)
        if (x != kUnreachable)
            ecc = std::max(ecc, x);
    return ecc;
}

} // namespace

// ---------------------------------------------------------------------------
// Greedy
// ---------------------------------------------------------------------------

namespace {

GroupDistanceState greedy_closeness_state(const Graph &g, const AlgoConfig &cfg,
                                          RunReport &report) {
    const Vertex n = g.num_vertices();
    WorkerPool pool(cfg.effective_workers());
    FarnessEvaluators evaluators(g, pool.size());

    std::vector<std::uint64_t> farness(n);
    pool.run(n, [&](std::size_t u, std::size_t) {
        farness[u] = kernels::farness_sum(sssp(g, static_cast<Vertex>(u))).sum;
    });
    const Vertex top = static_cast<Vertex>(
        std::min_element(farness.begin(), farness.end()) - farness.begin());
    GroupDistanceState state(g, Group{top});
    report.iterations = 1;

    std::vector<Vertex> batch;
    std::vector<DecreaseResult> results;
    while (state.group().size() < cfg.k) {
        const LevelBuckets buckets(state.nearest());
        const FarnessBase base{state.nearest(), &buckets};
        const std::vector<Vertex> order = candidates_by_estimate(state, false);

        std::uint64_t best_decrease = 0;
        Vertex best = kNoVertex;
        for (std::size_t at = 0; at < order.size(); at += pool.size()) {
            const std::size_t count = std::min(pool.size(), order.size() - at);
            results.assign(count, {});
            const std::uint64_t incumbent = best_decrease;
            const Vertex incumbent_id = best;
            pool.run(count, [&](std::size_t i, std::size_t w) {
                const Vertex v = order[at + i];
                std::int64_t required = 0;
                if (cfg.pruning && incumbent_id != kNoVertex)
                    required = static_cast<std::int64_t>(incumbent) + (v > incumbent_id ? 1 : 0);
                results[i] = evaluators[w].evaluate(base, v, required);
            });
            for (std::size_t i = 0; i < count; ++i) {
                const Vertex v = order[at + i];
                ++report.candidates_evaluated;
                if (!results[i].is_exact) {
                    ++report.traversals_pruned;
                    continue;
                }
                const std::uint64_t dec = results[i].value;
                if (best == kNoVertex || dec > best_decrease || (dec == best_decrease && v < best)) {
                    best_decrease = dec;
                    best = v;
                }
            }
        }
        Group next = state.group();
        next.push_back(best);
        state = GroupDistanceState(g, next);
        ++report.iterations;
    }
    return state;
}

} // namespace

RunReport greedy_closeness(const Graph &g, const AlgoConfig &cfg) {
    check_closeness_input(g, cfg);
    Stopwatch clock;
    RunReport report;
    report.algorithm = "greedy-c";
    report.config = cfg;
    const GroupDistanceState state = greedy_closeness_state(g, cfg, report);
    finish_closeness_report(g, report, state);
    report.wall_time_ms = clock.elapsed_ms();
    return report;
}

// ---------------------------------------------------------------------------
// Single-swap local search
// ---------------------------------------------------------------------------

RunReport local_search_closeness(const Graph &g, const AlgoConfig &cfg) {
    check_closeness_input(g, cfg);
    Stopwatch clock;
    RunReport seed;
    const GroupDistanceState init = greedy_closeness_state(g, cfg, seed);
    RunReport report = local_search_closeness(g, cfg, init.group());
    report.init = "greedy";
    report.wall_time_ms = clock.elapsed_ms();
    return report;
}

RunReport local_search_closeness(const Graph &g, const AlgoConfig &cfg,
                                 std::span<const Vertex> initial) {
    check_closeness_input(g, cfg);
    Stopwatch clock;
    const Vertex n = g.num_vertices();
    const Group start = normalize_group(g, initial);
    if (start.size() != cfg.k)
        throw InputError("initial group size differs from k");

    RunReport report;
    report.algorithm = "ls-c";
    report.config = cfg;
    report.init = "given";

    WorkerPool pool(cfg.effective_workers());
    FarnessEvaluators evaluators(g, pool.size());
    const std::uint64_t neighbours = std::uint64_t{cfg.k} * (n - cfg.k);
    const bool skip_leaves = true;

    GroupDistanceState state(g, start);
    std::uint64_t raw = state.raw_farness();
    DistanceArray without(n);
    std::vector<DecreaseResult> results;

    for (;;) {
        ++report.iterations;
        const std::int64_t limit = acceptance_limit(raw, cfg.eps, neighbours);

        struct Removal {
            Vertex u;
            std::uint64_t cost;
        };
        std::vector<Removal> removals;
        // With a single member, removal leaves nothing: every vertex is then
        // treated as sitting at a common distance larger than any real one.
        Distance virtual_distance = 0;
        if (state.group().size() == 1) {
            const Vertex u = state.group().front();
            const Graph &gg = g;
            Distance out_ecc = eccentricity(sssp(gg, u));
            Distance in_ecc = out_ecc;
            if (g.is_directed()) {
                std::vector<Edge> rev;
                for (const Edge &e : g.edges())
                    rev.push_back({e.target, e.source, e.weight});
                in_ecc = eccentricity(sssp(Graph::from_edges(n, true, rev), u));
            }
            virtual_distance = out_ecc + in_ecc + 1;
            removals.push_back({u, std::uint64_t{n} * virtual_distance - raw});
        } else {
            for (Vertex u : state.group())
                if (auto cost = state.removal_cost(u))
                    removals.push_back({u, *cost});
        }
        std::sort(removals.begin(), removals.end(), [](const Removal &a, const Removal &b) {
            return a.cost != b.cost ? a.cost < b.cost : a.u < b.u;
        });
        const std::vector<Vertex> order = candidates_by_estimate(state, skip_leaves);

        std::optional<SwapRecord> chosen;
        std::uint64_t chosen_raw = 0;
        for (const Removal &rm : removals) {
            if (virtual_distance != 0)
                std::fill(without.begin(), without.end(), virtual_distance);
            else
                state.distances_without(rm.u, without);
            const LevelBuckets buckets(without);
            const FarnessBase base{without, &buckets};
            const std::uint64_t base_raw = raw + rm.cost;
            const std::int64_t required =
                limit < 0 ? std::numeric_limits<std::int64_t>::max()
                          : static_cast<std::int64_t>(base_raw) - limit;

            for (std::size_t at = 0; at < order.size() && !chosen; at += pool.size()) {
                const std::size_t count = std::min(pool.size(), order.size() - at);
                results.assign(count, {});
                pool.run(count, [&](std::size_t i, std::size_t w) {
                    results[i] = evaluators[w].evaluate(base, order[at + i],
                                                        cfg.pruning ? required : 0);
                });
                for (std::size_t i = 0; i < count; ++i) {
                    ++report.candidates_evaluated;
                    if (!results[i].is_exact) {
                        ++report.traversals_pruned;
                        continue;
                    }
                    const std::uint64_t candidate_raw = base_raw - results[i].value;
                    if (!chosen && limit >= 0 &&
                        candidate_raw <= static_cast<std::uint64_t>(limit)) {
                        chosen = SwapRecord{rm.u, order[at + i]};
                        chosen_raw = candidate_raw;
                    }
                }
            }
            if (chosen)
                break;
        }
        if (!chosen)
            break;

        state = state.with_swap(chosen->removed, chosen->added);
        raw = state.raw_farness();
        if (raw != chosen_raw)
            throw std::logic_error("farness bookkeeping mismatch after swap");
        report.swaps.push_back(*chosen);
        ++report.swaps_committed;
    }

    finish_closeness_report(g, report, state);
    report.wall_time_ms = clock.elapsed_ms();
    return report;
}

// ---------------------------------------------------------------------------
// Multi-swap
// ---------------------------------------------------------------------------

namespace {

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t r) {
    constexpr std::uint64_t kCap = 1'000'000'000'000'000ULL;
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
        if (acc > kCap)
            return kCap;
    }
    return static_cast<std::uint64_t>(acc);
}

std::optional<Vertex> cheapest_removal(const GroupDistanceState &state) {
    std::optional<Vertex> best;
    std::uint64_t best_cost = 0;
    for (Vertex u : state.group()) {
        const auto cost = state.removal_cost(u);
        if (!cost)
            continue;
        if (!best || *cost < best_cost) {
            best = u;
            best_cost = *cost;
        }
    }
    return best;
}

GroupDistanceState without_member(const GroupDistanceState &state, Vertex u) {
    Group next;
    for (Vertex s : state.group())
        if (s != u)
            next.push_back(s);
    return GroupDistanceState(state.graph(), next);
}

GroupDistanceState with_member(const GroupDistanceState &state, Vertex v) {
    Group next = state.group();
    next.push_back(v);
    return GroupDistanceState(state.graph(), next);
}

} // namespace

RunReport multi_swap_closeness(const Graph &g, const AlgoConfig &cfg) {
    check_closeness_input(g, cfg);
    if (cfg.p <= 1 || cfg.p >= cfg.k)
        throw InputError("multi-swap needs 1 < p < k");
    Stopwatch clock;
    RunReport seed;
    const GroupDistanceState init = greedy_closeness_state(g, cfg, seed);
    RunReport report = multi_swap_closeness(g, cfg, init.group());
    report.init = "greedy";
    report.wall_time_ms = clock.elapsed_ms();
    return report;
}

RunReport multi_swap_closeness(const Graph &g, const AlgoConfig &cfg,
                               std::span<const Vertex> initial) {
    check_closeness_input(g, cfg);
    if (cfg.p <= 1 || cfg.p >= cfg.k)
        throw InputError("multi-swap needs 1 < p < k");
    Stopwatch clock;
    const Vertex n = g.num_vertices();
    const Group start = normalize_group(g, initial);
    if (start.size() != cfg.k)
        throw InputError("initial group size differs from k");

    RunReport report;
    report.algorithm = "multiswap-c";
    report.config = cfg;
    report.init = "given";
    const std::uint64_t neighbours = binomial_capped(n - cfg.k + cfg.p, cfg.p);

    GroupDistanceState state(g, start);
    for (;;) {
        ++report.iterations;
        const std::uint64_t raw_old = state.raw_farness();
        const std::int64_t limit = acceptance_limit(raw_old, cfg.eps, neighbours);

        GroupDistanceState work = state;
        bool removed_all = true;
        for (unsigned i = 0; i < cfg.p; ++i) {
            const auto u = cheapest_removal(work);
            if (!u) {
                removed_all = false;
                break;
            }
            work = without_member(work, *u);
        }
        if (!removed_all)
            break;

        bool accepted = false;
        for (Vertex v : candidates_by_estimate(work, false)) {
            if (work.contains(v))
                continue;
            work = with_member(work, v);
            ++report.candidates_evaluated;
            if (work.group().size() < cfg.k)
                continue;
            if (limit >= 0 && work.raw_farness() <= static_cast<std::uint64_t>(limit)) {
                accepted = true;
                break;
            }
            const auto u = cheapest_removal(work);
            if (!u)
                break;
            work = without_member(work, *u);
        }
        if (!accepted || work.group().size() != cfg.k)
            break;

        std::vector<Vertex> removed, added;
        std::set_difference(state.group().begin(), state.group().end(), work.group().begin(),
                            work.group().end(), std::back_inserter(removed));
        std::set_difference(work.group().begin(), work.group().end(), state.group().begin(),
                            state.group().end(), std::back_inserter(added));
        for (std::size_t i = 0; i < removed.size(); ++i)
            report.swaps.push_back({removed[i], added[i]});
        state = std::move(work);
        ++report.swaps_committed;
    }

    finish_closeness_report(g, report, state);
    report.wall_time_ms = clock.elapsed_ms();
    return report;
}

} // namespace groupcent
