/*
 * harmonic.cpp
 */

#include "groupcent/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>

#include "groupcent/kernels.hpp"
#include "groupcent/shortest_paths.hpp"
#include "groupcent/worker_pool.hpp"

namespace groupcent {

namespace {

constexpr double kNoCutoff = -std::numeric_limits<double>::infinity();
constexpr double kAbsoluteImprovement = 1e-9;

inline double reciprocal(Distance d) {
    return (d == 0 || d == kUnreachable) ? 0.0 : 1.0 / static_cast<double>(d);
}

inline bool better_gain(double gain, Vertex u, double best_gain, Vertex best) {
    return best == kNoVertex || gain > best_gain || (gain == best_gain && u < best);
}

void check_k(const Graph &g, const AlgoConfig &cfg) {
    cfg.validate();
    if (g.num_vertices() == 0)
        throw InputError("empty graph");
    if (cfg.k > g.num_vertices())
        throw InputError("k exceeds the number of vertices");
}

} // namespace

double prune_margin(double cutoff) { return 1e-9 * std::max(1.0, std::abs(cutoff)); }

std::vector<double> harmonic_centralities(const Graph &g, WorkerPool *pool) {
    const Vertex n = g.num_vertices();
    std::vector<double> vh(n);
    auto one = [&](std::size_t u, std::size_t) {
        vh[u] = kernels::harmonic_sum(sssp(g, static_cast<Vertex>(u)));
    };
    if (pool) {
        pool->run(n, one);
    } else {
        for (Vertex u = 0; u < n; ++u)
            one(u, 0);
    }
    return vh;
}

namespace {

Vertex argmax_centrality(const std::vector<double> &vh) {
    Vertex best = 0;
    for (Vertex u = 1; u < vh.size(); ++u)
        if (vh[u] > vh[best])
            best = u;
    return best;
}

} // namespace

Vertex top_harmonic_vertex(const Graph &g) {
    if (g.num_vertices() == 0)
        throw InputError("empty graph");
    return argmax_centrality(harmonic_centralities(g));
}

// ---------------------------------------------------------------------------
// Pruned evaluation
// ---------------------------------------------------------------------------

HarmonicContext::HarmonicContext(const Graph &g) : graph_(&g), reach_(reachable_counts(g)) {
    reduces_reach_ = !g.is_directed() && g.has_unit_weights();
    if (reduces_reach_) {
        ComponentMap cm = components(g);
        component_ = std::move(cm.component);
        num_components_ = cm.size.size();
    }
}

HarmonicGroupView make_harmonic_view(const HarmonicContext &ctx, std::span<const Distance> dist,
                                     std::vector<std::uint32_t> &storage) {
    storage.clear();
    if (ctx.reduces_reach()) {
        storage.assign(ctx.num_components(), 0);
        for (Vertex x = 0; x < dist.size(); ++x)
            if (dist[x] == 1)
                ++storage[ctx.component(x)];
    }
    return {dist, storage};
}

HarmonicGainEvaluator::HarmonicGainEvaluator(const HarmonicContext &ctx)
    : ctx_(&ctx), local_(ctx.graph().num_vertices(), kUnreachable) {}

void HarmonicGainEvaluator::reset() {
    for (Vertex x : touched_)
        local_[x] = kUnreachable;
    touched_.clear();
}

PrunedGainResult HarmonicGainEvaluator::evaluate(const HarmonicGroupView &view, Vertex candidate,
                                                 double cutoff, const BoundObserver *observer) {
    if (view.dist[candidate] == 0)
        throw InputError("candidate is already a group member");
    PrunedGainResult r = ctx_->graph().has_unit_weights()
                             ? evaluate_unit(view, candidate, cutoff, observer)
                             : evaluate_weighted(view, candidate, cutoff, observer);
    reset();
    return r;
}

PrunedGainResult HarmonicGainEvaluator::evaluate_unit(const HarmonicGroupView &view, Vertex u,
                                                      double cutoff,
                                                      const BoundObserver *observer) {
    const Graph &g = ctx_->graph();
    const bool directed = g.is_directed();
    const bool bounding = observer != nullptr || cutoff != kNoCutoff;
    const double own = reciprocal(view.dist[u]);

    // r(u), minus the vertices of u's component at distance 1 from S; u
    // itself is added back since it is also counted in |Phi|.
    auto reach = static_cast<std::int64_t>(ctx_->reach(u));
    if (ctx_->reduces_reach() && !view.at_distance_one.empty()) {
        reach -= view.at_distance_one[ctx_->component(u)];
        if (view.dist[u] == 1)
            ++reach;
    }

    double partial = 0.0;
    std::int64_t explored = 1;
    local_[u] = 0;
    touched_.push_back(u);
    frontier_.assign(1, u);
    Distance level = 0;

    for (;;) {
        if (bounding) {
            std::int64_t next_level = 0;
            for (Vertex x : frontier_) {
                if (directed)
                    next_level += g.out_degree(x);
                else
                    next_level += level == 0 ? g.degree(x) : g.degree(x) - 1;
            }
            const std::int64_t rest = std::max<std::int64_t>(0, reach - explored - next_level);
            const double bound = partial + static_cast<double>(next_level) / (level + 1) +
                                 static_cast<double>(rest) / (level + 2) - own;
            if (observer)
                (*observer)(level, bound);
            if (bound < cutoff - prune_margin(cutoff))
                return {false, bound};
        }

        next_.clear();
        const Distance d = level + 1;
        const double term = 1.0 / static_cast<double>(d);
        for (Vertex x : frontier_) {
            for (const Arc &a : g.out_arcs(x)) {
                const Vertex y = a.target;
                if (local_[y] != kUnreachable || d >= view.dist[y])
                    continue;
                local_[y] = d;
                touched_.push_back(y);
                next_.push_back(y);
                partial += term - reciprocal(view.dist[y]);
                ++explored;
            }
        }
        if (next_.empty())
            return {true, partial - own};
        frontier_.swap(next_);
        ++level;
    }
}

PrunedGainResult HarmonicGainEvaluator::evaluate_weighted(const HarmonicGroupView &view,
                                                          Vertex u, double cutoff,
                                                          const BoundObserver *observer) {
    const Graph &g = ctx_->graph();
    const bool bounding = observer != nullptr || cutoff != kNoCutoff;
    const double own = reciprocal(view.dist[u]);
    const auto reach = static_cast<double>(ctx_->reach(u));
    auto cmp = std::greater<>();

    double partial = 0.0;
    std::uint64_t explored = 0;
    heap_.clear();
    local_[u] = 0;
    touched_.push_back(u);
    heap_.emplace_back(0, u);

    while (!heap_.empty()) {
        std::pop_heap(heap_.begin(), heap_.end(), cmp);
        const auto [d, x] = heap_.back();
        heap_.pop_back();
        if (d != local_[x])
            continue;
        ++explored;
        if (x != u)
            partial += 1.0 / static_cast<double>(d) - reciprocal(view.dist[x]);
        for (const Arc &a : g.out_arcs(x)) {
            const Vertex y = a.target;
            const Distance nd = d + a.weight;
            if (nd >= view.dist[y] || nd >= local_[y])
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
        // distance level d is complete once the next label is farther
        if (bounding && d > 0 && heap_.front().first > d) {
            const double bound = partial +
                                 (reach - static_cast<double>(explored)) / static_cast<double>(d) -
                                 own;
            if (observer)
                (*observer)(d, bound);
            if (bound < cutoff - prune_margin(cutoff))
                return {false, bound};
        }
    }
    return {true, partial - own};
}

// ---------------------------------------------------------------------------
// Greedy
// ---------------------------------------------------------------------------

namespace {

struct Candidate {
    Vertex vertex;
    PrunedGainResult result;
};

class EvaluatorSet {
public:
    EvaluatorSet(const HarmonicContext &ctx, std::size_t workers) {
        for (std::size_t w = 0; w < workers; ++w)
            evaluators_.push_back(std::make_unique<HarmonicGainEvaluator>(ctx));
    }
    HarmonicGainEvaluator &operator[](std::size_t w) { return *evaluators_[w]; }

private:
    std::vector<std::unique_ptr<HarmonicGainEvaluator>> evaluators_;
};

} // namespace

RunReport greedy_harmonic(const Graph &g, const AlgoConfig &cfg) {
    check_k(g, cfg);
    Stopwatch clock;
    const Vertex n = g.num_vertices();
    WorkerPool pool(cfg.effective_workers());
    HarmonicContext ctx(g);
    EvaluatorSet evaluators(ctx, pool.size());

    RunReport report;
    report.algorithm = "greedy-h";
    report.objective = ObjectiveKind::harmonic;
    report.config = cfg;

    const std::vector<double> centrality = harmonic_centralities(g, &pool);
    const Vertex top = argmax_centrality(centrality);
    Group group{top};
    std::vector<std::uint8_t> member(n, 0);
    member[top] = 1;
    report.step_gains.push_back(centrality[top]);
    report.iterations = 1;

    // VH(u) bounds the gain of u for every nonempty group.
    std::vector<double> bound = centrality;
    DistanceArray dist = sssp(g, top);
    std::vector<std::uint32_t> view_storage;
    std::vector<BoundEntry> heap;
    std::vector<Vertex> batch;
    std::vector<PrunedGainResult> results;

    while (group.size() < cfg.k) {
        const HarmonicGroupView view = make_harmonic_view(ctx, dist, view_storage);
        heap.clear();
        for (Vertex u = 0; u < n; ++u)
            if (!member[u])
                heap.push_back({u, bound[u]});
        std::make_heap(heap.begin(), heap.end(), BoundEntryLess{});

        double best_gain = kNoCutoff;
        Vertex best = kNoVertex;
        while (!heap.empty()) {
            batch.clear();
            while (!heap.empty() && batch.size() < pool.size()) {
                const BoundEntry &top_entry = heap.front();
                if (cfg.pruning && best != kNoVertex &&
                    top_entry.bound < best_gain - prune_margin(best_gain)) {
                    heap.clear(); // every remaining bound is lower still
                    break;
                }
                batch.push_back(top_entry.vertex);
                std::pop_heap(heap.begin(), heap.end(), BoundEntryLess{});
                heap.pop_back();
            }
            if (batch.empty())
                break;
            const double cutoff = (cfg.pruning && best != kNoVertex) ? best_gain : kNoCutoff;
            results.assign(batch.size(), {});
            pool.run(batch.size(), [&](std::size_t i, std::size_t w) {
                results[i] = evaluators[w].evaluate(view, batch[i], cutoff);
            });
            for (std::size_t i = 0; i < batch.size(); ++i) {
                const Vertex u = batch[i];
                ++report.candidates_evaluated;
                bound[u] = results[i].value;
                if (!results[i].is_exact) {
                    ++report.traversals_pruned;
                    continue;
                }
                if (better_gain(results[i].value, u, best_gain, best)) {
                    best_gain = results[i].value;
                    best = u;
                }
            }
        }

        group.push_back(best);
        member[best] = 1;
        report.step_gains.push_back(best_gain);
        ++report.iterations;
        kernels::min_into(dist, sssp(g, best));
    }

    std::sort(group.begin(), group.end());
    report.group = group;
    report.objective_value = group_harmonic(g, group).value;
    report.wall_time_ms = clock.elapsed_ms();
    return report;
}

// ---------------------------------------------------------------------------
// Local search
// ---------------------------------------------------------------------------

RunReport local_search_harmonic(const Graph &g, const AlgoConfig &cfg) {
    Stopwatch clock;
    RunReport seed = greedy_harmonic(g, cfg);
    RunReport report = local_search_harmonic(g, cfg, seed.group);
    report.init = "greedy";
    report.wall_time_ms = clock.elapsed_ms();
    return report;
}

RunReport local_search_harmonic(const Graph &g, const AlgoConfig &cfg,
                                std::span<const Vertex> initial) {
    check_k(g, cfg);
    Stopwatch clock;
    const Vertex n = g.num_vertices();
    const Group start = normalize_group(g, initial);
    if (start.size() != cfg.k)
        throw InputError("initial group size differs from k");

    RunReport report;
    report.algorithm = "ls-h";
    report.objective = ObjectiveKind::harmonic;
    report.config = cfg;
    report.init = "given";

    WorkerPool pool(cfg.effective_workers());
    HarmonicContext ctx(g);
    EvaluatorSet evaluators(ctx, pool.size());
    const std::vector<double> centrality = harmonic_centralities(g, &pool);

    GroupDistanceState state(g, start);
    double current = kernels::harmonic_sum(state.nearest());
    const double neighbours = static_cast<double>(cfg.k) * static_cast<double>(n - cfg.k);

    DistanceArray without(n);
    std::vector<std::uint32_t> view_storage;
    std::vector<PrunedGainResult> results;

    while (neighbours > 0) {
        ++report.iterations;
        const Group &members = state.group();

        struct Removal {
            Vertex u;
            double remaining;
            double loss;
        };
        std::vector<Removal> removals;
        for (Vertex u : members) {
            state.distances_without(u, without);
            const double remaining = kernels::harmonic_sum(without);
            removals.push_back({u, remaining, current - remaining});
        }
        std::sort(removals.begin(), removals.end(), [](const Removal &a, const Removal &b) {
            return a.loss != b.loss ? a.loss < b.loss : a.u < b.u;
        });

        std::vector<Vertex> additions;
        for (Vertex v = 0; v < n; ++v)
            if (!state.contains(v))
                additions.push_back(v);
        std::stable_sort(additions.begin(), additions.end(), [&](Vertex a, Vertex b) {
            return centrality[a] > centrality[b];
        });

        const bool positive = current > 0.0;
        const double target =
            positive ? current * (1.0 + cfg.eps / neighbours) : current + kAbsoluteImprovement;
        auto accepts = [&](double value) { return positive ? value >= target : value > target; };

        std::optional<SwapRecord> chosen;
        for (const Removal &rm : removals) {
            state.distances_without(rm.u, without);
            const HarmonicGroupView view = make_harmonic_view(ctx, without, view_storage);
            const double needed = target - rm.remaining;
            const double cutoff = cfg.pruning ? needed : kNoCutoff;

            for (std::size_t start_at = 0; start_at < additions.size() && !chosen;
                 start_at += pool.size()) {
                const std::size_t count = std::min(pool.size(), additions.size() - start_at);
                results.assign(count, {});
                pool.run(count, [&](std::size_t i, std::size_t w) {
                    results[i] = evaluators[w].evaluate(view, additions[start_at + i], cutoff);
                });
                for (std::size_t i = 0; i < count; ++i) {
                    ++report.candidates_evaluated;
                    if (!results[i].is_exact) {
                        ++report.traversals_pruned;
                        continue;
                    }
                    if (!chosen && accepts(rm.remaining + results[i].value))
                        chosen = SwapRecord{rm.u, additions[start_at + i]};
                }
            }
            if (chosen)
                break;
        }
        if (!chosen)
            break;

        state = state.with_swap(chosen->removed, chosen->added);
        current = kernels::harmonic_sum(state.nearest());
        report.swaps.push_back(*chosen);
        ++report.swaps_committed;
    }

    report.group = state.group();
    report.objective_value = group_harmonic(g, report.group).value;
    report.wall_time_ms = clock.elapsed_ms();
    return report;
}

} // namespace groupcent
