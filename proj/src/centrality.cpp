/*
 * centrality.cpp
 */

#include "groupcent/centrality.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <tuple>

#include "groupcent/kernels.hpp"
#include "groupcent/shortest_paths.hpp"

namespace groupcent {

const char *objective_name(ObjectiveKind kind) {
    switch (kind) {
    case ObjectiveKind::harmonic:
        return "harmonic";
    case ObjectiveKind::closeness:
        return "closeness";
    case ObjectiveKind::farness:
        return "farness";
    }
    return "unknown";
}

Group normalize_group(const Graph &g, std::span<const Vertex> group) {
    if (group.empty())
        throw InputError("group must not be empty");
    Group out(group.begin(), group.end());
    for (Vertex v : out)
        if (v >= g.num_vertices())
            throw InputError("group vertex out of range");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ObjectiveValue group_harmonic(const Graph &g, std::span<const Vertex> group) {
    const Group s = normalize_group(g, group);
    const DistanceArray dist = multi_source_sssp(g, s);
    return {ObjectiveKind::harmonic, kernels::harmonic_sum(dist), std::nullopt};
}

std::uint64_t group_farness_raw(const Graph &g, std::span<const Vertex> group) {
    const Group s = normalize_group(g, group);
    const DistanceArray dist = multi_source_sssp(g, s);
    const kernels::FarnessSum fs = kernels::farness_sum(dist);
    if (fs.unreached != 0)
        throw DisconnectedError("disconnected farness: " + std::to_string(fs.unreached) +
                                " vertices unreachable from the group");
    return fs.sum;
}

double closeness_from_raw(Vertex n, std::uint64_t raw) {
    if (raw == 0)
        return std::numeric_limits<double>::infinity();
    return static_cast<double>(n) / static_cast<double>(raw);
}

ObjectiveValue group_closeness(const Graph &g, std::span<const Vertex> group) {
    const std::uint64_t raw = group_farness_raw(g, group);
    return {ObjectiveKind::closeness, closeness_from_raw(g.num_vertices(), raw), raw};
}

ObjectiveValue group_farness(const Graph &g, std::span<const Vertex> group) {
    const std::uint64_t raw = group_farness_raw(g, group);
    return {ObjectiveKind::farness, farness_from_raw(g.num_vertices(), raw), raw};
}

// ---------------------------------------------------------------------------

GroupDistanceState::GroupDistanceState(const Graph &g, std::span<const Vertex> group)
    : graph_(&g), group_(normalize_group(g, group)) {
    const Vertex n = g.num_vertices();
    member_.assign(n, 0);
    for (Vertex s : group_)
        member_[s] = 1;
    first_.assign(n, kUnreachable);
    second_.assign(n, kUnreachable);
    rep_.assign(n, kNoVertex);
    std::vector<std::uint8_t> labels(n, 0);

    // (distance, source, vertex); lexicographic order makes the first label
    // at every vertex the nearest source with the smallest id.
    using Label = std::tuple<Distance, Vertex, Vertex>;
    std::priority_queue<Label, std::vector<Label>, std::greater<>> heap;
    for (Vertex s : group_)
        heap.emplace(0, s, s);

    while (!heap.empty()) {
        auto [d, src, x] = heap.top();
        heap.pop();
        if (labels[x] == 2 || (labels[x] == 1 && rep_[x] == src))
            continue;
        if (labels[x] == 0) {
            first_[x] = d;
            rep_[x] = src;
        } else {
            second_[x] = d;
        }
        ++labels[x];
        for (const Arc &a : g.out_arcs(x)) {
            const Vertex y = a.target;
            if (labels[y] == 2 || (labels[y] == 1 && rep_[y] == src))
                continue;
            heap.emplace(d + a.weight, src, y);
        }
    }

    const kernels::FarnessSum fs = kernels::farness_sum(first_);
    raw_sum_ = fs.sum;
    unreached_ = fs.unreached;
}

std::uint64_t GroupDistanceState::raw_farness() const {
    if (unreached_ != 0)
        throw DisconnectedError("disconnected farness: " + std::to_string(unreached_) +
                                " vertices unreachable from the group");
    return raw_sum_;
}

std::optional<std::uint64_t> GroupDistanceState::removal_cost(Vertex u) const {
    if (u >= member_.size() || !member_[u])
        throw InputError("removal_cost: vertex is not a group member");
    if (group_.size() < 2)
        throw InputError("removal_cost: group needs at least two members");
    // rep(u) = u, so u's own term second(u) - 0 is part of the scan
    return kernels::removal_delta(rep_, first_, second_, u);
}

void GroupDistanceState::distances_without(Vertex u, std::span<Distance> out) const {
    kernels::distances_without(rep_, first_, second_, u, out);
}

GroupDistanceState GroupDistanceState::with_swap(Vertex out, Vertex in) const {
    if (out >= member_.size() || !member_[out])
        throw InputError("swap: removed vertex is not a group member");
    if (in >= member_.size() || member_[in])
        throw InputError("swap: added vertex is already a group member");
    Group next;
    next.reserve(group_.size());
    for (Vertex s : group_)
        if (s != out)
            next.push_back(s);
    next.push_back(in);
    return GroupDistanceState(*graph_, next);
}

} // namespace groupcent
