/*
 * centrality.hpp
 *
 * Group objectives (harmonic, closeness, farness) and the per-vertex
 * nearest / second-nearest distance state used by the local searches.
 *
 * Farness is kept as the raw integer sum of distances from the group to all
 * non-members; GF = raw / n and GC = n / raw are derived views.
 */

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "groupcent/graph.hpp"

namespace groupcent {

enum class ObjectiveKind { harmonic, closeness, farness };

const char *objective_name(ObjectiveKind kind);

struct ObjectiveValue {
    ObjectiveKind kind = ObjectiveKind::harmonic;
    double value = 0.0;
    /// Raw distance sum; set for closeness and farness.
    std::optional<std::uint64_t> raw_sum;
};

/// Sorted, duplicate-free copy of `group`. Throws InputError on an empty
/// group or an out-of-range vertex.
Group normalize_group(const Graph &g, std::span<const Vertex> group);

/// GH(S): sum over v outside S of 1/dist(S, v); unreachable vertices add 0.
ObjectiveValue group_harmonic(const Graph &g, std::span<const Vertex> group);

/// Sum over v outside S of dist(S, v). Throws DisconnectedError when some
/// vertex is unreachable from S.
std::uint64_t group_farness_raw(const Graph &g, std::span<const Vertex> group);

ObjectiveValue group_closeness(const Graph &g, std::span<const Vertex> group);
ObjectiveValue group_farness(const Graph &g, std::span<const Vertex> group);

/// n / raw; +inf when raw == 0 (S = V).
double closeness_from_raw(Vertex n, std::uint64_t raw);
inline double farness_from_raw(Vertex n, std::uint64_t raw) {
    return static_cast<double>(raw) / static_cast<double>(n);
}

/**
 * For a group S and every vertex x: dist(S, x), the nearest member rep(x)
 * (ties to the smaller id) and dist(S \ {rep(x)}, x).
 *
 * Built by one multi-source label-setting pass in which every vertex keeps
 * its two best labels with distinct sources, ordered by (distance, source).
 */
class GroupDistanceState {
public:
    GroupDistanceState(const Graph &g, std::span<const Vertex> group);

    const Graph &graph() const noexcept { return *graph_; }
    const Group &group() const noexcept { return group_; }
    bool contains(Vertex v) const { return member_[v] != 0; }

    std::span<const Distance> nearest() const noexcept { return first_; }
    std::span<const Vertex> representative() const noexcept { return rep_; }
    std::span<const Distance> second_nearest() const noexcept { return second_; }

    /// Number of vertices not reachable from the group.
    std::uint64_t unreached() const noexcept { return unreached_; }
    bool covers_all() const noexcept { return unreached_ == 0; }
    /// Throws DisconnectedError unless covers_all().
    std::uint64_t raw_farness() const;

    /**
     * Exact raw farness increase caused by removing member u, i.e.
     * raw(S \ {u}) - raw(S). nullopt when the removal leaves some vertex
     * unreachable. Requires u in S and |S| >= 2.
     */
    std::optional<std::uint64_t> removal_cost(Vertex u) const;

    /// dist(S \ {u}, x) for every x.
    void distances_without(Vertex u, std::span<Distance> out) const;

    /// State for (S \ {out}) + {in}, rebuilt from scratch.
    GroupDistanceState with_swap(Vertex out, Vertex in) const;

private:
    const Graph *graph_;
    Group group_;
    std::vector<std::uint8_t> member_;
    DistanceArray first_;
    std::vector<Vertex> rep_;
    DistanceArray second_;
    std::uint64_t raw_sum_ = 0;
    std::uint64_t unreached_ = 0;
};

} // namespace groupcent
