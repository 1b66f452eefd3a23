/*
 * shortest_paths.hpp
 *
 * Single- and multi-source shortest-path kernels. BFS on unit-weight graphs,
 * binary-heap Dijkstra otherwise. All distances are exact integers.
 */

#pragma once

#include <span>
#include <vector>

#include "groupcent/graph.hpp"

namespace groupcent {

/// Distances from `source` along out-arcs; kUnreachable where no path exists.
DistanceArray sssp(const Graph &g, Vertex source);

/// dist(S, v) = min over sources of dist(s, v). Throws InputError when
/// `sources` is empty or holds an out-of-range id.
DistanceArray multi_source_sssp(const Graph &g, std::span<const Vertex> sources);

/// Row-major n x n table, row u = sssp(g, u). Meant for small graphs.
class DistanceMatrix {
public:
    explicit DistanceMatrix(const Graph &g);

    Vertex size() const noexcept { return n_; }
    std::span<const Distance> row(Vertex u) const {
        return {data_.data() + static_cast<std::size_t>(u) * n_, n_};
    }
    Distance at(Vertex from, Vertex to) const {
        return data_[static_cast<std::size_t>(from) * n_ + to];
    }

private:
    Vertex n_;
    std::vector<Distance> data_;
};

/// r(u): number of vertices reachable from u, u included. Exact in both the
/// undirected (component size) and the directed (condensation DAG) case.
std::vector<std::uint64_t> reachable_counts(const Graph &g);

bool is_weakly_connected(const Graph &g);

} // namespace groupcent
