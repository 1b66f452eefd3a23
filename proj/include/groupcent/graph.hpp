/*
 * graph.hpp
 *
 * Immutable weighted graph in compressed adjacency form, edge-list loading
 * and component extraction.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "groupcent/types.hpp"

namespace groupcent {

struct Arc {
    Vertex target;
    Weight weight;
};

struct Edge {
    Vertex source;
    Vertex target;
    Weight weight = 1;
};

/**
 * Directed or undirected graph with positive integer weights.
 *
 * Undirected edges are stored in both adjacency lists. Directed graphs also
 * keep a reverse view (in-arcs). Every vertex carries a label, the id it had
 * in the input file (or in the parent graph for induced subgraphs).
 */
class Graph {
public:
    Graph() = default;

    /// Builds a graph on vertices 0..n-1. Self-loops are dropped and parallel
    /// edges collapse to the minimum weight. Throws InputError on weight 0 or
    /// an endpoint >= n.
    static Graph from_edges(Vertex n, bool directed, std::span<const Edge> edges,
                            std::vector<std::uint64_t> labels = {});

    Vertex num_vertices() const noexcept { return n_; }
    /// Number of edges; each undirected edge counts once.
    std::uint64_t num_edges() const noexcept { return num_edges_; }
    bool is_directed() const noexcept { return directed_; }
    /// True iff every edge has weight 1, i.e. BFS computes distances.
    bool has_unit_weights() const noexcept { return min_weight_ == 1 && max_weight_ == 1; }

    std::span<const Arc> out_arcs(Vertex u) const {
        return {out_arcs_.data() + out_offsets_[u], out_arcs_.data() + out_offsets_[u + 1]};
    }
    std::span<const Arc> in_arcs(Vertex u) const {
        if (!directed_)
            return out_arcs(u);
        return {in_arcs_.data() + in_offsets_[u], in_arcs_.data() + in_offsets_[u + 1]};
    }

    std::uint32_t out_degree(Vertex u) const {
        return static_cast<std::uint32_t>(out_offsets_[u + 1] - out_offsets_[u]);
    }
    std::uint32_t in_degree(Vertex u) const {
        if (!directed_)
            return out_degree(u);
        return static_cast<std::uint32_t>(in_offsets_[u + 1] - in_offsets_[u]);
    }
    /// Undirected: number of neighbours. Directed: in + out.
    std::uint32_t degree(Vertex u) const {
        return directed_ ? out_degree(u) + in_degree(u) : out_degree(u);
    }

    Weight min_weight() const noexcept { return min_weight_; }
    Weight max_weight() const noexcept { return max_weight_; }
    /// Ratio of smallest to largest edge weight; 1 for edgeless graphs.
    double lambda() const noexcept {
        return max_weight_ == 0 ? 1.0 : static_cast<double>(min_weight_) / max_weight_;
    }

    std::uint64_t label(Vertex u) const { return labels_[u]; }
    const std::vector<std::uint64_t> &labels() const noexcept { return labels_; }

    bool has_isolated_vertex() const;

    /// Induced subgraph on `vertices` (any order); new ids follow ascending
    /// old id so the relative order is preserved. Labels are inherited.
    Graph induced_subgraph(std::vector<Vertex> vertices) const;

    /// Copy with every weight multiplied by `factor` (>= 1).
    Graph scaled_weights(Weight factor) const;

    /// FNV-1a over the adjacency arrays; stable across runs.
    std::uint64_t content_hash() const;

    /// Every edge once (u < v for undirected graphs), in adjacency order.
    std::vector<Edge> edges() const;

private:
    Vertex n_ = 0;
    bool directed_ = false;
    std::uint64_t num_edges_ = 0;
    Weight min_weight_ = 0;
    Weight max_weight_ = 0;
    std::vector<std::uint64_t> out_offsets_{0};
    std::vector<Arc> out_arcs_;
    std::vector<std::uint64_t> in_offsets_{0};
    std::vector<Arc> in_arcs_;
    std::vector<std::uint64_t> labels_;
};

enum class IsolatedVertexPolicy { drop, fail };

struct LoadOptions {
    bool directed = false;
    bool weighted = false;
    IsolatedVertexPolicy isolated = IsolatedVertexPolicy::drop;
};

/**
 * Reads a whitespace-separated edge list `u v [w]`.
 *
 * Lines starting with '%' or '#' and blank lines are skipped. File ids are
 * remapped to 0..n-1 in order of first appearance and kept as labels.
 * Unweighted files may carry extra trailing columns (KONECT timestamps),
 * which are ignored. Warnings (dropped isolated vertices) are appended to
 * `warnings` when given.
 */
Graph load_edge_list(const std::filesystem::path &path, const LoadOptions &options,
                     std::vector<std::string> *warnings = nullptr);

/// Same as load_edge_list but reads from an in-memory string.
Graph parse_edge_list(const std::string &text, const LoadOptions &options,
                      std::vector<std::string> *warnings = nullptr);

/// Component id per vertex: connected components for undirected graphs,
/// strongly connected components for directed ones. Ids are dense and, for
/// directed graphs, in reverse topological order of the condensation.
struct ComponentMap {
    std::vector<std::uint32_t> component;
    std::vector<std::uint32_t> size;
};
ComponentMap components(const Graph &g);

bool is_connected(const Graph &g);

/// Largest (strongly) connected component; ties go to the component holding
/// the smallest vertex id.
Graph largest_component(const Graph &g);

} // namespace groupcent
