/*
 * checks.hpp
 *
 * Property suites run by the check command and the acceptance binary. Each
 * suite samples cases, compares against a from-scratch recomputation and
 * reports violations with a dump of the first counterexample.
 */

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "groupcent/generators.hpp"

namespace groupcent {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::uint64_t cases = 0;
    std::uint64_t violations = 0;
    /// Short human-readable summary (means, observation counts).
    std::string detail;
    /// First failing case; empty when passed.
    std::string counterexample;
};

/// Edges, directedness and weights of g in a compact single-line form.
std::string describe_graph(const Graph &g);

/// `count` graphs covering directed x weighted regimes, 6..max_n vertices.
std::vector<Graph> sample_graphs(std::size_t count, Vertex max_n, std::uint64_t seed);

/// Diminishing returns of GH: for sampled S subset of T and v outside T,
/// GH(S+v) - GH(S) >= GH(T+v) - GH(T) - tol.
CheckResult check_submodularity(std::span<const Graph> graphs, std::size_t triples,
                                std::uint64_t seed, double tol = 1e-9);

/// Every bound produced while evaluating a harmonic gain is at least the
/// exact gain. Uses the graphs whose weights match `weighted`.
CheckResult check_harmonic_bounds(std::span<const Graph> graphs, bool weighted, std::size_t cases,
                                  std::uint64_t seed);

/// Every bound produced while evaluating a farness decrease against
/// dist(S - u) is at least the exact decrease; the exact decrease and the
/// level profile match recomputation. Needs (strongly) connected graphs;
/// others are skipped.
CheckResult check_farness_bounds(std::span<const Graph> graphs, std::size_t cases,
                                 std::uint64_t seed);

/// Ratios of greedy / local search to the exhaustive optimum for k in
/// {1, 2, 3}: greedy-h above its floor, ls-h at least greedy-h, ls-c
/// within five times the optimal farness.
CheckResult check_oracle_ratios(std::span<const Graph> graphs, std::uint64_t seed);

/// One (graph, k) instance of the oracle sweep. Closeness fields are set
/// only for (strongly) connected graphs with k < n.
struct OracleRecord {
    std::size_t graph_index = 0;
    bool directed = false;
    bool weighted = false;
    Vertex n = 0;
    Vertex k = 0;
    double floor = 0.0;
    double opt_harmonic = 0.0;
    double greedy_harmonic = 0.0;
    double ls_harmonic = 0.0;
    bool has_closeness = false;
    std::uint64_t opt_raw = 0;
    std::uint64_t ls_raw = 0;
    double harmonic_ms = 0.0;
    double closeness_ms = 0.0;
};

/// Runs exact-h, greedy-h and ls-h (and exact-c, ls-c with eps = 0.001 when
/// defined) on every graph for every k < n in `ks`, in deterministic mode.
std::vector<OracleRecord> oracle_sweep(std::span<const Graph> graphs, std::span<const Vertex> ks);

/// Path v1 - v3 - v4 with weights 1, L, L (L = 2): farness and marginal
/// comparisons in exact integers.
CheckResult check_weighted_path_example();

/// Single edge: GH({u}) = 1 and GH({u, v}) = 0.
CheckResult check_single_edge();

/// Floor of the greedy harmonic ratio for g.
double harmonic_floor(const Graph &g);

} // namespace groupcent
