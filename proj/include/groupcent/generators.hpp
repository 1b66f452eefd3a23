/*
 * generators.hpp
 *
 * Small random graph families for property checks and sweeps.
 */

#pragma once

#include <random>
#include <span>
#include <string>

#include "groupcent/graph.hpp"

namespace groupcent {

using Rng = std::mt19937_64;

/// Edge weights drawn uniformly from {1}, {1, 2} or {1, 2, 3}.
enum class WeightChoice { unit = 1, up_to_two = 2, up_to_three = 3 };

enum class Family {
    erdos_renyi, // G(n, p)
    path,
    star,
    layered_dag, // always directed
    connected,   // spanning tree or Hamiltonian cycle plus G(n, p) extras
};

const char *family_name(Family f);

Graph erdos_renyi(Vertex n, double p, bool directed, WeightChoice w, Rng &rng);
/// Path over a random vertex order; directed edges get a random orientation.
Graph path_graph(Vertex n, bool directed, WeightChoice w, Rng &rng);
/// Star with a random center; directed edges get a random orientation.
Graph star_graph(Vertex n, bool directed, WeightChoice w, Rng &rng);
/// Vertices split into `layers` consecutive layers; arcs only go from a layer
/// to the next one, each present with probability p.
Graph layered_dag(Vertex n, Vertex layers, double p, WeightChoice w, Rng &rng);
/// Connected (undirected) or strongly connected (directed) graph: a random
/// spanning tree or Hamiltonian cycle plus independent extra edges.
Graph random_connected(Vertex n, double p, bool directed, WeightChoice w, Rng &rng);

/// Family dispatcher with p = 0.3 and three layers for DAGs.
Graph generate(Family f, Vertex n, bool directed, WeightChoice w, Rng &rng);

} // namespace groupcent
