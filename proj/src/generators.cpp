/*
 * generators.cpp
 */

#include "groupcent/generators.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace groupcent {

const char *family_name(Family f) {
    switch (f) {
    case Family::erdos_renyi:
        return "erdos-renyi";
    case Family::path:
        return "path";
    case Family::star:
        return "star";
    case Family::layered_dag:
        return "layered-dag";
    case Family::connected:
        return "connected";
    }
    return "?";
}

namespace {

Weight draw_weight(WeightChoice w, Rng &rng) {
    if (w == WeightChoice::unit)
        return 1;
    std::uniform_int_distribution<Weight> pick(1, static_cast<Weight>(w));
    return pick(rng);
}

bool coin(double p, Rng &rng) { return std::bernoulli_distribution(p)(rng); }

std::vector<Vertex> shuffled(Vertex n, Rng &rng) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::shuffle(order.begin(), order.end(), rng);
    return order;
}

void add_edge(std::vector<Edge> &edges, Vertex a, Vertex b, bool directed, WeightChoice w,
              Rng &rng) {
    if (directed && coin(0.5, rng))
        std::swap(a, b);
    edges.push_back({a, b, draw_weight(w, rng)});
}

} // namespace

Graph erdos_renyi(Vertex n, double p, bool directed, WeightChoice w, Rng &rng) {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = directed ? 0 : a + 1; b < n; ++b)
            if (a != b && coin(p, rng))
                edges.push_back({a, b, draw_weight(w, rng)});
    return Graph::from_edges(n, directed, edges);
}

Graph path_graph(Vertex n, bool directed, WeightChoice w, Rng &rng) {
    const auto order = shuffled(n, rng);
    std::vector<Edge> edges;
    for (Vertex i = 1; i < n; ++i)
        add_edge(edges, order[i - 1], order[i], directed, w, rng);
    return Graph::from_edges(n, directed, edges);
}

Graph star_graph(Vertex n, bool directed, WeightChoice w, Rng &rng) {
    const Vertex center = std::uniform_int_distribution<Vertex>(0, n - 1)(rng);
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v)
        if (v != center)
            add_edge(edges, center, v, directed, w, rng);
    return Graph::from_edges(n, directed, edges);
}

Graph layered_dag(Vertex n, Vertex layers, double p, WeightChoice w, Rng &rng) {
    layers = std::max<Vertex>(1, std::min(layers, n));
    std::vector<Vertex> layer_of(n);
    for (Vertex v = 0; v < n; ++v)
        layer_of[v] = static_cast<Vertex>(std::uint64_t{v} * layers / n);
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
            if (layer_of[b] == layer_of[a] + 1 && coin(p, rng))
                edges.push_back({a, b, draw_weight(w, rng)});
    return Graph::from_edges(n, true, edges);
}

Graph random_connected(Vertex n, double p, bool directed, WeightChoice w, Rng &rng) {
    const auto order = shuffled(n, rng);
    std::vector<Edge> edges;
    if (directed) {
        for (Vertex i = 0; n > 1 && i < n; ++i)
            edges.push_back({order[i], order[(i + 1) % n], draw_weight(w, rng)});
    } else {
        for (Vertex i = 1; i < n; ++i) {
            const Vertex parent = order[std::uniform_int_distribution<Vertex>(0, i - 1)(rng)];
            edges.push_back({parent, order[i], draw_weight(w, rng)});
        }
    }
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = directed ? 0 : a + 1; b < n; ++b)
            if (a != b && coin(p, rng))
                edges.push_back({a, b, draw_weight(w, rng)});
    return Graph::from_edges(n, directed, edges);
}

Graph generate(Family f, Vertex n, bool directed, WeightChoice w, Rng &rng) {
    switch (f) {
    case Family::erdos_renyi:
        return erdos_renyi(n, 0.3, directed, w, rng);
    case Family::path:
        return path_graph(n, directed, w, rng);
    case Family::star:
        return star_graph(n, directed, w, rng);
    case Family::layered_dag:
        return layered_dag(n, 3, 0.3, w, rng);
    case Family::connected:
        return random_connected(n, 0.3, directed, w, rng);
    }
    throw InputError("unknown graph family");
}

} // namespace groupcent
