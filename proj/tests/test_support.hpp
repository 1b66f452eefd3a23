// Brute-force references shared by the unit tests.

#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "groupcent/checks.hpp"
#include "groupcent/generators.hpp"

namespace groupcent::testing {

using Matrix = std::vector<std::vector<Distance>>;

// Floyd-Warshall over the arc list.
inline Matrix all_pairs(const Graph &g) {
    const Vertex n = g.num_vertices();
    Matrix d(n, std::vector<Distance>(n, kUnreachable));
    for (Vertex u = 0; u < n; ++u) {
        d[u][u] = 0;
        for (const Arc &a : g.out_arcs(u))
            d[u][a.target] = std::min<Distance>(d[u][a.target], a.weight);
    }
    for (Vertex m = 0; m < n; ++m)
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = 0; b < n; ++b)
                if (d[a][m] != kUnreachable && d[m][b] != kUnreachable)
                    d[a][b] = std::min(d[a][b], d[a][m] + d[m][b]);
    return d;
}

inline Distance group_dist(const Matrix &d, const std::vector<Vertex> &s, Vertex x) {
    Distance best = kUnreachable;
    for (Vertex u : s)
        best = std::min(best, d[u][x]);
    return best;
}

inline double brute_harmonic(const Matrix &d, const std::vector<Vertex> &s) {
    double sum = 0.0;
    for (Vertex x = 0; x < d.size(); ++x) {
        const Distance dx = group_dist(d, s, x);
        if (dx != 0 && dx != kUnreachable)
            sum += 1.0 / static_cast<double>(dx);
    }
    return sum;
}

// kUnreachable when some vertex is not reached.
inline Distance brute_raw(const Matrix &d, const std::vector<Vertex> &s) {
    Distance sum = 0;
    for (Vertex x = 0; x < d.size(); ++x) {
        const Distance dx = group_dist(d, s, x);
        if (dx == kUnreachable)
            return kUnreachable;
        sum += dx;
    }
    return sum;
}

inline std::vector<Vertex> with(std::vector<Vertex> s, Vertex v) {
    s.insert(std::upper_bound(s.begin(), s.end(), v), v);
    return s;
}

inline std::vector<Vertex> without(const std::vector<Vertex> &s, Vertex v) {
    std::vector<Vertex> out;
    for (Vertex x : s)
        if (x != v)
            out.push_back(x);
    return out;
}

inline std::vector<Vertex> random_group(Vertex n, Vertex k, Rng &rng) {
    std::vector<Vertex> perm(n);
    for (Vertex i = 0; i < n; ++i)
        perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Vertex> s(perm.begin(), perm.begin() + k);
    std::sort(s.begin(), s.end());
    return s;
}

inline bool near(double a, double b, double rel = 1e-12) {
    return std::abs(a - b) <= rel * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

inline Graph graph_of(Vertex n, bool directed, std::initializer_list<Edge> edges) {
    return Graph::from_edges(n, directed, std::vector<Edge>(edges));
}

// One graph from each directed x weighted regime, cycling through families.
inline Graph mixed_graph(std::size_t i, Vertex n, Rng &rng) {
    constexpr Family families[] = {Family::erdos_renyi, Family::connected, Family::path,
                                   Family::star, Family::layered_dag};
    const bool directed = i % 2;
    const WeightChoice w = (i / 2) % 2 ? WeightChoice::up_to_three : WeightChoice::unit;
    Family f = families[(i / 4) % 5];
    if (f == Family::layered_dag && !directed)
        f = Family::connected;
    return generate(f, n, directed, w, rng);
}

inline std::string describe(const Graph &g) { return describe_graph(g); }

} // namespace groupcent::testing
