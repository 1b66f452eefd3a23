/*
 * shortest_paths.cpp
 */

#include "groupcent/shortest_paths.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <queue>

namespace groupcent {

namespace {

void check_sources(const Graph &g, std::span<const Vertex> sources) {
    if (sources.empty())
        throw InputError("empty source set");
    for (Vertex s : sources)
        if (s >= g.num_vertices())
            throw InputError("source vertex out of range");
}

DistanceArray bfs(const Graph &g, std::span<const Vertex> sources) {
    DistanceArray dist(g.num_vertices(), kUnreachable);
    std::vector<Vertex> queue;
    queue.reserve(g.num_vertices());
    for (Vertex s : sources) {
        if (dist[s] != 0) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex x = queue[head];
        for (const Arc &a : g.out_arcs(x)) {
            if (dist[a.target] == kUnreachable) {
                dist[a.target] = dist[x] + 1;
                queue.push_back(a.target);
            }
        }
    }
    return dist;
}

DistanceArray dijkstra(const Graph &g, std::span<const Vertex> sources) {
    using Entry = std::pair<Distance, Vertex>;
    DistanceArray dist(g.num_vertices(), kUnreachable);
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (Vertex s : sources) {
        dist[s] = 0;
        heap.push({0, s});
    }
    while (!heap.empty()) {
        auto [d, x] = heap.top();
        heap.pop();
        if (d != dist[x])
            continue;
        for (const Arc &a : g.out_arcs(x)) {
            Distance nd = d + a.weight;
            if (nd < dist[a.target]) {
                dist[a.target] = nd;
                heap.push({nd, a.target});
            }
        }
    }
    return dist;
}

} // namespace

DistanceArray sssp(const Graph &g, Vertex source) {
    return multi_source_sssp(g, std::span<const Vertex>(&source, 1));
}

DistanceArray multi_source_sssp(const Graph &g, std::span<const Vertex> sources) {
    check_sources(g, sources);
    return g.has_unit_weights() ? bfs(g, sources) : dijkstra(g, sources);
}

DistanceMatrix::DistanceMatrix(const Graph &g) : n_(g.num_vertices()) {
    data_.resize(static_cast<std::size_t>(n_) * n_);
    for (Vertex u = 0; u < n_; ++u) {
        DistanceArray d = sssp(g, u);
        std::copy(d.begin(), d.end(), data_.begin() + static_cast<std::size_t>(u) * n_);
    }
}

std::vector<std::uint64_t> reachable_counts(const Graph &g) {
    const Vertex n = g.num_vertices();
    const ComponentMap cm = components(g);
    std::vector<std::uint64_t> r(n);
    if (!g.is_directed()) {
        for (Vertex u = 0; u < n; ++u)
            r[u] = cm.size[cm.component[u]];
        return r;
    }

    // Condensation arcs. Tarjan ids are sinks first, so every arc c -> d of
    // the DAG has d < c and ascending id order is a valid processing order.
    const std::size_t C = cm.size.size();
    std::vector<std::vector<std::uint32_t>> succ(C);
    for (Vertex u = 0; u < n; ++u)
        for (const Arc &a : g.out_arcs(u))
            if (cm.component[u] != cm.component[a.target])
                succ[cm.component[u]].push_back(cm.component[a.target]);
    for (auto &s : succ) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }

    // Reachability bitsets over blocks of target components keep memory at
    // C * kBlockWords words regardless of C.
    constexpr std::size_t kBlockWords = 64;
    constexpr std::size_t kBlockBits = 64 * kBlockWords;
    std::vector<std::uint64_t> reach_size(C, 0);
    std::vector<std::uint64_t> bits(C * kBlockWords);
    for (std::size_t lo = 0; lo < C; lo += kBlockBits) {
        const std::size_t hi = std::min(C, lo + kBlockBits);
        std::fill(bits.begin(), bits.end(), 0);
        for (std::size_t c = lo; c < C; ++c) {
            std::uint64_t *mine = bits.data() + c * kBlockWords;
            if (c >= lo && c < hi)
                mine[(c - lo) / 64] |= 1ULL << ((c - lo) % 64);
            for (std::uint32_t d : succ[c]) {
                if (d < lo)
                    continue; // d < lo reaches only ids <= d, all outside the block
                const std::uint64_t *theirs = bits.data() + std::size_t{d} * kBlockWords;
                for (std::size_t w = 0; w < kBlockWords; ++w)
                    mine[w] |= theirs[w];
            }
            for (std::size_t w = 0; w < kBlockWords; ++w) {
                std::uint64_t word = mine[w];
                while (word) {
                    const int b = std::countr_zero(word);
                    word &= word - 1;
                    reach_size[c] += cm.size[lo + w * 64 + static_cast<std::size_t>(b)];
                }
            }
        }
    }
    for (Vertex u = 0; u < n; ++u)
        r[u] = reach_size[cm.component[u]];
    return r;
}

bool is_weakly_connected(const Graph &g) {
    const Vertex n = g.num_vertices();
    if (n == 0)
        return false;
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    Vertex count = 0;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        ++count;
        auto visit = [&](std::span<const Arc> arcs) {
            for (const Arc &a : arcs) {
                if (!seen[a.target]) {
                    seen[a.target] = true;
                    stack.push_back(a.target);
                }
            }
        };
        visit(g.out_arcs(x));
        visit(g.in_arcs(x));
    }
    return count == n;
}

} // namespace groupcent
