/*
 * components.cpp
 */

#include <algorithm>

#include "groupcent/graph.hpp"

namespace groupcent {

namespace {

ComponentMap undirected_components(const Graph &g) {
    const Vertex n = g.num_vertices();
    ComponentMap cm;
    cm.component.assign(n, kNoVertex);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (cm.component[s] != kNoVertex)
            continue;
        const auto id = static_cast<std::uint32_t>(cm.size.size());
        cm.size.push_back(0);
        cm.component[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            ++cm.size[id];
            for (const Arc &a : g.out_arcs(x)) {
                if (cm.component[a.target] == kNoVertex) {
                    cm.component[a.target] = id;
                    stack.push_back(a.target);
                }
            }
        }
    }
    return cm;
}

// Iterative Tarjan. Components are emitted sinks first.
ComponentMap strong_components(const Graph &g) {
    const Vertex n = g.num_vertices();
    ComponentMap cm;
    cm.component.assign(n, kNoVertex);
    std::vector<std::uint32_t> index(n, kNoVertex), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<Vertex> scc_stack;
    struct Frame {
        Vertex v;
        std::size_t next_arc;
    };
    std::vector<Frame> call;
    std::uint32_t counter = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (index[root] != kNoVertex)
            continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        scc_stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame &f = call.back();
            auto arcs = g.out_arcs(f.v);
            if (f.next_arc < arcs.size()) {
                Vertex w = arcs[f.next_arc++].target;
                if (index[w] == kNoVertex) {
                    index[w] = low[w] = counter++;
                    scc_stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            Vertex v = f.v;
            call.pop_back();
            if (!call.empty())
                low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] == index[v]) {
                const auto id = static_cast<std::uint32_t>(cm.size.size());
                cm.size.push_back(0);
                Vertex w;
                do {
                    w = scc_stack.back();
                    scc_stack.pop_back();
                    on_stack[w] = false;
                    cm.component[w] = id;
                    ++cm.size[id];
                } while (w != v);
            }
        }
    }
    return cm;
}

} // namespace

ComponentMap components(const Graph &g) {
    return g.is_directed() ? strong_components(g) : undirected_components(g);
}

bool is_connected(const Graph &g) {
    if (g.num_vertices() == 0)
        return false;
    return components(g).size.size() == 1;
}

Graph largest_component(const Graph &g) {
    const ComponentMap cm = components(g);
    const Vertex n = g.num_vertices();
    if (cm.size.size() <= 1)
        return g;
    // smallest member per component decides ties
    std::vector<Vertex> min_member(cm.size.size(), kNoVertex);
    for (Vertex u = 0; u < n; ++u)
        min_member[cm.component[u]] = std::min(min_member[cm.component[u]], u);
    std::uint32_t best = 0;
    for (std::uint32_t c = 1; c < cm.size.size(); ++c) {
        if (cm.size[c] > cm.size[best] ||
            (cm.size[c] == cm.size[best] && min_member[c] < min_member[best]))
            best = c;
    }
    std::vector<Vertex> keep;
    keep.reserve(cm.size[best]);
    for (Vertex u = 0; u < n; ++u)
        if (cm.component[u] == best)
            keep.push_back(u);
    return g.induced_subgraph(std::move(keep));
}

} // namespace groupcent
