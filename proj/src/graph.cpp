/*
 * graph.cpp
 */

#include "groupcent/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace groupcent {

namespace {

void build_csr(Vertex n, std::vector<Edge> &arcs, std::vector<std::uint64_t> &offsets,
               std::vector<Arc> &out) {
    std::sort(arcs.begin(), arcs.end(), [](const Edge &a, const Edge &b) {
        if (a.source != b.source)
            return a.source < b.source;
        if (a.target != b.target)
            return a.target < b.target;
        return a.weight < b.weight;
    });
    // parallel arcs: keep the first, which has minimum weight after sorting
    arcs.erase(std::unique(arcs.begin(), arcs.end(),
                           [](const Edge &a, const Edge &b) {
                               return a.source == b.source && a.target == b.target;
                           }),
               arcs.end());
    offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const Edge &e : arcs)
        ++offsets[e.source + 1];
    for (Vertex u = 0; u < n; ++u)
        offsets[u + 1] += offsets[u];
    out.clear();
    out.reserve(arcs.size());
    for (const Edge &e : arcs)
        out.push_back({e.target, e.weight});
}

} // namespace

Graph Graph::from_edges(Vertex n, bool directed, std::span<const Edge> edges,
                        std::vector<std::uint64_t> labels) {
    Graph g;
    g.n_ = n;
    g.directed_ = directed;
    if (labels.empty()) {
        labels.resize(n);
        for (Vertex u = 0; u < n; ++u)
            labels[u] = u;
    }
    if (labels.size() != n)
        throw InputError("label count does not match vertex count");
    g.labels_ = std::move(labels);

    std::vector<Edge> forward;
    forward.reserve(directed ? edges.size() : 2 * edges.size());
    for (const Edge &e : edges) {
        if (e.source >= n || e.target >= n)
            throw InputError("edge endpoint out of range");
        if (e.weight == 0)
            throw InputError("edge weight must be positive");
        if (e.source == e.target)
            continue;
        forward.push_back(e);
        if (!directed)
            forward.push_back({e.target, e.source, e.weight});
    }

    std::vector<Edge> backward;
    if (directed) {
        backward.reserve(forward.size());
        for (const Edge &e : forward)
            backward.push_back({e.target, e.source, e.weight});
    }

    build_csr(n, forward, g.out_offsets_, g.out_arcs_);
    if (directed) {
        build_csr(n, backward, g.in_offsets_, g.in_arcs_);
        // dedup on the reverse side must agree with the forward side
        g.num_edges_ = g.out_arcs_.size();
    } else {
        g.num_edges_ = g.out_arcs_.size() / 2;
    }

    if (!g.out_arcs_.empty()) {
        g.min_weight_ = std::numeric_limits<Weight>::max();
        for (const Arc &a : g.out_arcs_) {
            g.min_weight_ = std::min(g.min_weight_, a.weight);
            g.max_weight_ = std::max(g.max_weight_, a.weight);
        }
    }
    return g;
}

bool Graph::has_isolated_vertex() const {
    for (Vertex u = 0; u < n_; ++u)
        if (degree(u) == 0)
            return true;
    return false;
}

Graph Graph::induced_subgraph(std::vector<Vertex> vertices) const {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::vector<Vertex> remap(n_, kNoVertex);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        remap[vertices[i]] = static_cast<Vertex>(i);

    std::vector<Edge> kept;
    std::vector<std::uint64_t> labels;
    labels.reserve(vertices.size());
    for (Vertex u : vertices) {
        labels.push_back(labels_[u]);
        for (const Arc &a : out_arcs(u)) {
            if (remap[a.target] == kNoVertex)
                continue;
            if (!directed_ && a.target < u)
                continue;
            kept.push_back({remap[u], remap[a.target], a.weight});
        }
    }
    return from_edges(static_cast<Vertex>(vertices.size()), directed_, kept, std::move(labels));
}

Graph Graph::scaled_weights(Weight factor) const {
    std::vector<Edge> es = edges();
    for (Edge &e : es)
        e.weight *= factor;
    return from_edges(n_, directed_, es, labels_);
}

std::uint64_t Graph::content_hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xFFu;
            h *= 1099511628211ULL;
        }
    };
    mix(n_);
    mix(directed_ ? 1 : 0);
    for (std::uint64_t off : out_offsets_)
        mix(off);
    for (const Arc &a : out_arcs_) {
        mix(a.target);
        mix(a.weight);
    }
    return h;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> es;
    es.reserve(num_edges_);
    for (Vertex u = 0; u < n_; ++u)
        for (const Arc &a : out_arcs(u))
            if (directed_ || u < a.target)
                es.push_back({u, a.target, a.weight});
    return es;
}

// ---------------------------------------------------------------------------
// Edge-list parsing
// ---------------------------------------------------------------------------

namespace {

bool parse_uint(std::string_view token, std::uint64_t &out) {
    if (token.empty())
        return false;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc() && ptr == token.data() + token.size();
}

Graph parse_stream(std::istream &in, const LoadOptions &options,
                   std::vector<std::string> *warnings) {
    std::unordered_map<std::uint64_t, Vertex> ids;
    std::vector<std::uint64_t> labels;
    std::vector<Edge> edges;

    auto intern = [&](std::uint64_t label) {
        auto [it, inserted] = ids.try_emplace(label, static_cast<Vertex>(labels.size()));
        if (inserted)
            labels.push_back(label);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos)
            continue;
        if (line[first] == '%' || line[first] == '#')
            continue;

        std::vector<std::string_view> tokens;
        std::string_view rest(line);
        std::size_t pos = 0;
        while (pos < rest.size()) {
            std::size_t start = rest.find_first_not_of(" \t\r,", pos);
            if (start == std::string_view::npos)
                break;
            std::size_t end = rest.find_first_of(" \t\r,", start);
            if (end == std::string_view::npos)
                end = rest.size();
            tokens.push_back(rest.substr(start, end - start));
            pos = end;
        }

        const std::string where = "line " + std::to_string(line_no);
        if (options.weighted ? tokens.size() != 3 : tokens.size() < 2)
            throw InputError(where + ": expected " + (options.weighted ? "3" : "2") +
                             " integer tokens");
        std::uint64_t u = 0, v = 0, w = 1;
        if (!parse_uint(tokens[0], u) || !parse_uint(tokens[1], v))
            throw InputError(where + ": vertex ids must be nonnegative integers");
        if (options.weighted) {
            if (!parse_uint(tokens[2], w))
                throw InputError(where + ": weight must be a positive integer");
            if (w == 0)
                throw InputError(where + ": nonpositive weight");
            if (w > (1ULL << 31))
                throw InputError(where + ": weight too large");
        }
        Vertex a = intern(u);
        Vertex b = intern(v);
        edges.push_back({a, b, static_cast<Weight>(w)});
    }

    if (labels.empty())
        throw InputError("empty graph");

    const auto n = static_cast<Vertex>(labels.size());
    Graph g = Graph::from_edges(n, options.directed, edges, std::move(labels));
    if (!g.has_isolated_vertex())
        return g;

    std::vector<Vertex> keep;
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        if (g.degree(u) > 0) {
            keep.push_back(u);
            continue;
        }
        std::string msg = "isolated vertex " + std::to_string(g.label(u)) + " (self-loop only)";
        if (options.isolated == IsolatedVertexPolicy::fail)
            throw InputError(msg);
        if (warnings)
            warnings->push_back("dropping " + msg);
    }
    if (keep.empty())
        throw InputError("empty graph");
    return g.induced_subgraph(std::move(keep));
}

} // namespace

Graph load_edge_list(const std::filesystem::path &path, const LoadOptions &options,
                     std::vector<std::string> *warnings) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path.string());
    return parse_stream(in, options, warnings);
}

Graph parse_edge_list(const std::string &text, const LoadOptions &options,
                      std::vector<std::string> *warnings) {
    std::istringstream in(text);
    return parse_stream(in, options, warnings);
}

} // namespace groupcent
