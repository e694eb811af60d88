#include "bipartify/graph.hpp"

#include <algorithm>
#include <queue>

namespace bipartify {

std::vector<int> Bipartition::vertices_in(Side s) const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
        if (side[static_cast<std::size_t>(v)] == s) out.push_back(v);
    return out;
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph from_edge_list(int n, const std::vector<VertexPair>& raw) {
    if (n < 0) throw IndexOutOfRangeError("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.edges_.reserve(raw.size());
    for (auto [u, v] : raw) {
        if (u == v) throw SelfLoopError("self-loop at vertex " + std::to_string(u));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw IndexOutOfRangeError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                       ") outside 0.." + std::to_string(n - 1));
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    g.adj_.assign(static_cast<std::size_t>(n), {});
    for (auto [u, v] : g.edges_) {
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == n;
}

std::optional<Bipartition> two_color(const Graph& g) {
    const int n = g.vertex_count();
    Bipartition part(n);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<int> q;
    for (int root = 0; root < n; ++root) {
        if (seen[static_cast<std::size_t>(root)]) continue;
        seen[static_cast<std::size_t>(root)] = 1;
        part.side[static_cast<std::size_t>(root)] = Side::X;
        q.push(root);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    part.side[static_cast<std::size_t>(w)] =
                        other(part.side[static_cast<std::size_t>(u)]);
                    q.push(w);
                } else if (part.side[static_cast<std::size_t>(w)] ==
                           part.side[static_cast<std::size_t>(u)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return part;
}

CutReport cut_report(const Graph& g, const Bipartition& b) {
    if (b.size() != g.vertex_count())
        throw std::invalid_argument("cut_report: bipartition does not label this graph");
    CutReport r;
    for (auto [u, v] : g.edges()) {
        if (b.side[static_cast<std::size_t>(u)] != b.side[static_cast<std::size_t>(v)])
            ++r.crossing;
        else
            ++r.internal;
    }
    const int m = g.edge_count();
    r.r_b = m == 0 ? Rational(1, 1) : Rational(r.crossing, m);
    return r;
}

std::pair<int, int> ext_int_degrees(const Graph& g, const Bipartition& b, int u) {
    if (u < 0 || u >= g.vertex_count())
        throw IndexOutOfRangeError("ext_int_degrees: vertex " + std::to_string(u));
    const Side mine = b.side[static_cast<std::size_t>(u)];
    int ext = 0;
    int internal = 0;
    for (int w : g.neighbors(u)) {
        if (b.side[static_cast<std::size_t>(w)] == mine)
            ++internal;
        else
            ++ext;
    }
    return {ext, internal};
}

Graph remove_edge(const Graph& g, VertexPair e) {
    VertexPair key{std::min(e.first, e.second), std::max(e.first, e.second)};
    std::vector<VertexPair> edges = g.edges();
    auto it = std::lower_bound(edges.begin(), edges.end(), key);
    if (it == edges.end() || *it != key)
        throw MissingEdgeError("edge (" + std::to_string(e.first) + "," +
                               std::to_string(e.second) + ") not in graph");
    edges.erase(it);
    return from_edge_list(g.vertex_count(), edges);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<int> q;
    for (int root = 0; root < n; ++root) {
        if (seen[static_cast<std::size_t>(root)]) continue;
        std::vector<int> comp;
        seen[static_cast<std::size_t>(root)] = 1;
        q.push(root);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int w : g.neighbors(u)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    q.push(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        local[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
    std::vector<VertexPair> edges;
    for (auto [u, v] : g.edges()) {
        const int lu = local[static_cast<std::size_t>(u)];
        const int lv = local[static_cast<std::size_t>(v)];
        if (lu >= 0 && lv >= 0) edges.emplace_back(lu, lv);
    }
    return from_edge_list(static_cast<int>(vertices.size()), edges);
}

}  // namespace bipartify
