#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bipartify/rational.hpp"

namespace bipartify {

using VertexPair = std::pair<int, int>;

struct IndexOutOfRangeError : std::invalid_argument {
    explicit IndexOutOfRangeError(const std::string& what) : std::invalid_argument(what) {}
};
struct SelfLoopError : std::invalid_argument {
    explicit SelfLoopError(const std::string& what) : std::invalid_argument(what) {}
};
struct MissingEdgeError : std::invalid_argument {
    explicit MissingEdgeError(const std::string& what) : std::invalid_argument(what) {}
};

enum class Side : std::uint8_t { X, Y };

inline Side other(Side s) { return s == Side::X ? Side::Y : Side::X; }

/// Two-coloring of a vertex set; side[v] is the part of vertex v.
struct Bipartition {
    std::vector<Side> side;

    Bipartition() = default;
    explicit Bipartition(int n, Side fill = Side::X) : side(static_cast<std::size_t>(n), fill) {}

    int size() const { return static_cast<int>(side.size()); }
    std::vector<int> vertices_in(Side s) const;
};

/// Cut accounting for one (graph, bipartition) pair. crossing + internal
/// equals the host graph's edge count; r_b is crossing/|E|, defined as 1
/// on an edgeless graph.
struct CutReport {
    int crossing = 0;
    int internal = 0;
    Rational r_b{1, 1};
};

/// Simple undirected graph in canonical form: vertices 0..n-1, edge list
/// sorted lexicographically with u < v in each pair, per-vertex sorted
/// adjacency derived from the edge list. Values are immutable after
/// construction; equality is equality of (n, edges).
class Graph {
public:
    Graph() = default;

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<VertexPair>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int u) const { return adj_[static_cast<std::size_t>(u)]; }
    int degree(int u) const { return static_cast<int>(adj_[static_cast<std::size_t>(u)].size()); }
    bool has_edge(int u, int v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

    friend Graph from_edge_list(int n, const std::vector<VertexPair>& raw);

private:
    int n_ = 0;
    std::vector<VertexPair> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Builds the canonical graph from a raw pair list: pairs are normalized to
/// u < v, duplicates merged, order sorted. Rejects self-loops and endpoints
/// outside 0..n-1.
Graph from_edge_list(int n, const std::vector<VertexPair>& raw);

/// True iff a single traversal from vertex 0 reaches every vertex.
bool is_connected(const Graph& g);

/// Proper 2-coloring if one exists, absent otherwise. Deterministic on the
/// canonical form: component roots (smallest vertex per component) get X.
std::optional<Bipartition> two_color(const Graph& g);

CutReport cut_report(const Graph& g, const Bipartition& b);

/// (ext, int) neighbor counts of u: neighbors in the other part and in u's
/// own part. ext + int = degree(u).
std::pair<int, int> ext_int_degrees(const Graph& g, const Bipartition& b, int u);

/// Copy of g without edge e (accepted in either endpoint order).
Graph remove_edge(const Graph& g, VertexPair e);

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Subgraph induced on the given (sorted) vertices; local vertex i is
/// vertices[i].
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

}  // namespace bipartify
