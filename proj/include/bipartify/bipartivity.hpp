#pragma once

#include <string>
#include <vector>

#include "bipartify/graph.hpp"
#include "bipartify/rational.hpp"

namespace bipartify {

enum class EdgeIndex { BetaEdge, PhiA, PhiNL };

const char* edge_index_name(EdgeIndex index);

struct EdgeScore {
    VertexPair edge;
    double value = 0.0;
};

/// Result of a greedy edge-removal run: the removed edges in removal order,
/// the (bipartite) remaining graph, and the fraction of edges retained.
struct RemovalTrace {
    std::vector<VertexPair> removed;
    Graph final;
    Rational r_b{1, 1};
};

/// Whole-graph bipartivity: even closed-walk weight over total closed-walk
/// weight, sum_j cosh(lambda_j) / sum_j exp(lambda_j) over the adjacency
/// spectrum. In (1/2, 1], and exactly 1 on bipartite graphs.
double beta_original(const Graph& g);

/// Refined bipartivity sum_j exp(-lambda_j) / sum_j exp(lambda_j).
/// In (0, 1]; equals 1 iff the adjacency spectrum is symmetric about 0.
/// Depends on eigenvalues only, so cospectral graphs are indistinguishable.
double beta_new(const Graph& g);

/// Contribution of one edge toward bipartiteness:
/// 1 - [beta_new(G - e) - beta_new(G)]. Edges whose removal raises
/// bipartivity the most get the smallest score.
double edge_beta(const Graph& g, VertexPair e);

/// Per-edge adjacency index: for edge (i,j), with p the component's
/// positive principal eigenvector and z its smallest-eigenvalue eigenvector,
/// the score is z_i z_j / (p_i p_j + |z_i z_j|), always in (-1, 1).
/// Scores are computed per connected component. Canonical edge order.
std::vector<EdgeScore> phi_a_scores(const Graph& g);

/// Per-edge normalized-Laplacian index: the product of the endpoint entries
/// of the component's largest-eigenvalue eigenvector, rescaled so the
/// largest entry magnitude is 1; values lie in [-1, 1]. Canonical edge order.
std::vector<EdgeScore> phi_nl_scores(const Graph& g);

// Scoring from already-computed vectors; split out so score invariance
// under global sign flips is directly testable.
std::vector<EdgeScore> phi_a_from_vectors(const Graph& g, const std::vector<double>& principal,
                                          const std::vector<double>& smallest);
std::vector<EdgeScore> phi_nl_from_vector(const Graph& g, const std::vector<double>& largest);

/// Removes one edge at a time until every connected component is bipartite:
/// the global score minimum for BetaEdge, the score maximum restricted to
/// edges of non-bipartite components for PhiA and PhiNL. Ties go to the
/// lexicographically smallest edge. Terminates within |E| removals.
RemovalTrace greedy_remove(const Graph& g, EdgeIndex index);

}  // namespace bipartify
