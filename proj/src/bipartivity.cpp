#include "bipartify/bipartivity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bipartify/spectral.hpp"

namespace bipartify {

const char* edge_index_name(EdgeIndex index) {
    switch (index) {
        case EdgeIndex::BetaEdge: return "beta-edge";
        case EdgeIndex::PhiA: return "phi-a";
        case EdgeIndex::PhiNL: return "phi-nl";
    }
    return "?";
}

double beta_original(const Graph& g) {
    const std::vector<double> lam = sym_eigenvalues(build_matrix(g, MatrixKind::Adjacency));
    double even = 0.0, total = 0.0;
    for (double x : lam) {
        even += std::cosh(x);
        total += std::exp(x);
    }
    return even / total;
}

double beta_new(const Graph& g) {
    const std::vector<double> lam = sym_eigenvalues(build_matrix(g, MatrixKind::Adjacency));
    double reflected = 0.0, total = 0.0;
    for (double x : lam) {
        reflected += std::exp(-x);
        total += std::exp(x);
    }
    return reflected / total;
}

double edge_beta(const Graph& g, VertexPair e) {
    return 1.0 - (beta_new(remove_edge(g, e)) - beta_new(g));
}

std::vector<EdgeScore> phi_a_from_vectors(const Graph& g, const std::vector<double>& principal,
                                          const std::vector<double>& smallest) {
    std::vector<EdgeScore> out;
    out.reserve(g.edges().size());
    for (auto [u, v] : g.edges()) {
        const double num = smallest[static_cast<std::size_t>(u)] * smallest[static_cast<std::size_t>(v)];
        const double den =
            principal[static_cast<std::size_t>(u)] * principal[static_cast<std::size_t>(v)] +
            std::abs(num);
        out.push_back({{u, v}, num / den});
    }
    return out;
}

std::vector<EdgeScore> phi_nl_from_vector(const Graph& g, const std::vector<double>& largest) {
    double max_abs = 0.0;
    for (double x : largest) max_abs = std::max(max_abs, std::abs(x));
    const double rescale = max_abs > 0.0 ? 1.0 / max_abs : 1.0;
    std::vector<EdgeScore> out;
    out.reserve(g.edges().size());
    for (auto [u, v] : g.edges()) {
        const double value = largest[static_cast<std::size_t>(u)] * rescale *
                             largest[static_cast<std::size_t>(v)] * rescale;
        out.push_back({{u, v}, value});
    }
    return out;
}

namespace {

// Per-component score computation. Principal-vector positivity holds only
// component-wise, so the eigenvectors are taken on induced subgraphs and the
// scores mapped back to the host graph's canonical edge order.
std::vector<EdgeScore> component_scores(const Graph& g, EdgeIndex index) {
    std::vector<EdgeScore> out;
    out.reserve(g.edges().size());
    for (auto [u, v] : g.edges()) out.push_back({{u, v}, 0.0});

    // canonical edge order -> index lookup
    const auto& edges = g.edges();
    auto edge_slot = [&edges](int u, int v) {
        const VertexPair key{u, v};
        return static_cast<std::size_t>(
            std::lower_bound(edges.begin(), edges.end(), key) - edges.begin());
    };

    for (const auto& comp : connected_components(g)) {
        if (comp.size() < 2) continue;
        const Graph sub = induced_subgraph(g, comp);
        std::vector<EdgeScore> local;
        if (index == EdgeIndex::PhiA) {
            local = phi_a_from_vectors(sub, perron_vector(sub),
                                       extremal_vector(sub, MatrixKind::Adjacency));
        } else {
            local = phi_nl_from_vector(sub, extremal_vector(sub, MatrixKind::NormalizedLaplacian));
        }
        for (const auto& s : local) {
            const int gu = comp[static_cast<std::size_t>(s.edge.first)];
            const int gv = comp[static_cast<std::size_t>(s.edge.second)];
            out[edge_slot(gu, gv)].value = s.value;
        }
    }
    return out;
}

}  // namespace

std::vector<EdgeScore> phi_a_scores(const Graph& g) { return component_scores(g, EdgeIndex::PhiA); }

std::vector<EdgeScore> phi_nl_scores(const Graph& g) {
    return component_scores(g, EdgeIndex::PhiNL);
}

RemovalTrace greedy_remove(const Graph& g, EdgeIndex index) {
    const int original_edges = g.edge_count();
    Graph cur = g;
    RemovalTrace trace;

    for (;;) {
        const auto comps = connected_components(cur);
        std::vector<char> comp_bipartite(comps.size(), 0);
        std::vector<int> comp_of(static_cast<std::size_t>(cur.vertex_count()), -1);
        bool all_bipartite = true;
        for (std::size_t c = 0; c < comps.size(); ++c) {
            for (int v : comps[c]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
            comp_bipartite[c] = two_color(induced_subgraph(cur, comps[c])).has_value() ? 1 : 0;
            if (!comp_bipartite[c]) all_bipartite = false;
        }
        if (all_bipartite) break;

        VertexPair pick{-1, -1};
        if (index == EdgeIndex::BetaEdge) {
            // Global arg-min over all current edges; the base value is shared.
            const double base = beta_new(cur);
            double best = std::numeric_limits<double>::infinity();
            for (auto e : cur.edges()) {
                const double score = 1.0 - (beta_new(remove_edge(cur, e)) - base);
                if (score < best) {
                    best = score;
                    pick = e;
                }
            }
        } else {
            // Arg-max restricted to edges of non-bipartite components; edges
            // of bipartite components carry the constant bipartite signature
            // and removing them cannot help.
            const auto scores = component_scores(cur, index);
            double best = -std::numeric_limits<double>::infinity();
            for (const auto& s : scores) {
                if (comp_bipartite[static_cast<std::size_t>(
                        comp_of[static_cast<std::size_t>(s.edge.first)])])
                    continue;
                if (s.value > best) {
                    best = s.value;
                    pick = s.edge;
                }
            }
        }
        cur = remove_edge(cur, pick);
        trace.removed.push_back(pick);
    }

    trace.r_b = original_edges == 0 ? Rational(1, 1) : Rational(cur.edge_count(), original_edges);
    trace.final = std::move(cur);
    return trace;
}

}  // namespace bipartify
