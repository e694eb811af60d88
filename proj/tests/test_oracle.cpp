#include "doctest.h"

#include "bipartify/oracle.hpp"
#include "bipartify/rng.hpp"
#include "test_support.hpp"

using namespace bipartify;
using testing::five_vertex_graph;

namespace {

Graph random_graph(int n, double p, Rng& rng) {
    std::vector<VertexPair> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform() < p) edges.emplace_back(u, v);
    return from_edge_list(n, edges);
}

Graph cycle(int n) {
    std::vector<VertexPair> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return from_edge_list(n, edges);
}

Graph complete(int n) {
    std::vector<VertexPair> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return from_edge_list(n, edges);
}

}  // namespace

TEST_CASE("max_cut_exact on the fixture") {
    const OracleResult res = max_cut_exact(five_vertex_graph());
    CHECK(res.max_cut == 5);
    CHECK(res.r_b_opt == Rational(5, 6));
    CHECK(cut_report(five_vertex_graph(), res.witness).crossing == 5);
}

TEST_CASE("max_cut_exact on closed forms") {
    CHECK(max_cut_exact(complete(4)).max_cut == 4);
    CHECK(max_cut_exact(cycle(5)).max_cut == 4);
    CHECK(max_cut_exact(complete(6)).max_cut == 9);  // floor(n^2/4)
}

TEST_CASE("max_cut_exact matches the scratch-count enumeration") {
    Rng rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(9));
        const Graph g = random_graph(n, 0.2 + 0.6 * rng.uniform(), rng);
        const OracleResult fast = max_cut_exact(g);
        const testing::NaiveCutResult slow = testing::naive_max_cut(g);
        CHECK(fast.max_cut == slow.max_cut);
        for (int v = 1; v < n; ++v) {
            const Side expected = ((slow.witness_mask >> (v - 1)) & 1u) ? Side::Y : Side::X;
            CHECK(fast.witness.side[static_cast<std::size_t>(v)] == expected);
        }
    }
}

TEST_CASE("incremental counts match scratch counts on random masks") {
    Rng rng(5);
    const Graph g = random_graph(12, 0.4, rng);
    for (int trial = 0; trial < 100; ++trial) {
        const auto mask = static_cast<std::uint32_t>(rng.below(1u << 11));
        Bipartition b(12);
        for (int v = 1; v < 12; ++v)
            b.side[static_cast<std::size_t>(v)] = ((mask >> (v - 1)) & 1u) ? Side::Y : Side::X;
        CHECK(crossing_count(g, mask) == cut_report(g, b).crossing);
    }
}

TEST_CASE("lower bounds hold") {
    Rng rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(11));
        const Graph g = random_graph(n, 0.2 + 0.6 * rng.uniform(), rng);
        const int mc = max_cut_exact(g).max_cut;
        CHECK(mc >= (g.edge_count() + 1) / 2);
        if (is_connected(g))
            CHECK(4 * mc >= 2 * g.edge_count() + (g.vertex_count() - 1));
    }
}

TEST_CASE("max_cut equals edge count exactly for bipartite graphs") {
    Rng rng(311);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(9));
        const Graph g = random_graph(n, 0.2 + 0.6 * rng.uniform(), rng);
        const bool hit_all = max_cut_exact(g).max_cut == g.edge_count();
        CHECK(hit_all == two_color(g).has_value());
    }
}

TEST_CASE("edge cases and guard") {
    const OracleResult empty = max_cut_exact(from_edge_list(1, {}));
    CHECK(empty.max_cut == 0);
    CHECK(empty.r_b_opt == Rational(1, 1));

    CHECK_THROWS_AS(max_cut_exact(from_edge_list(27, {})), TooLargeError);
}
