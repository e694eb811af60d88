#include "doctest.h"

#include <sstream>

#include "bipartify/edgelist_io.hpp"
#include "bipartify/graph.hpp"
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

}  // namespace

TEST_CASE("from_edge_list canonicalizes") {
    const Graph g = five_vertex_graph();
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 6);
    CHECK(g.edges() == std::vector<VertexPair>{{0, 1}, {0, 2}, {0, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(g.neighbors(0) == std::vector<int>{1, 2, 4});
    CHECK(g.neighbors(4) == std::vector<int>{0, 2, 3});

    const Graph single = from_edge_list(1, {});
    CHECK(single.vertex_count() == 1);
    CHECK(single.edge_count() == 0);

    const Graph dedup = from_edge_list(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(dedup.edge_count() == 2);
    CHECK(dedup.edges() == std::vector<VertexPair>{{0, 1}, {1, 2}});
}

TEST_CASE("from_edge_list rejects bad input") {
    CHECK_THROWS_AS(from_edge_list(3, {{0, 0}}), SelfLoopError);
    CHECK_THROWS_AS(from_edge_list(3, {{0, 3}}), IndexOutOfRangeError);
    CHECK_THROWS_AS(from_edge_list(3, {{-1, 2}}), IndexOutOfRangeError);
}

TEST_CASE("from_edge_list is idempotent on canonical graphs") {
    Rng rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(9));
        const Graph g = random_graph(n, 0.4, rng);
        CHECK(from_edge_list(g.vertex_count(), g.edges()) == g);
    }
}

TEST_CASE("is_connected") {
    CHECK(is_connected(five_vertex_graph()));
    CHECK_FALSE(is_connected(from_edge_list(2, {})));
    CHECK(is_connected(from_edge_list(1, {})));
    CHECK_FALSE(is_connected(from_edge_list(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("two_color basics") {
    const auto path = two_color(from_edge_list(3, {{0, 1}, {1, 2}}));
    REQUIRE(path.has_value());
    CHECK(path->side == std::vector<Side>{Side::X, Side::Y, Side::X});

    CHECK_FALSE(two_color(from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}})).has_value());
    CHECK_FALSE(two_color(five_vertex_graph()).has_value());
}

TEST_CASE("two_color agrees with the odd-walk oracle") {
    Rng rng(99);
    int bipartite_seen = 0, nonbipartite_seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(9));
        const Graph g = random_graph(n, 0.15 + 0.5 * rng.uniform(), rng);
        const bool expected = testing::bipartite_by_walks(g);
        const auto coloring = two_color(g);
        CHECK(coloring.has_value() == expected);
        if (coloring) {
            ++bipartite_seen;
            for (auto [u, v] : g.edges())
                CHECK(coloring->side[static_cast<std::size_t>(u)] !=
                      coloring->side[static_cast<std::size_t>(v)]);
        } else {
            ++nonbipartite_seen;
        }
    }
    CHECK(bipartite_seen > 20);
    CHECK(nonbipartite_seen > 20);
}

TEST_CASE("cut_report on the five-vertex fixture") {
    const Graph g = five_vertex_graph();

    // paper labels X={1,3}, Y={2,4,5} -> 0-based X={0,2}
    Bipartition best(5, Side::Y);
    best.side[0] = Side::X;
    best.side[2] = Side::X;
    const CutReport cr = cut_report(g, best);
    CHECK(cr.crossing == 4);
    CHECK(cr.internal == 2);
    CHECK(cr.r_b == Rational(2, 3));

    // paper labels X={2,3,5}, Y={1,4} -> 0-based X={1,2,4}
    Bipartition improved(5, Side::Y);
    improved.side[1] = Side::X;
    improved.side[2] = Side::X;
    improved.side[4] = Side::X;
    CHECK(cut_report(g, improved).r_b == Rational(5, 6));

    CHECK(cut_report(g, Bipartition(5, Side::X)).r_b == Rational(0, 1));
}

TEST_CASE("cut_report invariants") {
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(10));
        const Graph g = random_graph(n, 0.5, rng);
        Bipartition b(n);
        for (int v = 0; v < n; ++v) b.side[static_cast<std::size_t>(v)] = rng.coin() ? Side::X : Side::Y;
        const CutReport cr = cut_report(g, b);
        CHECK(cr.crossing + cr.internal == g.edge_count());
        CHECK(cr.r_b >= Rational(0, 1));
        CHECK(cr.r_b <= Rational(1, 1));

        Bipartition swapped = b;
        for (auto& s : swapped.side) s = other(s);
        const CutReport cr2 = cut_report(g, swapped);
        CHECK(cr.crossing == cr2.crossing);
        CHECK(cr.r_b == cr2.r_b);
    }
}

TEST_CASE("cut_report on an edgeless graph defines r_b = 1") {
    const Graph g = from_edge_list(3, {});
    CHECK(cut_report(g, Bipartition(3)).r_b == Rational(1, 1));
}

TEST_CASE("ext_int_degrees on the fixture's initial partition") {
    const Graph g = five_vertex_graph();
    // paper labels X={1,2}, Y={3,4,5} -> 0-based X={0,1}
    Bipartition part(5, Side::Y);
    part.side[0] = Side::X;
    part.side[1] = Side::X;

    CHECK(ext_int_degrees(g, part, 0) == std::pair<int, int>{2, 1});
    // vertex 2 (paper 3) has neighbors {0,3,4}: one across, two inside
    CHECK(ext_int_degrees(g, part, 2) == std::pair<int, int>{1, 2});
    CHECK(ext_int_degrees(g, part, 1) == std::pair<int, int>{0, 1});

    const Graph isolated = from_edge_list(2, {});
    CHECK(ext_int_degrees(isolated, Bipartition(2), 0) == std::pair<int, int>{0, 0});
}

TEST_CASE("ext + int equals degree") {
    Rng rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(9));
        const Graph g = random_graph(n, 0.5, rng);
        Bipartition b(n);
        for (int v = 0; v < n; ++v) b.side[static_cast<std::size_t>(v)] = rng.coin() ? Side::X : Side::Y;
        for (int v = 0; v < n; ++v) {
            const auto [ext, internal] = ext_int_degrees(g, b, v);
            CHECK(ext + internal == g.degree(v));
        }
    }
}

TEST_CASE("remove_edge") {
    const Graph triangle = from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
    const Graph path = remove_edge(triangle, {0, 1});
    CHECK(path.edge_count() == 2);
    CHECK(two_color(path).has_value());
    CHECK(triangle.edge_count() == 3);  // input untouched

    // removing the shared triangle edge of the fixture kills both odd cycles
    const Graph g = five_vertex_graph();
    CHECK_FALSE(testing::bipartite_by_walks(g));
    const Graph cut = remove_edge(g, {2, 4});
    CHECK(two_color(cut).has_value());
    CHECK(testing::bipartite_by_walks(cut));

    const Graph one = from_edge_list(2, {{0, 1}});
    CHECK(remove_edge(one, {1, 0}).edge_count() == 0);

    CHECK_THROWS_AS(remove_edge(path, {0, 1}), MissingEdgeError);
}

TEST_CASE("connected_components") {
    const auto one = connected_components(five_vertex_graph());
    REQUIRE(one.size() == 1);
    CHECK(one[0] == std::vector<int>{0, 1, 2, 3, 4});

    const auto two = connected_components(from_edge_list(4, {{0, 1}, {2, 3}}));
    REQUIRE(two.size() == 2);
    CHECK(two[0] == std::vector<int>{0, 1});
    CHECK(two[1] == std::vector<int>{2, 3});

    const auto singletons = connected_components(from_edge_list(3, {}));
    REQUIRE(singletons.size() == 3);
    CHECK(singletons[2] == std::vector<int>{2});
}

TEST_CASE("induced_subgraph maps edges to local indices") {
    const Graph g = five_vertex_graph();
    const Graph sub = induced_subgraph(g, {0, 2, 4});
    CHECK(sub.vertex_count() == 3);
    CHECK(sub.edges() == std::vector<VertexPair>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("edge list io round trip") {
    const Graph g = five_vertex_graph();
    std::ostringstream buf;
    write_edge_list(buf, g, {"model=none"});
    std::istringstream in(buf.str());
    CHECK(read_edge_list(in) == g);
}

TEST_CASE("edge list io rejects malformed input") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_edge_list(in);
    };
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("2 1\n"), ParseError);            // missing edge line
    CHECK_THROWS_AS(parse("2 1\n0 1\n0 1\n"), ParseError);  // extra edge line
    CHECK_THROWS_AS(parse("2 1\n0 1 9\n"), ParseError);     // trailing token
    CHECK_THROWS_AS(parse("2 1\n0 2\n"), ParseError);       // endpoint out of range
    CHECK_THROWS_AS(parse("x y\n"), ParseError);
    CHECK(parse("# comment\n2 1\n# another\n0 1\n").edge_count() == 1);
}
