#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "bipartify/graph.hpp"
#include "bipartify/rational.hpp"

namespace bipartify {

struct TooLargeError : std::invalid_argument {
    explicit TooLargeError(const std::string& what) : std::invalid_argument(what) {}
};

/// Exact maximum cut and a witness bipartition attaining it. Every
/// identification method's r_b is bounded above by r_b_opt on the same graph.
struct OracleResult {
    int max_cut = 0;
    Bipartition witness;
    Rational r_b_opt{1, 1};
};

/// Exhaustive enumeration of all 2^(n-1) bipartitions with vertex 0 fixed in
/// X, walking masks in Gray-code order with incremental cut updates. Returns
/// the maximum crossing count and the lexicographically smallest witness
/// (comparing side labels vertex by vertex, X before Y). Guarded to n <= 26.
OracleResult max_cut_exact(const Graph& g);

/// Crossing-edge count of the bipartition encoded by mask bit v-1 for vertex
/// v >= 1 (vertex 0 always in X). Recomputed from scratch; the enumeration's
/// incremental counts are validated against this in the tests.
int crossing_count(const Graph& g, std::uint32_t mask);

}  // namespace bipartify
