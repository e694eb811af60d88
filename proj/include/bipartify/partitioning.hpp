#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bipartify/graph.hpp"
#include "bipartify/rational.hpp"
#include "bipartify/rng.hpp"
#include "bipartify/spectral.hpp"

namespace bipartify {

enum class Method {
    LocalSwitching,
    EigenA,
    EigenQ,
    EigenL,
    EigenNL,
    GreedyBetaNew,
    GreedyPhiA,
    GreedyPhiNL,
};

inline constexpr Method kAllMethods[] = {
    Method::LocalSwitching, Method::EigenA,      Method::EigenQ,     Method::EigenL,
    Method::EigenNL,        Method::GreedyBetaNew, Method::GreedyPhiA, Method::GreedyPhiNL,
};

const char* method_name(Method m);
std::optional<Method> parse_method(const std::string& token);
bool is_greedy_method(Method m);
int method_tag(Method m);

/// One executed vertex move: the vertex, the part it left, and the crossing
/// count before/after. Every move strictly increases the crossing count.
struct VertexMove {
    int vertex = -1;
    Side from = Side::X;
    int crossing_before = 0;
    int crossing_after = 0;
};

/// Outcome of one identification method on one graph.
struct MethodResult {
    Method method = Method::LocalSwitching;
    Bipartition partition;
    int retained_edges = 0;
    Rational r_b{1, 1};
    int restarts_used = 0;
    std::uint64_t rng_seed = 0;
};

/// The vertex-movement loop: scan the active part in ascending vertex order;
/// the first not-yet-moved vertex with strictly more neighbors inside its
/// part than outside switches sides and is frozen; parts alternate after
/// every scan; two consecutive movement-free scans terminate the loop.
/// Each vertex moves at most once. If trace is non-null, executed moves are
/// appended to it.
Bipartition movement_routine(const Graph& g, Bipartition initial, Side start_part,
                             std::vector<VertexMove>* trace = nullptr);

/// Repeated movement_routine from random balanced half/half partitions of a
/// random vertex permutation, with a random starting part; keeps the result
/// with maximum r_b (earliest restart on ties). Restart k consumes the
/// sub-stream derived from (seed, k). Requires restarts >= 1 and at least
/// one edge; the returned r_b is never below 1/2.
MethodResult local_switching(const Graph& g, int restarts, std::uint64_t seed);

/// Builds a partition from the sign pattern of the extremal eigenvector of
/// the chosen matrix, then applies the movement routine starting from part X.
/// Entries within 1e-8 * max|entry| of zero are assigned by fair coin, one
/// draw per such entry in ascending vertex order. Requires a connected graph
/// with at least one edge.
MethodResult eigen_sign_partition(const Graph& g, MatrixKind kind, std::uint64_t seed);

/// Sign-pattern partition of a vector: positive entries to X, negative to Y,
/// near-zero entries (|entry| <= tau) by fair coin in ascending vertex order.
/// Split out so the near-zero handling is directly testable.
Bipartition sign_partition(const std::vector<double>& vec, double tau, Rng& rng);

}  // namespace bipartify
