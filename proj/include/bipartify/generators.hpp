#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "bipartify/graph.hpp"
#include "bipartify/rng.hpp"

namespace bipartify {

struct InvalidKError : std::invalid_argument {
    explicit InvalidKError(const std::string& what) : std::invalid_argument(what) {}
};
struct InvalidMError : std::invalid_argument {
    explicit InvalidMError(const std::string& what) : std::invalid_argument(what) {}
};
struct ExhaustedResamplingError : std::runtime_error {
    explicit ExhaustedResamplingError(const std::string& what) : std::runtime_error(what) {}
};

enum class Model { ER, WS, RG, BA };

inline constexpr Model kAllModels[] = {Model::ER, Model::WS, Model::RG, Model::BA};

const char* model_name(Model m);
int model_tag(Model m);

/// The model and sampled parameters an accepted instance was generated with.
struct ModelSpec {
    Model model = Model::ER;
    int n = 0;
    double p = 0.0;    // ER
    double psi = 0.0;  // WS
    int k = 0;         // WS
    double r = 0.0;    // RG
    int norm_l = 2;    // RG
    int m = 0;         // BA

    std::string params_str() const;
};

/// Each of the n-choose-2 vertex pairs is included independently with
/// probability p; pair decisions consume the stream in lexicographic order.
Graph erdos_renyi(int n, double p, Rng& rng);

/// Ring lattice (each vertex tied to its k/2 nearest neighbors on each side),
/// then each lattice edge, visited in canonical order, has its larger
/// endpoint rewired to a uniformly random non-duplicate vertex with
/// probability psi. Edge count is preserved exactly.
Graph watts_strogatz(int n, int k, double psi, Rng& rng);

/// n points i.i.d. uniform on the unit square (coordinates drawn in vertex
/// order); vertices within Euclidean distance r are joined.
Graph random_geometric(int n, double r, Rng& rng);

/// Preferential attachment: m isolated seed vertices, then each arriving
/// vertex attaches to m distinct existing vertices drawn with probability
/// proportional to degree (uniformly while all degrees are zero).
Graph barabasi_albert(int n, int m, Rng& rng);

/// Draws the model parameter uniformly from its sweep range (ER p in
/// [0.2, 1], WS psi in [0, 0.3] with k = 8, RG r in [0.5, 1], BA m in
/// {1..10}), generates, and resamples parameter and graph until the instance
/// is simple, connected, and non-bipartite. Gives up after 10^4 attempts.
std::pair<Graph, ModelSpec> sample_instance(Model model, int n, Rng& rng);

}  // namespace bipartify
