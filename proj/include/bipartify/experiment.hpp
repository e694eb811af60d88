#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bipartify/bipartivity.hpp"
#include "bipartify/generators.hpp"
#include "bipartify/graph.hpp"
#include "bipartify/partitioning.hpp"

#include "json.hpp"

namespace bipartify {

struct EmptyInputError : std::invalid_argument {
    explicit EmptyInputError(const std::string& what) : std::invalid_argument(what) {}
};
struct MisalignedRecordsError : std::runtime_error {
    explicit MisalignedRecordsError(const std::string& what) : std::runtime_error(what) {}
};

struct SweepConfig {
    std::vector<Model> models{Model::ER, Model::WS, Model::RG, Model::BA};
    int n = 20;
    int instances = 1000;
    int restarts = 100;
    std::vector<Method> methods{kAllMethods, kAllMethods + 8};
    std::uint64_t master_seed = 0;
    bool include_greedy = true;
    int histogram_bins = 50;
    double histogram_lo = 0.5;
    double histogram_hi = 1.0;
};

/// One (model, instance, method) row of a sweep.
struct ExperimentRecord {
    Model model = Model::ER;
    int instance = 0;
    std::string params;
    std::uint64_t seed = 0;  // instance-generation sub-seed, replayable standalone
    Method method = Method::LocalSwitching;
    Rational r_b{1, 1};
    int retained = 0;
    std::int64_t runtime_ns = 0;
};

/// Pairwise instance fractions: superiority(i,j) counts instances where
/// method i retained strictly more than method j (exact rational compare);
/// similarity counts exact ties. For every pair,
/// superiority(i,j) + superiority(j,i) + similarity(i,j) == instances.
struct ComparisonMatrices {
    std::vector<Method> methods;
    int instances = 0;
    std::vector<std::vector<int>> superior_counts;
    std::vector<std::vector<int>> similar_counts;

    double superiority(std::size_t i, std::size_t j) const {
        return double(superior_counts[i][j]) / instances;
    }
    double similarity(std::size_t i, std::size_t j) const {
        return double(similar_counts[i][j]) / instances;
    }
};

/// The methods a sweep actually runs: the configured set, minus the greedy
/// ones when include_greedy is off, in canonical order.
std::vector<Method> effective_methods(const SweepConfig& cfg);

/// Runs one method on one graph with the given sub-seed.
MethodResult run_method(const Graph& g, Method method, int restarts, std::uint64_t seed);

/// Full sweep: per model and instance index, sample an accepted instance and
/// run every effective method on it. Sub-streams are derived per
/// (master seed, model, instance, purpose), so the record set is a pure
/// function of the config no matter how many worker threads run it.
std::vector<ExperimentRecord> run_sweep(const SweepConfig& cfg, int threads = 1,
                                        std::ostream* progress = nullptr);

/// Right-continuous empirical CDF: (x, F(x)) steps over sorted distinct
/// values, F(max) = 1.
std::vector<std::pair<double, double>> ecdf(const std::vector<double>& values);

/// Equal-width histogram over [lo, hi], normalized so sum(density * width)
/// is 1. Out-of-range values clamp into the end bins. Returns
/// (bin center, density) pairs.
std::vector<std::pair<double, double>> histogram(const std::vector<double>& values, int bins,
                                                 double lo, double hi);

/// Pairwise comparison matrices for one model's records. Requires a complete
/// (instance x method) grid.
ComparisonMatrices comparison_matrices(const std::vector<ExperimentRecord>& records, Model model);

/// CSV serialization, header
/// model,instance,params,seed,method,r_b_num,r_b_den,r_b,retained,runtime_ns.
/// Byte-stable for a fixed config; wall-clock runtimes are written only when
/// with_timings is set (they vary run to run).
std::string records_csv(const std::vector<ExperimentRecord>& records, bool with_timings = false);

/// Summary document: per model and method the eCDF and histogram of r_b,
/// plus the comparison matrices, with the config and RNG metadata echoed.
nlohmann::ordered_json summary_json(const SweepConfig& cfg,
                                    const std::vector<ExperimentRecord>& records);

}  // namespace bipartify
