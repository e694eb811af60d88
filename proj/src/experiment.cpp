#include "bipartify/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

namespace bipartify {

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::vector<Method> effective_methods(const SweepConfig& cfg) {
    std::vector<Method> out;
    for (Method m : kAllMethods) {
        if (std::find(cfg.methods.begin(), cfg.methods.end(), m) == cfg.methods.end()) continue;
        if (!cfg.include_greedy && is_greedy_method(m)) continue;
        out.push_back(m);
    }
    return out;
}

MethodResult run_method(const Graph& g, Method method, int restarts, std::uint64_t seed) {
    switch (method) {
        case Method::LocalSwitching: return local_switching(g, restarts, seed);
        case Method::EigenA: return eigen_sign_partition(g, MatrixKind::Adjacency, seed);
        case Method::EigenQ: return eigen_sign_partition(g, MatrixKind::SignlessLaplacian, seed);
        case Method::EigenL: return eigen_sign_partition(g, MatrixKind::Laplacian, seed);
        case Method::EigenNL: return eigen_sign_partition(g, MatrixKind::NormalizedLaplacian, seed);
        case Method::GreedyBetaNew:
        case Method::GreedyPhiA:
        case Method::GreedyPhiNL: {
            const EdgeIndex index = method == Method::GreedyBetaNew ? EdgeIndex::BetaEdge
                                    : method == Method::GreedyPhiA ? EdgeIndex::PhiA
                                                                   : EdgeIndex::PhiNL;
            RemovalTrace trace = greedy_remove(g, index);
            MethodResult res;
            res.method = method;
            res.partition = *two_color(trace.final);
            res.retained_edges = trace.final.edge_count();
            res.r_b = trace.r_b;
            res.restarts_used = 0;
            res.rng_seed = seed;
            return res;
        }
    }
    throw std::logic_error("run_method: unknown method");
}

std::vector<ExperimentRecord> run_sweep(const SweepConfig& cfg, int threads,
                                        std::ostream* progress) {
    if (cfg.instances < 1) throw std::invalid_argument("run_sweep: instances must be >= 1");
    if (cfg.restarts < 1) throw std::invalid_argument("run_sweep: restarts must be >= 1");
    if (cfg.models.empty()) throw std::invalid_argument("run_sweep: no models configured");
    const std::vector<Method> methods = effective_methods(cfg);
    if (methods.empty()) throw std::invalid_argument("run_sweep: no methods configured");

    const std::size_t model_count = cfg.models.size();
    const std::size_t per_instance = methods.size();
    const std::size_t task_count = model_count * static_cast<std::size_t>(cfg.instances);
    std::vector<ExperimentRecord> records(task_count * per_instance);

    std::atomic<std::size_t> next_task{0};
    std::atomic<std::size_t> done_tasks{0};
    std::mutex error_mutex;
    std::string first_error;

    auto worker = [&]() {
        for (;;) {
            const std::size_t task = next_task.fetch_add(1);
            if (task >= task_count) return;
            const std::size_t model_idx = task / static_cast<std::size_t>(cfg.instances);
            const int instance = static_cast<int>(task % static_cast<std::size_t>(cfg.instances));
            const Model model = cfg.models[model_idx];
            try {
                const std::uint64_t model_stream =
                    derive_stream(cfg.master_seed, static_cast<std::uint64_t>(model_tag(model)));
                const std::uint64_t instance_stream =
                    derive_stream(model_stream, static_cast<std::uint64_t>(instance));
                const std::uint64_t graph_seed = derive_stream(instance_stream, 0);

                Rng graph_rng(graph_seed);
                auto [graph, spec] = sample_instance(model, cfg.n, graph_rng);

                for (std::size_t mj = 0; mj < methods.size(); ++mj) {
                    const Method method = methods[mj];
                    const std::uint64_t method_seed = derive_stream(
                        instance_stream, 1 + static_cast<std::uint64_t>(method_tag(method)));
                    const auto t0 = std::chrono::steady_clock::now();
                    const MethodResult result = run_method(graph, method, cfg.restarts, method_seed);
                    const auto t1 = std::chrono::steady_clock::now();

                    ExperimentRecord& rec = records[task * per_instance + mj];
                    rec.model = model;
                    rec.instance = instance;
                    rec.params = spec.params_str();
                    rec.seed = graph_seed;
                    rec.method = method;
                    rec.r_b = result.r_b;
                    rec.retained = result.retained_edges;
                    rec.runtime_ns =
                        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
                }
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (first_error.empty())
                    first_error = std::string(model_name(model)) + " instance " +
                                  std::to_string(instance) + ": " + e.what();
                return;
            }
            const std::size_t done = done_tasks.fetch_add(1) + 1;
            if (progress && done % 200 == 0) {
                std::lock_guard<std::mutex> lock(error_mutex);
                (*progress) << "instances done: " << done << "/" << task_count << "\n";
            }
        }
    };

    const int worker_count =
        std::max(1, std::min<int>(threads, static_cast<int>(task_count)));
    if (worker_count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(worker_count));
        for (int i = 0; i < worker_count; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (!first_error.empty()) throw std::runtime_error("run_sweep: " + first_error);
    return records;
}

std::vector<std::pair<double, double>> ecdf(const std::vector<double>& values) {
    if (values.empty()) throw EmptyInputError("ecdf: empty input");
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::pair<double, double>> steps;
    const double n = static_cast<double>(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i]) continue;
        steps.emplace_back(sorted[i], static_cast<double>(i + 1) / n);
    }
    return steps;
}

std::vector<std::pair<double, double>> histogram(const std::vector<double>& values, int bins,
                                                 double lo, double hi) {
    if (values.empty()) throw EmptyInputError("histogram: empty input");
    if (bins < 1) throw std::invalid_argument("histogram: bins must be >= 1");
    if (!(lo < hi)) throw std::invalid_argument("histogram: need lo < hi");

    const double width = (hi - lo) / bins;
    std::vector<long> counts(static_cast<std::size_t>(bins), 0);
    for (double v : values) {
        int idx = static_cast<int>(std::floor((v - lo) / width));
        idx = std::clamp(idx, 0, bins - 1);
        ++counts[static_cast<std::size_t>(idx)];
    }
    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<std::size_t>(bins));
    const double total = static_cast<double>(values.size());
    for (int b = 0; b < bins; ++b)
        out.emplace_back(lo + (b + 0.5) * width,
                         static_cast<double>(counts[static_cast<std::size_t>(b)]) / (total * width));
    return out;
}

ComparisonMatrices comparison_matrices(const std::vector<ExperimentRecord>& records, Model model) {
    // (instance, method) -> r_b, validated to be a complete grid
    std::vector<Method> methods;
    std::vector<int> instances;
    std::map<std::pair<int, int>, Rational> table;
    for (const auto& rec : records) {
        if (rec.model != model) continue;
        const auto key = std::make_pair(rec.instance, method_tag(rec.method));
        if (table.count(key))
            throw MisalignedRecordsError("duplicate record for instance " +
                                         std::to_string(rec.instance));
        table[key] = rec.r_b;
        if (std::find(methods.begin(), methods.end(), rec.method) == methods.end())
            methods.push_back(rec.method);
        if (std::find(instances.begin(), instances.end(), rec.instance) == instances.end())
            instances.push_back(rec.instance);
    }
    if (methods.empty()) throw MisalignedRecordsError("no records for requested model");
    std::sort(methods.begin(), methods.end(),
              [](Method a, Method b) { return method_tag(a) < method_tag(b); });
    std::sort(instances.begin(), instances.end());
    for (int inst : instances)
        for (Method m : methods)
            if (!table.count({inst, method_tag(m)}))
                throw MisalignedRecordsError("missing record: instance " + std::to_string(inst) +
                                             " method " + method_name(m));

    ComparisonMatrices out;
    out.methods = methods;
    out.instances = static_cast<int>(instances.size());
    const std::size_t k = methods.size();
    out.superior_counts.assign(k, std::vector<int>(k, 0));
    out.similar_counts.assign(k, std::vector<int>(k, 0));
    for (std::size_t i = 0; i < k; ++i) out.similar_counts[i][i] = out.instances;

    for (int inst : instances) {
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i + 1; j < k; ++j) {
                const Rational& a = table[{inst, method_tag(methods[i])}];
                const Rational& b = table[{inst, method_tag(methods[j])}];
                if (a == b) {
                    ++out.similar_counts[i][j];
                    ++out.similar_counts[j][i];
                } else if (a > b) {
                    ++out.superior_counts[i][j];
                } else {
                    ++out.superior_counts[j][i];
                }
            }
        }
    }
    return out;
}

std::string records_csv(const std::vector<ExperimentRecord>& records, bool with_timings) {
    std::string out = "model,instance,params,seed,method,r_b_num,r_b_den,r_b,retained,runtime_ns\n";
    for (const auto& rec : records) {
        out += model_name(rec.model);
        out += ',';
        out += std::to_string(rec.instance);
        out += ',';
        out += rec.params;
        out += ',';
        out += std::to_string(rec.seed);
        out += ',';
        out += method_name(rec.method);
        out += ',';
        out += std::to_string(rec.r_b.num());
        out += ',';
        out += std::to_string(rec.r_b.den());
        out += ',';
        out += fmt_double(rec.r_b.value());
        out += ',';
        out += std::to_string(rec.retained);
        out += ',';
        out += std::to_string(with_timings ? rec.runtime_ns : 0);
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json summary_json(const SweepConfig& cfg,
                                    const std::vector<ExperimentRecord>& records) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = 1;
    doc["rng"] = {
        {"generator", "xoshiro256**"},
        {"seeding", "splitmix64"},
        {"stream_rule", "derive(master, model_tag) -> derive(., instance) -> derive(., 0) for "
                        "sampling / derive(., 1 + method_tag) for methods"},
    };
    {
        nlohmann::ordered_json config;
        nlohmann::ordered_json models = nlohmann::ordered_json::array();
        for (Model m : cfg.models) models.push_back(model_name(m));
        config["models"] = models;
        config["n"] = cfg.n;
        config["instances"] = cfg.instances;
        config["restarts"] = cfg.restarts;
        nlohmann::ordered_json methods = nlohmann::ordered_json::array();
        for (Method m : effective_methods(cfg)) methods.push_back(method_name(m));
        config["methods"] = methods;
        config["master_seed"] = cfg.master_seed;
        config["include_greedy"] = cfg.include_greedy;
        config["histogram"] = {{"bins", cfg.histogram_bins},
                               {"lo", cfg.histogram_lo},
                               {"hi", cfg.histogram_hi}};
        doc["config"] = config;
    }

    nlohmann::ordered_json models_doc;
    for (Model model : cfg.models) {
        nlohmann::ordered_json model_doc;
        const ComparisonMatrices matrices = comparison_matrices(records, model);

        nlohmann::ordered_json methods_doc;
        for (Method method : matrices.methods) {
            std::vector<double> values;
            for (const auto& rec : records)
                if (rec.model == model && rec.method == method) values.push_back(rec.r_b.value());

            nlohmann::ordered_json series;
            nlohmann::ordered_json steps = nlohmann::ordered_json::array();
            for (auto [x, f] : ecdf(values)) steps.push_back({x, f});
            series["ecdf"] = steps;

            nlohmann::ordered_json hist;
            hist["bins"] = cfg.histogram_bins;
            hist["lo"] = cfg.histogram_lo;
            hist["hi"] = cfg.histogram_hi;
            nlohmann::ordered_json centers = nlohmann::ordered_json::array();
            nlohmann::ordered_json density = nlohmann::ordered_json::array();
            for (auto [c, d] : histogram(values, cfg.histogram_bins, cfg.histogram_lo, cfg.histogram_hi)) {
                centers.push_back(c);
                density.push_back(d);
            }
            hist["centers"] = centers;
            hist["density"] = density;
            series["histogram"] = hist;
            methods_doc[method_name(method)] = series;
        }
        model_doc["methods"] = methods_doc;

        nlohmann::ordered_json order = nlohmann::ordered_json::array();
        for (Method m : matrices.methods) order.push_back(method_name(m));
        model_doc["method_order"] = order;
        model_doc["instances"] = matrices.instances;

        const std::size_t k = matrices.methods.size();
        nlohmann::ordered_json sup = nlohmann::ordered_json::array();
        nlohmann::ordered_json sim = nlohmann::ordered_json::array();
        nlohmann::ordered_json sup_counts = nlohmann::ordered_json::array();
        nlohmann::ordered_json sim_counts = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < k; ++i) {
            nlohmann::ordered_json sup_row = nlohmann::ordered_json::array();
            nlohmann::ordered_json sim_row = nlohmann::ordered_json::array();
            nlohmann::ordered_json supc_row = nlohmann::ordered_json::array();
            nlohmann::ordered_json simc_row = nlohmann::ordered_json::array();
            for (std::size_t j = 0; j < k; ++j) {
                sup_row.push_back(matrices.superiority(i, j));
                sim_row.push_back(matrices.similarity(i, j));
                supc_row.push_back(matrices.superior_counts[i][j]);
                simc_row.push_back(matrices.similar_counts[i][j]);
            }
            sup.push_back(sup_row);
            sim.push_back(sim_row);
            sup_counts.push_back(supc_row);
            sim_counts.push_back(simc_row);
        }
        model_doc["superiority"] = sup;
        model_doc["similarity"] = sim;
        model_doc["superiority_counts"] = sup_counts;
        model_doc["similarity_counts"] = sim_counts;

        models_doc[model_name(model)] = model_doc;
    }
    doc["models"] = models_doc;
    return doc;
}

}  // namespace bipartify
