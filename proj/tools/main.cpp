#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bipartify/bipartivity.hpp"
#include "bipartify/edgelist_io.hpp"
#include "bipartify/experiment.hpp"
#include "bipartify/generators.hpp"
#include "bipartify/oracle.hpp"
#include "bipartify/svg.hpp"

namespace {

using namespace bipartify;

// exit codes: 0 ok, 1 usage, 2 input format, 3 computational failure
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag_seed) {
    if (flag_seed) return *flag_seed;
    if (const char* env = std::getenv("BIPARTIFY_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw CLI::ValidationError("BIPARTIFY_SEED", "not a valid unsigned integer");
        }
    }
    std::random_device rd;
    std::uint64_t seed = (std::uint64_t(rd()) << 32) ^ rd();
    seed ^= static_cast<std::uint64_t>(
        std::chrono::steady_clock::now().time_since_epoch().count());
    std::cerr << "seed=" << seed << "\n";
    return seed;
}

std::vector<Method> parse_methods(const std::string& arg) {
    std::vector<Method> out;
    for (const std::string& token : split_csv(arg)) {
        if (token == "all") {
            out.assign(kAllMethods, kAllMethods + 8);
            continue;
        }
        const auto m = parse_method(token);
        if (!m) throw CLI::ValidationError("--methods", "unknown method '" + token + "'");
        if (std::find(out.begin(), out.end(), *m) == out.end()) out.push_back(*m);
    }
    if (out.empty()) throw CLI::ValidationError("--methods", "no methods selected");
    return out;
}

std::vector<Model> parse_models(const std::string& arg) {
    std::vector<Model> out;
    for (std::string token : split_csv(arg)) {
        for (char& c : token) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (token == "ALL") {
            out.assign(kAllModels, kAllModels + 4);
            continue;
        }
        bool found = false;
        for (Model m : kAllModels) {
            if (token == model_name(m)) {
                if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
                found = true;
                break;
            }
        }
        if (!found) throw CLI::ValidationError("--models", "unknown model '" + token + "'");
    }
    if (out.empty()) throw CLI::ValidationError("--models", "no models selected");
    return out;
}

Graph load_graph(const std::string& path) { return read_edge_list_file(path); }

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot open '" + out_path + "' for writing");
    out << content;
}

std::string partition_str(const Bipartition& part) {
    std::string out = "X={";
    bool first = true;
    for (int v : part.vertices_in(Side::X)) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    out += "} Y={";
    first = true;
    for (int v : part.vertices_in(Side::Y)) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    out += "}";
    return out;
}

int run_analyze(const std::string& file, const std::string& methods_arg, int restarts,
                std::optional<std::uint64_t> seed_flag, const std::string& out_path,
                bool timings) {
    const Graph g = load_graph(file);
    if (g.edge_count() < 1) throw InputError("analyze: graph has no edges");
    if (!is_connected(g)) throw InputError("analyze: graph is not connected");
    const std::vector<Method> methods = parse_methods(methods_arg);
    const std::uint64_t seed = resolve_seed(seed_flag);

    char line[160];
    std::string out;
    std::snprintf(line, sizeof line, "# n=%d m=%d seed=%llu restarts=%d\n", g.vertex_count(),
                  g.edge_count(), static_cast<unsigned long long>(seed), restarts);
    out += line;
    std::snprintf(line, sizeof line, "%-16s %8s %6s %8s %10s%s\n", "method", "retained", "total",
                  "r_b", "value", timings ? "     ms" : "");
    out += line;
    for (Method m : methods) {
        const auto t0 = std::chrono::steady_clock::now();
        const MethodResult res =
            run_method(g, m, restarts, derive_stream(seed, static_cast<std::uint64_t>(method_tag(m))));
        const auto t1 = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        std::snprintf(line, sizeof line, "%-16s %8d %6d %8s %10.6f", method_name(m),
                      res.retained_edges, g.edge_count(), res.r_b.str().c_str(), res.r_b.value());
        out += line;
        if (timings) {
            std::snprintf(line, sizeof line, " %6.1f", ms);
            out += line;
        }
        out += "\n";
    }
    emit(out, out_path);
    return 0;
}

int run_generate(const std::string& model_arg, int n, std::optional<double> p,
                 std::optional<double> psi, int k, std::optional<double> r, std::optional<int> m,
                 bool sample, std::optional<std::uint64_t> seed_flag, const std::string& out_path) {
    const std::vector<Model> models = parse_models(model_arg);
    if (models.size() != 1) throw CLI::ValidationError("--model", "exactly one model required");
    const Model model = models.front();
    const std::uint64_t seed = resolve_seed(seed_flag);
    Rng rng(seed);

    Graph g;
    std::string params;
    if (sample) {
        auto [graph, spec] = sample_instance(model, n, rng);
        g = std::move(graph);
        params = spec.params_str();
    } else {
        ModelSpec spec;
        spec.model = model;
        spec.n = n;
        switch (model) {
            case Model::ER:
                if (!p) throw CLI::ValidationError("--p", "required for er (or use --sample)");
                spec.p = *p;
                g = erdos_renyi(n, spec.p, rng);
                break;
            case Model::WS:
                if (!psi) throw CLI::ValidationError("--psi", "required for ws (or use --sample)");
                spec.psi = *psi;
                spec.k = k;
                g = watts_strogatz(n, k, spec.psi, rng);
                break;
            case Model::RG:
                if (!r) throw CLI::ValidationError("--r", "required for rg (or use --sample)");
                spec.r = *r;
                g = random_geometric(n, spec.r, rng);
                break;
            case Model::BA:
                if (!m) throw CLI::ValidationError("--m", "required for ba (or use --sample)");
                spec.m = *m;
                g = barabasi_albert(n, spec.m, rng);
                break;
        }
        params = spec.params_str();
    }

    std::ostringstream buf;
    write_edge_list(buf, g,
                    {"model=" + std::string(model_name(model)) + " params=" + params +
                     " seed=" + std::to_string(seed)});
    emit(buf.str(), out_path);
    return 0;
}

int run_oracle(const std::string& file, const std::string& out_path) {
    const Graph g = load_graph(file);
    const OracleResult res = max_cut_exact(g);
    std::string out = "max_cut=" + std::to_string(res.max_cut) + " r_b_opt=" + res.r_b_opt.str();
    char val[40];
    std::snprintf(val, sizeof val, " (%.6f)\n", res.r_b_opt.value());
    out += val;
    out += partition_str(res.witness) + "\n";
    emit(out, out_path);
    return 0;
}

int run_score_edges(const std::string& file, const std::string& index_arg,
                    const std::string& out_path) {
    const Graph g = load_graph(file);
    std::optional<EdgeIndex> index;
    if (index_arg == "beta" || index_arg == "beta-edge") index = EdgeIndex::BetaEdge;
    if (index_arg == "phi-a") index = EdgeIndex::PhiA;
    if (index_arg == "phi-nl") index = EdgeIndex::PhiNL;
    if (!index) throw CLI::ValidationError("--index", "expected beta, phi-a, or phi-nl");

    std::vector<EdgeScore> scores;
    if (*index == EdgeIndex::BetaEdge) {
        for (auto e : g.edges()) scores.push_back({e, edge_beta(g, e)});
    } else {
        scores = *index == EdgeIndex::PhiA ? phi_a_scores(g) : phi_nl_scores(g);
    }

    std::string out = "# index=" + std::string(edge_index_name(*index)) + "\n";
    char line[80];
    for (const auto& s : scores) {
        std::snprintf(line, sizeof line, "%d %d %.12g\n", s.edge.first, s.edge.second, s.value);
        out += line;
    }
    emit(out, out_path);
    return 0;
}

// Flat key=value config for the experiment subcommand; keys mirror the flags
// and apply only where no explicit flag was given.
void apply_experiment_config(const std::string& path, const CLI::App* cmd, SweepConfig& cfg,
                             std::string& models, std::string& methods, bool& include_greedy,
                             std::optional<std::uint64_t>& seed, int& threads, std::string& out,
                             std::string& format, bool& timings) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open '" + path + "'");

    auto parse_bool = [](const std::string& v) {
        if (v == "1" || v == "true" || v == "yes") return true;
        if (v == "0" || v == "false" || v == "no") return false;
        throw CLI::ValidationError("--config", "expected a boolean, got '" + v + "'");
    };
    auto parse_int = [](const std::string& v) {
        try {
            return std::stoi(v);
        } catch (...) {
            throw CLI::ValidationError("--config", "expected an integer, got '" + v + "'");
        }
    };

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--config",
                                       "line " + std::to_string(line_no) + " is not key=value");
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const bool overridden = cmd->count("--" + key) > 0;
        if (key == "models") {
            if (!overridden) models = value;
        } else if (key == "n") {
            if (!overridden) cfg.n = parse_int(value);
        } else if (key == "instances") {
            if (!overridden) cfg.instances = parse_int(value);
        } else if (key == "restarts") {
            if (!overridden) cfg.restarts = parse_int(value);
        } else if (key == "methods") {
            if (!overridden) methods = value;
        } else if (key == "include-greedy") {
            if (!overridden) include_greedy = parse_bool(value);
        } else if (key == "seed") {
            if (!overridden) {
                try {
                    seed = std::stoull(value);
                } catch (...) {
                    throw CLI::ValidationError("--config", "seed is not an unsigned integer");
                }
            }
        } else if (key == "threads") {
            if (!overridden) threads = parse_int(value);
        } else if (key == "out") {
            if (!overridden) out = value;
        } else if (key == "bins") {
            if (!overridden) cfg.histogram_bins = parse_int(value);
        } else if (key == "format") {
            if (!overridden) format = value;
        } else if (key == "timings") {
            if (!overridden) timings = parse_bool(value);
        } else {
            throw CLI::ValidationError("--config", "unknown key '" + key + "'");
        }
    }
}

int run_experiment(const SweepConfig& cfg_in, const std::string& models_arg,
                   const std::string& methods_arg, bool include_greedy,
                   std::optional<std::uint64_t> seed_flag, int threads,
                   const std::string& out_dir, const std::string& format_arg, bool timings) {
    SweepConfig cfg = cfg_in;
    cfg.models = parse_models(models_arg);
    cfg.methods = parse_methods(methods_arg);
    cfg.include_greedy = include_greedy;
    cfg.master_seed = resolve_seed(seed_flag);

    bool want_csv = false, want_json = false, want_svg = false;
    for (const std::string& f : split_csv(format_arg)) {
        if (f == "csv")
            want_csv = true;
        else if (f == "json")
            want_json = true;
        else if (f == "svg")
            want_svg = true;
        else
            throw CLI::ValidationError("--format", "expected csv, json, or svg");
    }

    std::filesystem::path dir(out_dir.empty() ? "." : out_dir);
    std::filesystem::create_directories(dir);

    const auto records = run_sweep(cfg, threads, &std::cerr);

    if (want_csv) {
        std::ofstream out(dir / "records.csv");
        if (!out) throw InputError("cannot write records.csv");
        out << records_csv(records, timings);
    }
    if (want_json || want_svg) {
        const auto summary = summary_json(cfg, records);
        if (want_json) {
            std::ofstream out(dir / "summary.json");
            if (!out) throw InputError("cannot write summary.json");
            out << summary.dump(2) << "\n";
        }
        if (want_svg) {
            for (Model model : cfg.models) {
                for (PlotKind kind : {PlotKind::Ecdf, PlotKind::Histogram, PlotKind::Heatmap}) {
                    std::string name = model_name(model);
                    for (char& c : name)
                        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
                    std::ofstream out(dir / (name + "_" + plot_kind_name(kind) + ".svg"));
                    if (!out) throw InputError("cannot write svg");
                    out << render_svg(summary, kind, model_name(model));
                }
            }
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bipartify: identify large bipartite subgraphs and benchmark the methods"};
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "run identification methods on one graph");
    std::string an_file, an_methods = "all", an_out;
    int an_restarts = 100;
    std::optional<std::uint64_t> an_seed;
    bool an_timings = false;
    analyze->add_option("file", an_file, "edge-list file")->required();
    analyze->add_option("--methods", an_methods, "comma list of methods or 'all'");
    analyze->add_option("--restarts", an_restarts, "local-switching restarts")
        ->check(CLI::PositiveNumber);
    analyze->add_option("--seed", an_seed, "rng seed");
    analyze->add_option("--out", an_out, "write report here instead of stdout");
    analyze->add_flag("--timings", an_timings, "append wall-clock times (not byte-reproducible)");

    // generate
    auto* generate = app.add_subcommand("generate", "emit one random graph as an edge list");
    std::string gen_model, gen_out;
    int gen_n = 20, gen_k = 8;
    std::optional<double> gen_p, gen_psi, gen_r;
    std::optional<int> gen_m;
    bool gen_sample = false;
    std::optional<std::uint64_t> gen_seed;
    generate->add_option("--model", gen_model, "er, ws, rg, or ba")->required();
    generate->add_option("--n", gen_n, "vertex count")->check(CLI::PositiveNumber);
    generate->add_option("--p", gen_p, "er edge probability");
    generate->add_option("--psi", gen_psi, "ws rewiring probability");
    generate->add_option("--k", gen_k, "ws mean degree");
    generate->add_option("--r", gen_r, "rg joining radius");
    generate->add_option("--m", gen_m, "ba attachments per vertex");
    generate->add_flag("--sample", gen_sample,
                       "sample parameters from the sweep ranges and filter to "
                       "connected non-bipartite instances");
    generate->add_option("--seed", gen_seed, "rng seed");
    generate->add_option("--out", gen_out, "output file (default stdout)");

    // experiment
    auto* experiment = app.add_subcommand("experiment", "run the comparison sweep");
    SweepConfig cfg;
    std::string ex_models = "all", ex_methods = "all", ex_out = ".", ex_format = "csv,json";
    std::string ex_config;
    bool ex_greedy = true, ex_timings = false;
    int ex_threads = 1;
    std::optional<std::uint64_t> ex_seed;
    experiment->add_option("--config", ex_config, "flat key=value config file; flags override");
    experiment->add_option("--models", ex_models, "comma list of er,ws,rg,ba or 'all'");
    experiment->add_option("--n", cfg.n, "vertex count")->check(CLI::PositiveNumber);
    experiment->add_option("--instances", cfg.instances, "instances per model")
        ->check(CLI::PositiveNumber);
    experiment->add_option("--restarts", cfg.restarts, "local-switching restarts")
        ->check(CLI::PositiveNumber);
    experiment->add_option("--methods", ex_methods, "comma list of methods or 'all'");
    experiment->add_option("--include-greedy", ex_greedy,
                           "run the greedy edge-removal methods (default true)");
    experiment->add_option("--seed", ex_seed, "master seed");
    experiment->add_option("--threads", ex_threads, "worker cap; never changes results")
        ->check(CLI::PositiveNumber);
    experiment->add_option("--out", ex_out, "output directory");
    experiment->add_option("--bins", cfg.histogram_bins, "histogram bins")
        ->check(CLI::PositiveNumber);
    experiment->add_option("--format", ex_format, "comma subset of csv,json,svg");
    experiment->add_flag("--timings", ex_timings,
                         "write wall-clock runtimes into records.csv (not byte-reproducible)");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exact maximum cut by enumeration (n <= 26)");
    std::string or_file, or_out;
    oracle->add_option("file", or_file, "edge-list file")->required();
    oracle->add_option("--out", or_out, "write result here instead of stdout");

    // score-edges
    auto* score = app.add_subcommand("score-edges", "per-edge bipartivity scores");
    std::string sc_file, sc_index, sc_out;
    score->add_option("file", sc_file, "edge-list file")->required();
    score->add_option("--index", sc_index, "beta, phi-a, or phi-nl")->required();
    score->add_option("--out", sc_out, "write scores here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(analyze))
            return run_analyze(an_file, an_methods, an_restarts, an_seed, an_out, an_timings);
        if (app.got_subcommand(generate))
            return run_generate(gen_model, gen_n, gen_p, gen_psi, gen_k, gen_r, gen_m, gen_sample,
                                gen_seed, gen_out);
        if (app.got_subcommand(experiment)) {
            if (!ex_config.empty())
                apply_experiment_config(ex_config, experiment, cfg, ex_models, ex_methods,
                                        ex_greedy, ex_seed, ex_threads, ex_out, ex_format,
                                        ex_timings);
            return run_experiment(cfg, ex_models, ex_methods, ex_greedy, ex_seed, ex_threads,
                                  ex_out, ex_format, ex_timings);
        }
        if (app.got_subcommand(oracle)) return run_oracle(or_file, or_out);
        if (app.got_subcommand(score)) return run_score_edges(sc_file, sc_index, sc_out);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const TooLargeError& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
