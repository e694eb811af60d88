#include "doctest.h"

#include <cmath>

#include "bipartify/experiment.hpp"
#include "bipartify/oracle.hpp"
#include "test_support.hpp"

using namespace bipartify;

namespace {

SweepConfig small_config() {
    SweepConfig cfg;
    cfg.models = {Model::ER, Model::BA};
    cfg.n = 12;
    cfg.instances = 3;
    cfg.restarts = 10;
    cfg.methods = {Method::LocalSwitching, Method::EigenA, Method::EigenNL};
    cfg.master_seed = 4242;
    cfg.include_greedy = true;
    return cfg;
}

}  // namespace

TEST_CASE("run_sweep covers the full grid and is reproducible") {
    const SweepConfig cfg = small_config();
    const auto a = run_sweep(cfg, 1);
    CHECK(a.size() == 2u * 3u * 3u);
    const auto b = run_sweep(cfg, 1);
    CHECK(records_csv(a) == records_csv(b));
}

TEST_CASE("run_sweep output is independent of the worker count") {
    const SweepConfig cfg = small_config();
    const auto serial = run_sweep(cfg, 1);
    const auto parallel = run_sweep(cfg, 4);
    CHECK(records_csv(serial) == records_csv(parallel));
}

TEST_CASE("adding methods never perturbs other methods' records") {
    SweepConfig lean = small_config();
    lean.methods = {Method::LocalSwitching};
    SweepConfig fat = small_config();
    fat.methods = {Method::LocalSwitching, Method::EigenQ, Method::GreedyPhiNL};

    const auto a = run_sweep(lean, 1);
    const auto b = run_sweep(fat, 1);
    std::vector<ExperimentRecord> b_ls;
    for (const auto& rec : b)
        if (rec.method == Method::LocalSwitching) b_ls.push_back(rec);
    CHECK(records_csv(a) == records_csv(b_ls));
}

TEST_CASE("include_greedy gates the greedy methods") {
    SweepConfig cfg = small_config();
    cfg.methods.assign(kAllMethods, kAllMethods + 8);
    cfg.include_greedy = false;
    CHECK(effective_methods(cfg).size() == 5);
    cfg.include_greedy = true;
    CHECK(effective_methods(cfg).size() == 8);
}

TEST_CASE("local switching records never fall below one half") {
    SweepConfig cfg = small_config();
    cfg.instances = 10;
    cfg.methods = {Method::LocalSwitching};
    for (const auto& rec : run_sweep(cfg, 1)) CHECK(rec.r_b >= Rational(1, 2));
}

TEST_CASE("every method stays within the exact optimum on sampled instances") {
    SweepConfig cfg;
    cfg.models = {Model::ER, Model::WS, Model::RG, Model::BA};
    cfg.n = 12;
    cfg.instances = 3;
    cfg.restarts = 10;
    cfg.master_seed = 777;
    const auto records = run_sweep(cfg, 1);

    // regenerate each instance from its recorded seed and compare to the oracle
    for (const auto& rec : records) {
        Rng rng(rec.seed);
        const auto [g, spec] = sample_instance(rec.model, cfg.n, rng);
        (void)spec;
        const OracleResult oracle = max_cut_exact(g);
        CHECK(rec.retained <= oracle.max_cut);
        CHECK(rec.r_b <= oracle.r_b_opt);
    }
}

TEST_CASE("run_sweep attaches model and instance context to failures") {
    SweepConfig cfg = small_config();
    cfg.models = {Model::WS};
    cfg.n = 6;  // lattice degree 8 is impossible on six vertices
    try {
        run_sweep(cfg, 1);
        FAIL("expected run_sweep to propagate the generator error");
    } catch (const std::runtime_error& e) {
        const std::string what = e.what();
        CHECK(what.find("WS") != std::string::npos);
        CHECK(what.find("instance") != std::string::npos);
    }
}

TEST_CASE("timings are measured but only written on request") {
    SweepConfig cfg = small_config();
    cfg.instances = 1;
    const auto records = run_sweep(cfg, 1);
    bool any_measured = false;
    for (const auto& rec : records) any_measured = any_measured || rec.runtime_ns > 0;
    CHECK(any_measured);
    CHECK(records_csv(records, false) != records_csv(records, true));
}

TEST_CASE("ecdf") {
    const auto steps = ecdf({0.5, 0.5, 1.0});
    REQUIRE(steps.size() == 2);
    CHECK(steps[0].first == 0.5);
    CHECK(steps[0].second == doctest::Approx(2.0 / 3.0));
    CHECK(steps[1].first == 1.0);
    CHECK(steps[1].second == 1.0);

    const auto constant = ecdf({0.75, 0.75, 0.75});
    REQUIRE(constant.size() == 1);
    CHECK(constant[0] == std::pair<double, double>{0.75, 1.0});

    CHECK_THROWS_AS(ecdf({}), EmptyInputError);
}

TEST_CASE("histogram") {
    std::vector<double> values(100, 0.75);
    const auto bins = histogram(values, 50, 0.5, 1.0);
    REQUIRE(bins.size() == 50);
    const double width = 0.01;
    int nonzero = 0;
    double mass = 0.0;
    for (const auto& [center, density] : bins) {
        (void)center;
        if (density > 0.0) {
            ++nonzero;
            CHECK(density == doctest::Approx(1.0 / width));
        }
        mass += density * width;
    }
    CHECK(nonzero == 1);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));

    // out-of-range values clamp into the end bins
    const auto clamped = histogram({0.2, 1.5}, 5, 0.5, 1.0);
    CHECK(clamped.front().second > 0.0);
    CHECK(clamped.back().second > 0.0);

    // near-flat on an even grid
    std::vector<double> grid;
    for (int i = 0; i < 500; ++i) grid.push_back(0.5 + 0.5 * (i + 0.5) / 500.0);
    const auto flat = histogram(grid, 10, 0.5, 1.0);
    for (const auto& [center, density] : flat) {
        (void)center;
        CHECK(density == doctest::Approx(2.0).epsilon(1e-9));
    }

    CHECK_THROWS_AS(histogram({}, 10, 0.0, 1.0), EmptyInputError);
    CHECK_THROWS_AS(histogram({0.5}, 0, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(histogram({0.5}, 10, 1.0, 0.5), std::invalid_argument);
}

TEST_CASE("comparison_matrices counts exactly") {
    std::vector<ExperimentRecord> records;
    auto add = [&records](int instance, Method m, Rational r) {
        ExperimentRecord rec;
        rec.model = Model::ER;
        rec.instance = instance;
        rec.method = m;
        rec.r_b = r;
        records.push_back(rec);
    };
    // two methods, three instances: one win each way plus one tie
    add(0, Method::LocalSwitching, Rational(3, 4));
    add(0, Method::EigenA, Rational(1, 2));
    add(1, Method::LocalSwitching, Rational(1, 2));
    add(1, Method::EigenA, Rational(3, 4));
    add(2, Method::LocalSwitching, Rational(2, 4));
    add(2, Method::EigenA, Rational(1, 2));  // equal as rationals

    const ComparisonMatrices m = comparison_matrices(records, Model::ER);
    REQUIRE(m.methods == std::vector<Method>{Method::LocalSwitching, Method::EigenA});
    CHECK(m.instances == 3);
    CHECK(m.superior_counts[0][1] == 1);
    CHECK(m.superior_counts[1][0] == 1);
    CHECK(m.similar_counts[0][1] == 1);
    CHECK(m.similar_counts[0][0] == 3);
    CHECK(m.superior_counts[0][0] == 0);
    CHECK(m.superior_counts[0][1] + m.superior_counts[1][0] + m.similar_counts[0][1] ==
          m.instances);

    // identical methods: similarity one, superiority zero
    std::vector<ExperimentRecord> twins;
    for (int i = 0; i < 4; ++i) {
        add(i, Method::GreedyPhiA, Rational(i + 1, 8));
        twins.push_back(records.back());
        add(i, Method::GreedyPhiNL, Rational(i + 1, 8));
        twins.push_back(records.back());
    }
    const ComparisonMatrices t = comparison_matrices(twins, Model::ER);
    CHECK(t.similarity(0, 1) == 1.0);
    CHECK(t.superiority(0, 1) == 0.0);
    CHECK(t.superiority(1, 0) == 0.0);
}

TEST_CASE("comparison_matrices trichotomy on sweep output") {
    const auto records = run_sweep(small_config(), 1);
    for (Model model : {Model::ER, Model::BA}) {
        const ComparisonMatrices m = comparison_matrices(records, model);
        for (std::size_t i = 0; i < m.methods.size(); ++i) {
            CHECK(m.superior_counts[i][i] == 0);
            CHECK(m.similar_counts[i][i] == m.instances);
            for (std::size_t j = 0; j < m.methods.size(); ++j) {
                CHECK(m.similar_counts[i][j] == m.similar_counts[j][i]);
                if (i != j)
                    CHECK(m.superior_counts[i][j] + m.superior_counts[j][i] +
                              m.similar_counts[i][j] ==
                          m.instances);
            }
        }
    }
}

TEST_CASE("comparison_matrices rejects incomplete grids") {
    auto records = run_sweep(small_config(), 1);
    records.pop_back();
    CHECK_THROWS_AS(comparison_matrices(records, Model::BA), MisalignedRecordsError);

    records = run_sweep(small_config(), 1);
    records.push_back(records.front());
    CHECK_THROWS_AS(comparison_matrices(records, Model::ER), MisalignedRecordsError);
}

TEST_CASE("records_csv shape and determinism") {
    const auto records = run_sweep(small_config(), 1);
    const std::string csv = records_csv(records);
    CHECK(csv.rfind("model,instance,params,seed,method,r_b_num,r_b_den,r_b,retained,runtime_ns\n",
                    0) == 0);
    const auto lines = static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n'));
    CHECK(lines == records.size() + 1);
    CHECK(csv == records_csv(records));
    CHECK(csv.find(",0\n") != std::string::npos);  // timings zeroed by default
}

TEST_CASE("summary_json carries the config, series, and matrices") {
    const SweepConfig cfg = small_config();
    const auto records = run_sweep(cfg, 1);
    const auto doc = summary_json(cfg, records);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["rng"]["generator"] == "xoshiro256**");
    CHECK(doc["config"]["instances"] == 3);
    REQUIRE(doc["models"].contains("ER"));
    REQUIRE(doc["models"].contains("BA"));
    const auto& er = doc["models"]["ER"];
    CHECK(er["method_order"].size() == 3);
    CHECK(er["methods"]["LocalSwitching"].contains("ecdf"));
    CHECK(er["methods"]["LocalSwitching"]["histogram"]["centers"].size() == 50);
    CHECK(er["superiority"].size() == 3);

    // byte-stable serialization for a fixed config
    const auto again = summary_json(cfg, run_sweep(cfg, 3));
    CHECK(doc.dump(2) == again.dump(2));
}
