#include "doctest.h"

#include <string>
#include <vector>

#include "bipartify/experiment.hpp"
#include "bipartify/svg.hpp"

using namespace bipartify;

namespace {

// minimal well-formedness scan: balanced tags, quote-aware
bool well_formed_xml(const std::string& text) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '<') {
            ++i;
            continue;
        }
        std::size_t j = i + 1;
        bool in_quote = false;
        while (j < text.size() && (in_quote || text[j] != '>')) {
            if (text[j] == '"') in_quote = !in_quote;
            ++j;
        }
        if (j >= text.size()) return false;
        const std::string tag = text.substr(i + 1, j - i - 1);
        if (!tag.empty() && tag.front() == '?') {
            // declaration
        } else if (!tag.empty() && tag.front() == '/') {
            if (stack.empty()) return false;
            const std::string name = tag.substr(1);
            if (stack.back() != name) return false;
            stack.pop_back();
        } else if (!tag.empty() && tag.back() == '/') {
            // self-closing
        } else {
            std::string name;
            for (char c : tag) {
                if (c == ' ' || c == '\n') break;
                name += c;
            }
            stack.push_back(name);
        }
        i = j + 1;
    }
    return stack.empty();
}

nlohmann::ordered_json tiny_summary(Rational ls_value, Rational other_value) {
    SweepConfig cfg;
    cfg.models = {Model::ER};
    cfg.instances = 4;
    cfg.methods = {Method::LocalSwitching, Method::EigenA};
    std::vector<ExperimentRecord> records;
    for (int i = 0; i < 4; ++i) {
        ExperimentRecord a;
        a.model = Model::ER;
        a.instance = i;
        a.method = Method::LocalSwitching;
        a.r_b = ls_value;
        records.push_back(a);
        a.method = Method::EigenA;
        a.r_b = other_value;
        records.push_back(a);
    }
    return summary_json(cfg, records);
}

}  // namespace

TEST_CASE("ecdf svg renders one vertical step for a constant series") {
    const auto summary = tiny_summary(Rational(3, 4), Rational(3, 4));
    const std::string svg = render_svg(summary, PlotKind::Ecdf, "ER");
    CHECK(well_formed_xml(svg));
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("LocalSwitching") != std::string::npos);

    // one "V" segment per constant-series path
    const std::size_t first_path = svg.find("<path");
    REQUIRE(first_path != std::string::npos);
    const std::size_t path_end = svg.find("/>", first_path);
    const std::string path = svg.substr(first_path, path_end - first_path);
    std::size_t vertical_segments = 0;
    for (std::size_t pos = path.find(" V "); pos != std::string::npos;
         pos = path.find(" V ", pos + 1))
        ++vertical_segments;
    CHECK(vertical_segments == 1);
}

TEST_CASE("heatmap svg shows full similarity for identical methods") {
    const auto summary = tiny_summary(Rational(3, 4), Rational(3, 4));
    const std::string svg = render_svg(summary, PlotKind::Heatmap, "ER");
    CHECK(well_formed_xml(svg));
    CHECK(svg.find("1.000") != std::string::npos);   // similarity diagonal and off-diagonal
    CHECK(svg.find("0.000") != std::string::npos);   // superiority cells
}

TEST_CASE("histogram svg renders") {
    const auto summary = tiny_summary(Rational(3, 4), Rational(7, 8));
    const std::string svg = render_svg(summary, PlotKind::Histogram, "ER");
    CHECK(well_formed_xml(svg));
    CHECK(svg.find("density") != std::string::npos);
}

TEST_CASE("svg references no external resources") {
    const auto summary = tiny_summary(Rational(1, 2), Rational(5, 8));
    for (PlotKind kind : {PlotKind::Ecdf, PlotKind::Histogram, PlotKind::Heatmap}) {
        const std::string svg = render_svg(summary, kind, "ER");
        CHECK(svg.find("href") == std::string::npos);
        CHECK(svg.find("url(") == std::string::npos);
        CHECK(svg.find("<image") == std::string::npos);
        CHECK(svg.find("@import") == std::string::npos);
    }
}

TEST_CASE("missing series raise") {
    const auto summary = tiny_summary(Rational(1, 2), Rational(5, 8));
    CHECK_THROWS_AS(render_svg(summary, PlotKind::Ecdf, "WS"), MissingSeriesError);
    nlohmann::ordered_json empty;
    CHECK_THROWS_AS(render_svg(empty, PlotKind::Heatmap, "ER"), MissingSeriesError);
}
