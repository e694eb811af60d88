#include "bipartify/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace bipartify {

namespace {

constexpr const char* kSeriesColors[] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string cell_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string text(double x, double y, const std::string& s, const std::string& anchor = "start",
                 int size = 11) {
    return "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-family=\"sans-serif\" font-size=\"" +
           std::to_string(size) + "\" text-anchor=\"" + anchor + "\">" + s + "</text>\n";
}

// white -> base color, t in [0,1]
std::string shade(double t, int r, int g, int b) {
    t = std::clamp(t, 0.0, 1.0);
    const int rr = static_cast<int>(std::lround(255 + (r - 255) * t));
    const int gg = static_cast<int>(std::lround(255 + (g - 255) * t));
    const int bb = static_cast<int>(std::lround(255 + (b - 255) * t));
    char buf[16];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", rr, gg, bb);
    return buf;
}

struct Frame {
    double left, top, width, height;
    double x_lo, x_hi, y_lo, y_hi;

    double px(double x) const { return left + (x - x_lo) / (x_hi - x_lo) * width; }
    double py(double y) const { return top + height - (y - y_lo) / (y_hi - y_lo) * height; }
};

std::string axes(const Frame& f, const std::string& x_label, const std::string& y_label) {
    std::string out;
    out += "<rect x=\"" + num(f.left) + "\" y=\"" + num(f.top) + "\" width=\"" + num(f.width) +
           "\" height=\"" + num(f.height) + "\" fill=\"none\" stroke=\"#333333\"/>\n";
    for (int t = 0; t <= 5; ++t) {
        const double xv = f.x_lo + (f.x_hi - f.x_lo) * t / 5.0;
        const double yv = f.y_lo + (f.y_hi - f.y_lo) * t / 5.0;
        out += "<line x1=\"" + num(f.px(xv)) + "\" y1=\"" + num(f.top + f.height) + "\" x2=\"" +
               num(f.px(xv)) + "\" y2=\"" + num(f.top + f.height + 4) + "\" stroke=\"#333333\"/>\n";
        out += text(f.px(xv), f.top + f.height + 16, num(xv), "middle", 10);
        out += "<line x1=\"" + num(f.left - 4) + "\" y1=\"" + num(f.py(yv)) + "\" x2=\"" +
               num(f.left) + "\" y2=\"" + num(f.py(yv)) + "\" stroke=\"#333333\"/>\n";
        out += text(f.left - 8, f.py(yv) + 3, num(yv), "end", 10);
    }
    out += text(f.left + f.width / 2, f.top + f.height + 32, x_label, "middle");
    out += text(f.left - 44, f.top - 8, y_label, "start");
    return out;
}

std::string legend(const Frame& f, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        const double y = f.top + 14 + 16 * static_cast<double>(i);
        const double x = f.left + f.width + 16;
        out += "<rect x=\"" + num(x) + "\" y=\"" + num(y - 8) +
               "\" width=\"12\" height=\"8\" fill=\"" + kSeriesColors[i % 8] + "\"/>\n";
        out += text(x + 16, y, names[i], "start", 10);
    }
    return out;
}

const nlohmann::ordered_json& model_doc(const nlohmann::ordered_json& summary,
                                        const std::string& model) {
    if (!summary.contains("models") || !summary["models"].contains(model))
        throw MissingSeriesError("summary has no model '" + model + "'");
    return summary["models"][model];
}

std::string render_ecdf(const nlohmann::ordered_json& doc, const std::string& model) {
    const auto& methods = doc["methods"];
    double x_lo = 1.0;
    for (const auto& [name, series] : methods.items()) {
        (void)name;
        if (!series.contains("ecdf")) throw MissingSeriesError("series has no ecdf");
        x_lo = std::min(x_lo, series["ecdf"].front()[0].get<double>());
    }
    x_lo = std::min(x_lo, 0.98);
    Frame f{60, 36, 480, 380, x_lo - 0.02 * (1.0 - x_lo), 1.0, 0.0, 1.0};

    std::string body = text(f.left, 20, model + ": empirical CDF of r_b", "start", 13);
    body += axes(f, "r_b", "F(r_b)");
    std::vector<std::string> names;
    std::size_t idx = 0;
    for (const auto& [name, series] : methods.items()) {
        names.push_back(name);
        std::string d = "M " + num(f.px(f.x_lo)) + " " + num(f.py(0.0));
        for (const auto& step : series["ecdf"]) {
            d += " H " + num(f.px(step[0].get<double>()));
            d += " V " + num(f.py(step[1].get<double>()));
        }
        d += " H " + num(f.px(f.x_hi));
        body += "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + kSeriesColors[idx % 8] +
                "\" stroke-width=\"1.5\"/>\n";
        ++idx;
    }
    body += legend(f, names);
    return body;
}

std::string render_histogram(const nlohmann::ordered_json& doc, const std::string& model) {
    const auto& methods = doc["methods"];
    double y_hi = 0.0;
    double lo = 0.0, hi = 1.0;
    for (const auto& [name, series] : methods.items()) {
        (void)name;
        if (!series.contains("histogram")) throw MissingSeriesError("series has no histogram");
        lo = series["histogram"]["lo"].get<double>();
        hi = series["histogram"]["hi"].get<double>();
        for (const auto& d : series["histogram"]["density"])
            y_hi = std::max(y_hi, d.get<double>());
    }
    if (y_hi <= 0.0) y_hi = 1.0;
    Frame f{60, 36, 480, 380, lo, hi, 0.0, y_hi * 1.05};

    std::string body = text(f.left, 20, model + ": density of r_b", "start", 13);
    body += axes(f, "r_b", "density");
    std::vector<std::string> names;
    std::size_t idx = 0;
    for (const auto& [name, series] : methods.items()) {
        names.push_back(name);
        const auto& density = series["histogram"]["density"];
        const int bins = series["histogram"]["bins"].get<int>();
        const double width = (hi - lo) / bins;
        std::string d = "M " + num(f.px(lo)) + " " + num(f.py(0.0));
        for (int b = 0; b < bins; ++b) {
            d += " V " + num(f.py(density[static_cast<std::size_t>(b)].get<double>()));
            d += " H " + num(f.px(lo + (b + 1) * width));
        }
        d += " V " + num(f.py(0.0));
        body += "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + kSeriesColors[idx % 8] +
                "\" stroke-width=\"1.2\"/>\n";
        ++idx;
    }
    body += legend(f, names);
    return body;
}

std::string short_method_name(const std::string& name) {
    if (name == "LocalSwitching") return "LS";
    if (name == "EigenA") return "A";
    if (name == "EigenQ") return "Q";
    if (name == "EigenL") return "L";
    if (name == "EigenNL") return "NL";
    if (name == "GreedyBetaNew") return "beta(e)";
    if (name == "GreedyPhiA") return "PhiA";
    if (name == "GreedyPhiNL") return "PhiNL";
    return name;
}

std::string render_grid(const nlohmann::ordered_json& matrix,
                        const std::vector<std::string>& names, double left, double top,
                        const std::string& title, int r, int g, int b) {
    const std::size_t k = names.size();
    const double cell = 46.0;
    std::string out = text(left, top - 26, title, "start", 12);
    for (std::size_t i = 0; i < k; ++i) {
        out += text(left - 6, top + cell * static_cast<double>(i) + cell / 2 + 3,
                    short_method_name(names[i]), "end", 9);
        out += text(left + cell * static_cast<double>(i) + cell / 2, top - 6,
                    short_method_name(names[i]), "middle", 9);
        for (std::size_t j = 0; j < k; ++j) {
            const double v = matrix[i][j].get<double>();
            const double x = left + cell * static_cast<double>(j);
            const double y = top + cell * static_cast<double>(i);
            out += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(cell) +
                   "\" height=\"" + num(cell) + "\" fill=\"" + shade(v, r, g, b) +
                   "\" stroke=\"#cccccc\"/>\n";
            const bool dark = v > 0.55;
            out += "<text x=\"" + num(x + cell / 2) + "\" y=\"" + num(y + cell / 2 + 3) +
                   "\" font-family=\"sans-serif\" font-size=\"9\" text-anchor=\"middle\" fill=\"" +
                   (dark ? "#ffffff" : "#333333") + "\">" + cell_label(v) + "</text>\n";
        }
    }
    return out;
}

std::string render_heatmap(const nlohmann::ordered_json& doc, const std::string& model) {
    if (!doc.contains("superiority") || !doc.contains("similarity"))
        throw MissingSeriesError("summary has no comparison matrices");
    std::vector<std::string> names;
    for (const auto& n : doc["method_order"]) names.push_back(n.get<std::string>());
    std::string body = text(70, 20, model + ": pairwise instance fractions", "start", 13);
    const double grid = 46.0 * static_cast<double>(names.size());
    body += render_grid(doc["superiority"], names, 70, 64, "r_b(row) > r_b(col)", 31, 84, 147);
    body += render_grid(doc["similarity"], names, 70 + grid + 90, 64, "r_b(row) = r_b(col)", 166,
                        90, 20);
    return body;
}

}  // namespace

const char* plot_kind_name(PlotKind kind) {
    switch (kind) {
        case PlotKind::Histogram: return "histogram";
        case PlotKind::Ecdf: return "ecdf";
        case PlotKind::Heatmap: return "heatmap";
    }
    return "?";
}

std::string render_svg(const nlohmann::ordered_json& summary, PlotKind kind,
                       const std::string& model) {
    const auto& doc = model_doc(summary, model);
    std::string body;
    double width = 720, height = 480;
    switch (kind) {
        case PlotKind::Ecdf: body = render_ecdf(doc, model); break;
        case PlotKind::Histogram: body = render_histogram(doc, model); break;
        case PlotKind::Heatmap: {
            body = render_heatmap(doc, model);
            const double k = static_cast<double>(doc["method_order"].size());
            width = 2 * (46.0 * k) + 90 + 140;
            height = 46.0 * k + 110;
            break;
        }
    }
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
           num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) +
           "\" fill=\"#ffffff\"/>\n";
    out += body;
    out += "</svg>\n";
    return out;
}

}  // namespace bipartify
