#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

namespace bipartify {

struct MissingSeriesError : std::runtime_error {
    explicit MissingSeriesError(const std::string& what) : std::runtime_error(what) {}
};

enum class PlotKind { Histogram, Ecdf, Heatmap };

const char* plot_kind_name(PlotKind kind);

/// Renders one model's series from a summary document as a self-contained
/// SVG: histograms and eCDFs as stepped paths with a method legend, the
/// heatmap as the superiority and similarity grids with per-cell labels.
/// No external resources are referenced.
std::string render_svg(const nlohmann::ordered_json& summary, PlotKind kind,
                       const std::string& model);

}  // namespace bipartify
