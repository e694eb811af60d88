#include "bipartify/edgelist_io.hpp"

#include <fstream>
#include <sstream>

namespace bipartify {

namespace {

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        return c == '#';
    }
    return true;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::vector<std::string> data_lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!is_comment_or_blank(line)) data_lines.push_back(line);
    }
    if (data_lines.empty()) throw ParseError("edge list: no data lines");

    int n = 0;
    long m = 0;
    {
        std::istringstream head(data_lines.front());
        std::string extra;
        if (!(head >> n >> m) || (head >> extra))
            throw ParseError("edge list: header must be exactly 'n m'");
    }
    if (n < 0 || m < 0) throw ParseError("edge list: negative header values");
    if (static_cast<long>(data_lines.size()) - 1 != m)
        throw ParseError("edge list: expected " + std::to_string(m) + " edge lines, found " +
                         std::to_string(data_lines.size() - 1));

    std::vector<VertexPair> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::size_t i = 1; i < data_lines.size(); ++i) {
        std::istringstream row(data_lines[i]);
        int u = 0, v = 0;
        std::string extra;
        if (!(row >> u >> v) || (row >> extra))
            throw ParseError("edge list: line " + std::to_string(i + 1) +
                             " must be exactly 'u v'");
        edges.emplace_back(u, v);
    }
    try {
        return from_edge_list(n, edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g,
                     const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "# " << c << "\n";
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

void write_edge_list_file(const std::string& path, const Graph& g,
                          const std::vector<std::string>& comments) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    write_edge_list(out, g, comments);
}

}  // namespace bipartify
