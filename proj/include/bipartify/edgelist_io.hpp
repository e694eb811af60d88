#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "bipartify/graph.hpp"

namespace bipartify {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Edge-list text format: lines starting with '#' are comments; the first
// data line is "n m"; exactly m data lines "u v" (0-based) follow.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

// Writes the canonical edge list. Comment lines are emitted first, each
// prefixed with "# ".
void write_edge_list(std::ostream& out, const Graph& g,
                     const std::vector<std::string>& comments = {});
void write_edge_list_file(const std::string& path, const Graph& g,
                          const std::vector<std::string>& comments = {});

}  // namespace bipartify
