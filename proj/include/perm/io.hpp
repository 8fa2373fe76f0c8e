#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "perm/graph.hpp"

namespace perm {

/// Raised for malformed text input; carries the 1-based offending line.
class ParseError : public DataError {
public:
    ParseError(std::size_t line, const std::string& what)
        : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct LoadedGraph {
    Graph graph;
    std::size_t dropped_self_loops = 0;
    std::size_t duplicate_edges = 0;
};

/// Parses a whitespace-separated edge list. Lines starting with `#` and blank
/// lines are ignored. Labels receive ids in order of first appearance.
LoadedGraph load_edge_list(std::string_view text);

/// Parses `vertex_label <whitespace> community_label` lines against `graph`.
/// Community labels get contiguous ids in order of first appearance.
Partition load_partition(std::string_view text, const Graph& graph);

/// One `u v` line per edge, u < v by id, using the graph's labels.
std::string write_edge_list(const Graph& graph);

/// One `vertex<TAB>community` line per vertex in id order. Community labels
/// are the partition's own when attached, else canonical ids.
std::string write_partition(const Graph& graph, const Partition& partition);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

} // namespace perm
