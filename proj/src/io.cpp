#include "perm/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace perm {

namespace {

// Splits a line on spaces/tabs, dropping empty fields.
std::vector<std::string_view> fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        if (i > start)
            out.push_back(line.substr(start, i - start));
    }
    return out;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        ++line_no;
        std::string_view line = text.substr(pos, end - pos);
        auto f = fields(line);
        if (!f.empty() && f.front().front() != '#')
            fn(line_no, f);
        if (end == text.size())
            break;
        pos = end + 1;
    }
}

} // namespace

LoadedGraph load_edge_list(std::string_view text) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, VertexId> index;
    std::vector<std::pair<VertexId, VertexId>> edges;

    auto intern = [&](std::string_view label) {
        auto [it, inserted] = index.emplace(std::string(label), static_cast<VertexId>(labels.size()));
        if (inserted)
            labels.emplace_back(label);
        return it->second;
    };

    for_each_line(text, [&](std::size_t line_no, const std::vector<std::string_view>& f) {
        if (f.size() != 2)
            throw ParseError(line_no, "expected two vertex labels, found " + std::to_string(f.size()) + " fields");
        VertexId u = intern(f[0]);
        VertexId v = intern(f[1]);
        edges.emplace_back(u, v);
    });
    if (labels.empty())
        throw DataError("edge list is empty");

    LoadedGraph out;
    out.graph = Graph::from_edges(labels.size(), edges, &out.dropped_self_loops);
    out.duplicate_edges = edges.size() - out.dropped_self_loops - out.graph.edge_count();
    out.graph.set_labels(std::move(labels));
    return out;
}

Partition load_partition(std::string_view text, const Graph& graph) {
    constexpr CommunityId unset = static_cast<CommunityId>(-1);
    std::vector<CommunityId> assignment(graph.vertex_count(), unset);
    std::vector<std::string> community_labels;
    std::unordered_map<std::string, CommunityId> index;

    for_each_line(text, [&](std::size_t line_no, const std::vector<std::string_view>& f) {
        if (f.size() != 2)
            throw ParseError(line_no, "expected vertex label and community label");
        if (!graph.contains_label(f[0]))
            throw ParseError(line_no, "unknown vertex label '" + std::string(f[0]) + "'");
        VertexId v = graph.id_of(f[0]);
        if (assignment[v] != unset)
            throw ParseError(line_no, "vertex '" + std::string(f[0]) + "' assigned twice");
        auto [it, inserted] = index.emplace(std::string(f[1]), static_cast<CommunityId>(community_labels.size()));
        if (inserted)
            community_labels.emplace_back(f[1]);
        assignment[v] = it->second;
    });

    std::vector<std::string> missing;
    for (VertexId v = 0; v < assignment.size(); ++v)
        if (assignment[v] == unset)
            missing.push_back(graph.label(v));
    if (!missing.empty()) {
        std::string msg = "partition misses " + std::to_string(missing.size()) + " vertices:";
        for (std::size_t i = 0; i < missing.size() && i < 20; ++i)
            msg += " " + missing[i];
        if (missing.size() > 20)
            msg += " ...";
        throw DataError(msg);
    }

    Partition p(std::move(assignment));
    p.set_community_labels(std::move(community_labels));
    return p;
}

std::string write_edge_list(const Graph& graph) {
    std::string out;
    for (auto [u, v] : graph.edges()) {
        out += graph.label(u);
        out += ' ';
        out += graph.label(v);
        out += '\n';
    }
    return out;
}

std::string write_partition(const Graph& graph, const Partition& partition) {
    const bool own_labels = !partition.community_labels().empty();
    Partition canon = own_labels ? Partition{} : partition.canonical();
    std::string out;
    for (VertexId v = 0; v < partition.vertex_count(); ++v) {
        out += graph.label(v);
        out += '\t';
        out += own_labels ? partition.community_label(partition.community_of(v))
                          : std::to_string(canon.community_of(v));
        out += '\n';
    }
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DataError("cannot open file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw DataError("cannot write file: " + path.string());
    out << text;
    if (!out)
        throw DataError("write failed: " + path.string());
}

} // namespace perm
