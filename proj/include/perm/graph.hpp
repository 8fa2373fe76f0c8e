#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace perm {

using VertexId = std::uint32_t;
using CommunityId = std::uint32_t;

/// Input that cannot be parsed or violates a documented precondition.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Immutable undirected simple graph in compressed sparse row form.
///
/// Vertex ids are contiguous in [0, n). Every adjacency list is sorted and
/// free of duplicates and self-loops; u appears in adj(v) iff v appears in
/// adj(u). An optional label table maps ids to external string labels.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Self-loops and duplicate edges are
    /// dropped; `dropped_self_loops` (if non-null) receives the self-loop count.
    static Graph from_edges(std::size_t vertex_count,
                            std::span<const std::pair<VertexId, VertexId>> edges,
                            std::size_t* dropped_self_loops = nullptr);

    std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const { return neighbors_.size() / 2; }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
    }
    std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(VertexId u, VertexId v) const;

    /// Every undirected edge once, as (u, v) with u < v, in ascending order.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    bool has_labels() const { return !labels_.empty(); }
    /// External label of v; the decimal id when no labels are attached.
    std::string label(VertexId v) const;
    /// Looks up a label. Throws DataError if it is unknown.
    VertexId id_of(std::string_view label) const;
    bool contains_label(std::string_view label) const;
    void set_labels(std::vector<std::string> labels);

    /// Verifies symmetry, sortedness and simplicity of all adjacency lists.
    bool check_invariants() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.offsets_ == b.offsets_ && a.neighbors_ == b.neighbors_;
    }

private:
    std::vector<std::size_t> offsets_{0};
    std::vector<VertexId> neighbors_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, VertexId> label_index_;
};

/// Assignment of every vertex to exactly one community.
///
/// Community ids index `members`; slots may become empty after moves. The
/// member lists are kept as the exact inverse of the assignment vector.
class Partition {
public:
    Partition() = default;
    /// Community ids may be arbitrary; slots up to the largest id are allocated.
    explicit Partition(std::vector<CommunityId> assignment);

    static Partition singletons(std::size_t n);
    static Partition whole(std::size_t n);

    std::size_t vertex_count() const { return assignment_.size(); }
    CommunityId community_of(VertexId v) const { return assignment_[v]; }
    std::span<const CommunityId> assignment() const { return assignment_; }

    /// Number of community slots, including empty ones.
    std::size_t slot_count() const { return members_.size(); }
    /// Number of nonempty communities.
    std::size_t community_count() const { return nonempty_; }
    std::span<const VertexId> members(CommunityId c) const { return members_[c]; }
    std::size_t size_of(CommunityId c) const { return members_[c].size(); }

    /// Moves v into community c (which may be a fresh slot id).
    void move(VertexId v, CommunityId c);
    /// Exchanges the communities of u and v.
    void swap_members(VertexId u, VertexId v);

    /// Relabels nonempty communities 0..k-1 in order of first appearance
    /// along vertex ids. Two partitions describe the same grouping iff their
    /// canonical forms are equal.
    Partition canonical() const;
    bool same_grouping(const Partition& other) const;

    /// Nonempty community sizes in ascending order.
    std::vector<std::size_t> sorted_sizes() const;

    const std::vector<std::string>& community_labels() const { return community_labels_; }
    void set_community_labels(std::vector<std::string> labels) { community_labels_ = std::move(labels); }
    /// Label for community c: the attached label when present, else its id.
    std::string community_label(CommunityId c) const;

    bool check_invariants() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.assignment_ == b.assignment_; }

private:
    std::vector<CommunityId> assignment_;
    std::vector<std::vector<VertexId>> members_;
    std::vector<std::size_t> position_;
    std::size_t nonempty_ = 0;
    std::vector<std::string> community_labels_;
};

} // namespace perm
