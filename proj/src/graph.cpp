#include "perm/graph.hpp"

#include <algorithm>
#include <numeric>

namespace perm {

Graph Graph::from_edges(std::size_t vertex_count,
                        std::span<const std::pair<VertexId, VertexId>> edges,
                        std::size_t* dropped_self_loops) {
    std::vector<std::size_t> deg(vertex_count, 0);
    std::size_t loops = 0;
    for (auto [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count)
            throw DataError("edge endpoint out of range: " + std::to_string(std::max(u, v)));
        if (u == v) {
            ++loops;
            continue;
        }
        ++deg[u];
        ++deg[v];
    }

    std::vector<std::vector<VertexId>> adj(vertex_count);
    for (std::size_t v = 0; v < vertex_count; ++v)
        adj[v].reserve(deg[v]);
    for (auto [u, v] : edges) {
        if (u == v)
            continue;
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    Graph g;
    g.offsets_.assign(vertex_count + 1, 0);
    for (std::size_t v = 0; v < vertex_count; ++v) {
        auto& list = adj[v];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        g.offsets_[v + 1] = g.offsets_[v] + list.size();
    }
    g.neighbors_.reserve(g.offsets_.back());
    for (const auto& list : adj)
        g.neighbors_.insert(g.neighbors_.end(), list.begin(), list.end());

    if (dropped_self_loops)
        *dropped_self_loops = loops;
    return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edge_count());
    for (VertexId u = 0; u < vertex_count(); ++u)
        for (VertexId v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::string Graph::label(VertexId v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

VertexId Graph::id_of(std::string_view label) const {
    if (labels_.empty()) {
        VertexId id = 0;
        bool ok = !label.empty();
        for (char ch : label) {
            if (ch < '0' || ch > '9') {
                ok = false;
                break;
            }
            id = id * 10 + static_cast<VertexId>(ch - '0');
        }
        if (!ok || id >= vertex_count())
            throw DataError("unknown vertex label '" + std::string(label) + "'");
        return id;
    }
    auto it = label_index_.find(std::string(label));
    if (it == label_index_.end())
        throw DataError("unknown vertex label '" + std::string(label) + "'");
    return it->second;
}

bool Graph::contains_label(std::string_view label) const {
    try {
        id_of(label);
        return true;
    } catch (const DataError&) {
        return false;
    }
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (labels.size() != vertex_count())
        throw DataError("label count does not match vertex count");
    label_index_.clear();
    for (VertexId v = 0; v < labels.size(); ++v)
        if (!label_index_.emplace(labels[v], v).second)
            throw DataError("duplicate vertex label '" + labels[v] + "'");
    labels_ = std::move(labels);
}

bool Graph::check_invariants() const {
    for (VertexId v = 0; v < vertex_count(); ++v) {
        auto nb = neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (nb[i] == v || nb[i] >= vertex_count())
                return false;
            if (i > 0 && nb[i - 1] >= nb[i])
                return false;
            if (!has_edge(nb[i], v))
                return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

Partition::Partition(std::vector<CommunityId> assignment) : assignment_(std::move(assignment)) {
    CommunityId slots = 0;
    for (CommunityId c : assignment_)
        slots = std::max(slots, c + 1);
    members_.resize(slots);
    position_.resize(assignment_.size());
    for (VertexId v = 0; v < assignment_.size(); ++v) {
        auto& list = members_[assignment_[v]];
        position_[v] = list.size();
        list.push_back(v);
    }
    nonempty_ = static_cast<std::size_t>(
        std::count_if(members_.begin(), members_.end(), [](const auto& m) { return !m.empty(); }));
}

Partition Partition::singletons(std::size_t n) {
    std::vector<CommunityId> a(n);
    std::iota(a.begin(), a.end(), CommunityId{0});
    return Partition(std::move(a));
}

Partition Partition::whole(std::size_t n) {
    return Partition(std::vector<CommunityId>(n, 0));
}

void Partition::move(VertexId v, CommunityId c) {
    CommunityId old = assignment_[v];
    if (old == c)
        return;
    if (c >= members_.size())
        members_.resize(c + 1);

    auto& from = members_[old];
    std::size_t pos = position_[v];
    VertexId last = from.back();
    from[pos] = last;
    position_[last] = pos;
    from.pop_back();
    if (from.empty())
        --nonempty_;

    auto& to = members_[c];
    if (to.empty())
        ++nonempty_;
    position_[v] = to.size();
    to.push_back(v);
    assignment_[v] = c;
}

void Partition::swap_members(VertexId u, VertexId v) {
    CommunityId cu = assignment_[u];
    CommunityId cv = assignment_[v];
    if (cu == cv)
        return;
    // Swap in place so neither community is ever transiently empty.
    members_[cu][position_[u]] = v;
    members_[cv][position_[v]] = u;
    std::swap(position_[u], position_[v]);
    assignment_[u] = cv;
    assignment_[v] = cu;
}

Partition Partition::canonical() const {
    std::vector<CommunityId> relabel(members_.size(), static_cast<CommunityId>(-1));
    std::vector<CommunityId> a(assignment_.size());
    CommunityId next = 0;
    for (VertexId v = 0; v < assignment_.size(); ++v) {
        CommunityId& r = relabel[assignment_[v]];
        if (r == static_cast<CommunityId>(-1))
            r = next++;
        a[v] = r;
    }
    Partition out(std::move(a));
    if (!community_labels_.empty()) {
        std::vector<std::string> labels(next);
        for (CommunityId c = 0; c < relabel.size(); ++c)
            if (relabel[c] != static_cast<CommunityId>(-1) && c < community_labels_.size())
                labels[relabel[c]] = community_labels_[c];
        out.community_labels_ = std::move(labels);
    }
    return out;
}

bool Partition::same_grouping(const Partition& other) const {
    return canonical().assignment_ == other.canonical().assignment_;
}

std::vector<std::size_t> Partition::sorted_sizes() const {
    std::vector<std::size_t> sizes;
    for (const auto& m : members_)
        if (!m.empty())
            sizes.push_back(m.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

std::string Partition::community_label(CommunityId c) const {
    if (c < community_labels_.size() && !community_labels_[c].empty())
        return community_labels_[c];
    return std::to_string(c);
}

bool Partition::check_invariants() const {
    std::size_t counted = 0, nonempty = 0;
    for (CommunityId c = 0; c < members_.size(); ++c) {
        if (!members_[c].empty())
            ++nonempty;
        for (std::size_t i = 0; i < members_[c].size(); ++i) {
            VertexId v = members_[c][i];
            if (v >= assignment_.size() || assignment_[v] != c || position_[v] != i)
                return false;
            ++counted;
        }
    }
    return counted == assignment_.size() && nonempty == nonempty_;
}

} // namespace perm
