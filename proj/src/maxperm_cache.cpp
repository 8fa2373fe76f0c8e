#include <algorithm>

#include "perm/maxperm.hpp"

namespace perm {

namespace {

using Entries = std::vector<std::pair<CommunityId, std::uint32_t>>;

void bump(Entries& e, CommunityId c, int delta) {
    auto it = std::lower_bound(e.begin(), e.end(), c, [](const auto& x, CommunityId k) { return x.first < k; });
    if (it != e.end() && it->first == c) {
        it->second = static_cast<std::uint32_t>(static_cast<int>(it->second) + delta);
        if (it->second == 0)
            e.erase(it);
    } else {
        e.insert(it, {c, static_cast<std::uint32_t>(delta)});
    }
}

std::size_t lookup(const Entries& e, CommunityId c) {
    auto it = std::lower_bound(e.begin(), e.end(), c, [](const auto& x, CommunityId k) { return x.first < k; });
    return it != e.end() && it->first == c ? it->second : 0;
}

// Largest count among communities other than `own`, after adjusting the
// counts of `from` by -1 and `to` by +1 (pass from == to for no adjustment).
std::size_t max_external(const Entries& e, CommunityId own, CommunityId from, CommunityId to) {
    std::size_t best = 0;
    bool saw_to = false;
    for (const auto& [c, cnt] : e) {
        std::size_t x = cnt;
        if (from != to) {
            if (c == from)
                --x;
            if (c == to) {
                ++x;
                saw_to = true;
            }
        }
        if (c != own)
            best = std::max(best, x);
    }
    if (from != to && !saw_to && to != own)
        best = std::max<std::size_t>(best, 1);
    return best;
}

Entries recount_entries(const Graph& g, const Partition& p, VertexId v) {
    Entries e;
    for (VertexId u : g.neighbors(v))
        bump(e, p.community_of(u), +1);
    return e;
}

} // namespace

CommunityEdgeCache::CommunityEdgeCache(const Graph& graph, const Partition& partition)
    : graph_(&graph), partition_(&partition), counts_(graph.vertex_count()), internal_edges_(graph.vertex_count()) {
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        counts_[v] = recount_entries(graph, partition, v);
        internal_edges_[v] = permanence_counts(graph, partition, v).internal_edges;
    }
}

std::size_t CommunityEdgeCache::edges_to(VertexId v, CommunityId c) const { return lookup(counts_[v], c); }

PermanenceCounts CommunityEdgeCache::counts(VertexId v) const {
    const CommunityId own = partition_->community_of(v);
    PermanenceCounts c;
    c.degree = graph_->degree(v);
    c.internal_degree = lookup(counts_[v], own);
    c.max_external = max_external(counts_[v], own, own, own);
    c.internal_edges = internal_edges_[v];
    c.singleton = partition_->size_of(own) == 1;
    return c;
}

std::string CommunityEdgeCache::audit() const {
    for (VertexId v = 0; v < graph_->vertex_count(); ++v) {
        if (counts_[v] != recount_entries(*graph_, *partition_, v))
            return "community edge counts of vertex " + std::to_string(v) + " are stale";
        std::size_t total = 0;
        for (const auto& [c, cnt] : counts_[v])
            total += cnt;
        if (total != graph_->degree(v))
            return "community edge counts of vertex " + std::to_string(v) + " do not sum to its degree";
        if (internal_edges_[v] != permanence_counts(*graph_, *partition_, v).internal_edges)
            return "internal edge count of vertex " + std::to_string(v) + " is stale";
    }
    return {};
}

/// Evaluates tentative moves against the cache and applies committed ones.
class CachedDetector {
public:
    CachedDetector(const Graph& g, Partition& p) : g_(g), p_(p), cache_(g, p), stamp_(g.vertex_count(), 0) {}

    const CommunityEdgeCache& cache() const { return cache_; }

    double permanence(VertexId v) const { return evaluate_permanence(cache_.counts(v)).permanence; }

    double neighbour_sum(VertexId v) const {
        double s = 0.0;
        for (VertexId u : g_.neighbors(v))
            s += permanence(u);
        return s;
    }

    struct Tentative {
        double vertex = 0.0;
        double neighbours = 0.0;
        std::size_t vertex_internal_edges = 0;
    };

    // Permanence of v and of its neighbours if v moved to `to`.
    Tentative evaluate(VertexId v, CommunityId to) {
        mark_neighbours(v);
        const CommunityId from = p_.community_of(v);
        Tentative t;

        PermanenceCounts cv;
        cv.degree = g_.degree(v);
        cv.internal_degree = lookup(cache_.counts_[v], to);
        cv.max_external = max_external(cache_.counts_[v], to, to, to);
        cv.internal_edges = common_in(v, to, [&](VertexId u) { return p_.community_of(u) == to; });
        cv.singleton = false;
        t.vertex_internal_edges = cv.internal_edges;
        t.vertex = evaluate_permanence(cv).permanence;

        for (VertexId u : g_.neighbors(v)) {
            const CommunityId cu = p_.community_of(u);
            PermanenceCounts c;
            c.degree = g_.degree(u);
            c.internal_degree = lookup(cache_.counts_[u], cu);
            c.internal_edges = cache_.internal_edges_[u];
            std::size_t size = p_.size_of(cu);
            if (cu == from) {
                c.internal_degree -= 1;
                c.internal_edges -= shared_in(u, from);
                size -= 1;
            } else if (cu == to) {
                c.internal_degree += 1;
                c.internal_edges += shared_in(u, to);
                size += 1;
            }
            c.max_external = max_external(cache_.counts_[u], cu, from, to);
            c.singleton = size == 1;
            t.neighbours += evaluate_permanence(c).permanence;
        }
        return t;
    }

    void commit(VertexId v, CommunityId to, std::size_t vertex_internal_edges) {
        mark_neighbours(v);
        const CommunityId from = p_.community_of(v);
        for (VertexId u : g_.neighbors(v)) {
            const CommunityId cu = p_.community_of(u);
            if (cu == from)
                cache_.internal_edges_[u] -= shared_in(u, from);
            else if (cu == to)
                cache_.internal_edges_[u] += shared_in(u, to);
            bump(cache_.counts_[u], from, -1);
            bump(cache_.counts_[u], to, +1);
        }
        cache_.internal_edges_[v] = vertex_internal_edges;
        p_.move(v, to);
    }

private:
    void mark_neighbours(VertexId v) {
        if (marked_ == v && marked_valid_)
            return;
        ++epoch_;
        for (VertexId u : g_.neighbors(v))
            stamp_[u] = epoch_;
        marked_ = v;
        marked_valid_ = true;
    }

    // Common neighbours of u and the marked vertex that lie in community c.
    std::size_t shared_in(VertexId u, CommunityId c) const {
        std::size_t n = 0;
        for (VertexId w : g_.neighbors(u))
            if (stamp_[w] == epoch_ && p_.community_of(w) == c)
                ++n;
        return n;
    }

    // Edges among the marked vertex's neighbours that satisfy `in`.
    template <typename Pred>
    std::size_t common_in(VertexId v, CommunityId c, Pred in) const {
        std::size_t twice = 0;
        for (VertexId u : g_.neighbors(v))
            if (in(u))
                twice += shared_in(u, c);
        return twice / 2;
    }

    const Graph& g_;
    Partition& p_;
    CommunityEdgeCache cache_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
    VertexId marked_ = 0;
    bool marked_valid_ = false;
};

DetectionResult detect_with_cache(const Graph& graph, const DetectorConfig& config, const CacheObserver& observer) {
    if (graph.vertex_count() == 0)
        throw DataError("cannot detect communities in an empty graph");
    const auto order = resolve_order(graph, config);

    DetectionResult result;
    Partition p = seed(graph, config.seed_strategy, order);
    result.permanence_history.push_back(graph_permanence(graph, p));
    CachedDetector det(graph, p);

    std::vector<CommunityId> candidates;
    double sum = 0.0;
    double old_sum = -1.0;
    while (sum != old_sum && result.iterations < config.max_iterations) {
        ++result.iterations;
        old_sum = sum;
        sum = 0.0;
        for (VertexId v : order) {
            double cur = det.permanence(v);
            if (cur == 1.0) {
                sum += cur;
                continue;
            }
            const double cur_neighbours = det.neighbour_sum(v);

            const CommunityId own = p.community_of(v);
            candidates.clear();
            for (const auto& [c, cnt] : det.cache().entries(v))
                if (c != own)
                    candidates.push_back(c);

            std::optional<CommunityId> target;
            std::size_t target_edges = 0;
            for (CommunityId c : candidates) {
                const auto t = det.evaluate(v, c);
                const bool accept = t.vertex > cur && (config.acceptance == AcceptanceRule::vertex_only ||
                                                       t.neighbours > cur_neighbours);
                if (accept) {
                    cur = t.vertex;
                    target = c;
                    target_edges = t.vertex_internal_edges;
                    if (config.scan == CandidateScan::first_improvement)
                        break;
                }
            }
            if (target) {
                det.commit(v, *target, target_edges);
                ++result.moves;
                if (observer)
                    observer(det.cache(), p, v);
            }
            sum += cur;
        }
        result.permanence_history.push_back(graph_permanence(graph, p));
    }

    result.permanence = result.permanence_history.back();
    result.partition = std::move(p);
    return result;
}

} // namespace perm
