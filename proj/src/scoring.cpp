#include "perm/scoring.hpp"

#include <algorithm>

namespace perm {

PermanenceBreakdown evaluate_permanence(const PermanenceCounts& c) {
    PermanenceBreakdown out;
    out.internal_degree = c.internal_degree;
    out.degree = c.degree;
    out.max_external = c.max_external;
    out.isolated = c.degree == 0;
    if (c.singleton)
        return out;

    if (c.internal_degree >= 2) {
        const double pairs = static_cast<double>(c.internal_degree) * static_cast<double>(c.internal_degree - 1) / 2.0;
        out.internal_cc = static_cast<double>(c.internal_edges) / pairs;
    }
    if (c.max_external == 0) {
        out.permanence = out.internal_cc;
        return out;
    }
    const double pull = static_cast<double>(c.internal_degree) /
                        (static_cast<double>(c.max_external) * static_cast<double>(c.degree));
    out.permanence = pull - (1.0 - out.internal_cc);
    if (out.permanence <= -1.0) {
        out.permanence = kPermanenceFloor;
        out.clamped = true;
    }
    return out;
}

namespace {

struct Scratch {
    std::vector<VertexId> internal;
    std::vector<CommunityId> external;
};

Scratch& scratch() {
    thread_local Scratch s;
    return s;
}

// Size of the intersection of two ascending ranges.
std::size_t intersection_size(std::span<const VertexId> a, std::span<const VertexId> b) {
    std::size_t i = 0, j = 0, n = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (b[j] < a[i])
            ++j;
        else {
            ++n;
            ++i;
            ++j;
        }
    }
    return n;
}

} // namespace

PermanenceCounts permanence_counts(const Graph& graph, const Partition& partition, VertexId v) {
    auto& s = scratch();
    s.internal.clear();
    s.external.clear();
    const CommunityId own = partition.community_of(v);
    for (VertexId u : graph.neighbors(v)) {
        CommunityId cu = partition.community_of(u);
        if (cu == own)
            s.internal.push_back(u);
        else
            s.external.push_back(cu);
    }

    PermanenceCounts c;
    c.degree = graph.degree(v);
    c.internal_degree = s.internal.size();
    c.singleton = partition.size_of(own) == 1;

    std::sort(s.external.begin(), s.external.end());
    for (std::size_t i = 0; i < s.external.size();) {
        std::size_t j = i;
        while (j < s.external.size() && s.external[j] == s.external[i])
            ++j;
        c.max_external = std::max(c.max_external, j - i);
        i = j;
    }

    if (c.internal_degree >= 2) {
        std::size_t twice = 0;
        for (VertexId u : s.internal)
            twice += intersection_size(graph.neighbors(u), s.internal);
        c.internal_edges = twice / 2;
    }
    return c;
}

PermanenceBreakdown vertex_permanence(const Graph& graph, const Partition& partition, VertexId v) {
    PermanenceBreakdown b = evaluate_permanence(permanence_counts(graph, partition, v));
    b.vertex = v;
    return b;
}

std::vector<PermanenceBreakdown> permanence_breakdown(const Graph& graph, const Partition& partition) {
    const auto n = static_cast<std::int64_t>(graph.vertex_count());
    std::vector<PermanenceBreakdown> out(graph.vertex_count());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t v = 0; v < n; ++v)
        out[v] = vertex_permanence(graph, partition, static_cast<VertexId>(v));
    return out;
}

std::vector<double> vertex_permanences(const Graph& graph, const Partition& partition) {
    const auto n = static_cast<std::int64_t>(graph.vertex_count());
    std::vector<double> out(graph.vertex_count());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t v = 0; v < n; ++v)
        out[v] = vertex_permanence(graph, partition, static_cast<VertexId>(v)).permanence;
    return out;
}

namespace {
double mean_in_order(const std::vector<double>& values) {
    double sum = 0.0;
    for (double x : values)
        sum += x;
    return sum / static_cast<double>(values.size());
}
} // namespace

double graph_permanence(const Graph& graph, const Partition& partition) {
    if (graph.vertex_count() == 0)
        throw DataError("permanence of an empty graph is undefined");
    return mean_in_order(vertex_permanences(graph, partition));
}

namespace serial {

std::vector<double> vertex_permanences(const Graph& graph, const Partition& partition) {
    std::vector<double> out(graph.vertex_count());
    for (VertexId v = 0; v < graph.vertex_count(); ++v)
        out[v] = vertex_permanence(graph, partition, v).permanence;
    return out;
}

double graph_permanence(const Graph& graph, const Partition& partition) {
    if (graph.vertex_count() == 0)
        throw DataError("permanence of an empty graph is undefined");
    return mean_in_order(serial::vertex_permanences(graph, partition));
}

} // namespace serial

double modularity(const Graph& graph, const Partition& partition) {
    const std::size_t m = graph.edge_count();
    if (m == 0)
        throw DataError("modularity of an edgeless graph is undefined");
    std::vector<double> internal(partition.slot_count(), 0.0);
    std::vector<double> volume(partition.slot_count(), 0.0);
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        const CommunityId c = partition.community_of(v);
        volume[c] += static_cast<double>(graph.degree(v));
        for (VertexId u : graph.neighbors(v))
            if (partition.community_of(u) == c)
                internal[c] += 1.0; // each internal edge counted from both ends
    }
    const double two_m = 2.0 * static_cast<double>(m);
    double q = 0.0;
    for (std::size_t c = 0; c < internal.size(); ++c)
        q += internal[c] / two_m - (volume[c] / two_m) * (volume[c] / two_m);
    return q;
}

namespace {

struct CutCounts {
    std::size_t boundary = 0;
    std::size_t volume = 0;
};

CutCounts cut_counts(const Graph& graph, const Partition& partition, CommunityId c) {
    CutCounts out;
    for (VertexId v : partition.members(c)) {
        out.volume += graph.degree(v);
        for (VertexId u : graph.neighbors(v))
            if (partition.community_of(u) != c)
                ++out.boundary;
    }
    return out;
}

} // namespace

CommunityScore conductance(const Graph& graph, const Partition& partition, CommunityId community) {
    const CutCounts cc = cut_counts(graph, partition, community);
    const std::size_t rest = 2 * graph.edge_count() - cc.volume;
    const std::size_t denom = std::min(cc.volume, rest);
    if (denom == 0)
        return {0.0, true};
    return {static_cast<double>(cc.boundary) / static_cast<double>(denom), false};
}

CommunityScore cut_ratio(const Graph& graph, const Partition& partition, CommunityId community) {
    const std::size_t ns = partition.size_of(community);
    const std::size_t n = graph.vertex_count();
    if (ns == 0 || ns == n)
        return {0.0, true};
    const CutCounts cc = cut_counts(graph, partition, community);
    return {static_cast<double>(cc.boundary) / (static_cast<double>(ns) * static_cast<double>(n - ns)), false};
}

ScoreReport score_report(const Graph& graph, const Partition& partition, Aggregation aggregation) {
    ScoreReport r;
    r.modularity = modularity(graph, partition);
    r.graph_permanence = graph_permanence(graph, partition);

    double con = 0.0, cut = 0.0, weight_total = 0.0;
    for (CommunityId c = 0; c < partition.slot_count(); ++c) {
        if (partition.size_of(c) == 0)
            continue;
        const CommunityScore phi = conductance(graph, partition, c);
        const CommunityScore theta = cut_ratio(graph, partition, c);
        if (phi.degenerate || theta.degenerate)
            ++r.degenerate_communities;
        const double w = aggregation == Aggregation::unweighted ? 1.0 : static_cast<double>(partition.size_of(c));
        con += w * (1.0 - phi.value);
        cut += w * (1.0 - theta.value);
        weight_total += w;
    }
    r.mean_conductance_complement = con / weight_total;
    r.mean_cutratio_complement = cut / weight_total;
    return r;
}

} // namespace perm
