#include "perm/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>

#include "perm/rng.hpp"
#include "perm/scoring.hpp"
#include "perm/stats.hpp"

namespace perm {

std::size_t permanence_bin(double permanence) {
    const double x = std::floor((permanence + 1.0) * 10.0 + 1e-9);
    if (x <= 0.0)
        return 0;
    return std::min<std::size_t>(static_cast<std::size_t>(x), kPermanenceBins - 1);
}

double bin_lower_edge(std::size_t bin) { return -1.0 + 0.1 * static_cast<double>(bin); }

BinnedDistribution permanence_histogram(const Graph& graph, const Partition& partition) {
    if (graph.vertex_count() == 0)
        throw DataError("histogram of an empty graph is undefined");
    BinnedDistribution out;
    for (double p : vertex_permanences(graph, partition))
        ++out.counts[permanence_bin(p)];
    const auto n = static_cast<double>(graph.vertex_count());
    for (std::size_t b = 0; b < kPermanenceBins; ++b)
        out.fractions[b] = static_cast<double>(out.counts[b]) / n;
    return out;
}

std::vector<ComponentBin> component_profile(const Graph& graph, const Partition& partition) {
    if (graph.vertex_count() == 0)
        throw DataError("component profile of an empty graph is undefined");
    std::vector<ComponentBin> rows(kPermanenceBins);
    for (std::size_t b = 0; b < kPermanenceBins; ++b)
        rows[b].bin = b;
    for (const auto& r : permanence_breakdown(graph, partition)) {
        ComponentBin& row = rows[permanence_bin(r.permanence)];
        ++row.vertices;
        row.internal_degree += static_cast<double>(r.internal_degree);
        row.degree += static_cast<double>(r.degree);
        row.max_external += static_cast<double>(r.max_external);
        if (r.degree > 0)
            row.combined += static_cast<double>(r.internal_degree) /
                            (static_cast<double>(r.degree) * static_cast<double>(std::max<std::size_t>(r.max_external, 1)));
        row.internal_cc += r.internal_cc;
    }
    for (auto& row : rows) {
        if (row.vertices == 0)
            continue;
        const auto k = static_cast<double>(row.vertices);
        row.internal_degree /= k;
        row.degree /= k;
        row.max_external /= k;
        row.combined /= k;
        row.internal_cc /= k;
    }
    return rows;
}

std::vector<std::size_t> dense_rank(std::span<const double> values) {
    std::vector<double> distinct(values.begin(), values.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<std::size_t> ranks(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        ranks[i] = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), values[i]) -
                                            distinct.begin()) + 1;
    return ranks;
}

double edge_density(const Graph& graph, std::span<const VertexId> members) {
    if (members.size() < 2)
        return 0.0;
    std::vector<char> in(graph.vertex_count(), 0);
    for (VertexId v : members)
        in[v] = 1;
    std::size_t twice = 0;
    for (VertexId v : members)
        for (VertexId u : graph.neighbors(v))
            twice += in[u];
    const auto s = static_cast<double>(members.size());
    return static_cast<double>(twice / 2) / (s * (s - 1.0) / 2.0);
}

std::vector<StrengthenRow> strengthen(const Graph& graph, const Partition& partition,
                                      std::span<const double> removal_fractions) {
    const auto perm = vertex_permanences(graph, partition);
    const auto rank = dense_rank(perm);

    std::vector<StrengthenRow> rows;
    for (double f : removal_fractions) {
        if (!(f >= 0.0 && f <= 0.5))
            throw DataError("removal fractions must lie in [0, 0.5]");
        StrengthenRow row;
        row.fraction = f;
        std::vector<double> changes;
        for (CommunityId c = 0; c < partition.slot_count(); ++c) {
            std::vector<VertexId> members(partition.members(c).begin(), partition.members(c).end());
            if (members.empty())
                continue;
            std::sort(members.begin(), members.end(), [&](VertexId a, VertexId b) {
                return rank[a] != rank[b] ? rank[a] < rank[b] : a < b;
            });
            const auto drop = static_cast<std::size_t>(std::floor(f * static_cast<double>(members.size()) + 1e-9));
            row.removed += drop;
            const double before = edge_density(graph, members);
            std::span<const VertexId> kept(members.data() + drop, members.size() - drop);
            if (before == 0.0 || kept.size() < 2)
                continue;
            changes.push_back(100.0 * (edge_density(graph, kept) - before) / before);
        }
        row.communities = changes.size();
        row.mean_change_percent = mean(changes);
        row.variance_change_percent = variance(changes);
        rows.push_back(row);
    }
    return rows;
}

std::vector<double> farness(const Graph& graph, const Partition& partition) {
    const std::size_t n = graph.vertex_count();
    std::vector<double> out(n, std::numeric_limits<double>::quiet_NaN());
    std::vector<std::size_t> dist(n, 0);
    std::vector<std::uint32_t> seen(n, 0);
    std::uint32_t epoch = 0;
    std::deque<VertexId> queue;
    for (VertexId s = 0; s < n; ++s) {
        const CommunityId c = partition.community_of(s);
        ++epoch;
        seen[s] = epoch;
        dist[s] = 0;
        queue.assign(1, s);
        std::size_t total = 0, reached = 0;
        while (!queue.empty()) {
            const VertexId x = queue.front();
            queue.pop_front();
            for (VertexId y : graph.neighbors(x)) {
                if (seen[y] == epoch || partition.community_of(y) != c)
                    continue;
                seen[y] = epoch;
                dist[y] = dist[x] + 1;
                total += dist[y];
                ++reached;
                queue.push_back(y);
            }
        }
        if (reached > 0)
            out[s] = static_cast<double>(total) / static_cast<double>(reached);
    }
    return out;
}

FarnessProfile farness_profile(const Graph& graph, const Partition& partition, double bin_width) {
    if (!(bin_width > 0.0))
        throw DataError("farness bin width must be positive");
    FarnessProfile out;
    const auto d = farness(graph, partition);
    const auto perm = vertex_permanences(graph, partition);
    std::map<std::size_t, std::pair<std::size_t, double>> acc;
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        if (std::isnan(d[v])) {
            ++out.unreachable;
            continue;
        }
        out.vertex_farness.push_back(d[v]);
        out.vertex_permanence.push_back(perm[v]);
        const auto k = static_cast<std::size_t>(std::floor((d[v] - 1.0) / bin_width + 1e-9));
        auto& slot = acc[k];
        ++slot.first;
        slot.second += perm[v];
    }
    for (const auto& [k, slot] : acc) {
        FarnessBin b;
        b.lower = 1.0 + bin_width * static_cast<double>(k);
        b.upper = b.lower + bin_width;
        b.vertices = slot.first;
        b.mean_permanence = slot.second / static_cast<double>(slot.first);
        out.bins.push_back(b);
    }
    return out;
}

double scalar_assortativity(std::span<const std::pair<VertexId, VertexId>> edges, std::span<const double> attribute) {
    std::vector<double> x, y;
    x.reserve(2 * edges.size());
    y.reserve(2 * edges.size());
    for (auto [u, v] : edges) {
        x.push_back(attribute[u]);
        y.push_back(attribute[v]);
        x.push_back(attribute[v]);
        y.push_back(attribute[u]);
    }
    if (variance(x) == 0.0)
        return std::numeric_limits<double>::quiet_NaN();
    return pearson(x, y);
}

AssortativityReport permanence_assortativity(const Graph& graph, const Partition& partition) {
    const auto perm = vertex_permanences(graph, partition);
    std::vector<double> bin(graph.vertex_count()), degree(graph.vertex_count());
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        bin[v] = static_cast<double>(permanence_bin(perm[v]));
        degree[v] = static_cast<double>(graph.degree(v));
    }

    AssortativityReport out;
    double sum_perm = 0.0, sum_degree = 0.0;
    std::vector<std::pair<VertexId, VertexId>> internal;
    for (CommunityId c = 0; c < partition.slot_count(); ++c) {
        if (partition.size_of(c) == 0)
            continue;
        internal.clear();
        for (VertexId v : partition.members(c))
            for (VertexId u : graph.neighbors(v))
                if (v < u && partition.community_of(u) == c)
                    internal.emplace_back(v, u);
        const double rp = internal.empty() ? std::numeric_limits<double>::quiet_NaN()
                                           : scalar_assortativity(internal, bin);
        const double rd = internal.empty() ? std::numeric_limits<double>::quiet_NaN()
                                           : scalar_assortativity(internal, degree);
        if (std::isnan(rp)) {
            ++out.skipped_permanence;
        } else {
            ++out.used_permanence;
            sum_perm += rp;
        }
        if (std::isnan(rd)) {
            ++out.skipped_degree;
        } else {
            ++out.used_degree;
            sum_degree += rd;
        }
    }
    const double nan = std::numeric_limits<double>::quiet_NaN();
    out.r_permanence = out.used_permanence > 0 ? sum_perm / static_cast<double>(out.used_permanence) : nan;
    out.r_degree = out.used_degree > 0 ? sum_degree / static_cast<double>(out.used_degree) : nan;
    return out;
}

std::size_t overlap_bucket(double weight) {
    const double tenths = std::floor(weight * 10.0 + 1e-9);
    if (tenths >= 9.0)
        return 0;
    if (tenths <= 0.0)
        return 9;
    return 9 - static_cast<std::size_t>(tenths);
}

OverlapReport bipartite_overlap(const Partition& detected, const Partition& truth) {
    if (detected.vertex_count() != truth.vertex_count())
        throw DataError("partitions cover different vertex counts");
    std::map<std::pair<CommunityId, CommunityId>, std::size_t> joint;
    for (VertexId v = 0; v < detected.vertex_count(); ++v)
        ++joint[{detected.community_of(v), truth.community_of(v)}];
    OverlapReport out;
    for (const auto& [key, count] : joint) {
        OverlapEdge e;
        e.detected = key.first;
        e.truth = key.second;
        e.weight = static_cast<double>(count) / static_cast<double>(detected.size_of(key.first));
        out.edges.push_back(e);
        ++out.bucket_counts[overlap_bucket(e.weight)];
    }
    for (std::size_t b = 0; b < out.bucket_counts.size(); ++b)
        out.bucket_fractions[b] =
            out.edges.empty() ? 0.0 : static_cast<double>(out.bucket_counts[b]) / static_cast<double>(out.edges.size());
    return out;
}

SizeDiagnostics size_diagnostics(const Partition& detected, const Partition& truth) {
    if (detected.vertex_count() != truth.vertex_count())
        throw DataError("partitions cover different vertex counts");
    if (detected.vertex_count() == 0)
        throw DataError("size diagnostics need a nonempty partition");
    SizeDiagnostics out;
    out.detected_sizes = detected.sorted_sizes();
    out.truth_sizes = truth.sorted_sizes();
    std::reverse(out.detected_sizes.begin(), out.detected_sizes.end());
    std::reverse(out.truth_sizes.begin(), out.truth_sizes.end());

    CommunityId largest = 0;
    for (CommunityId c = 1; c < detected.slot_count(); ++c)
        if (detected.size_of(c) > detected.size_of(largest))
            largest = c;
    std::map<CommunityId, std::size_t> shared;
    for (VertexId v : detected.members(largest))
        ++shared[truth.community_of(v)];
    for (const auto& [t, inter] : shared) {
        const double uni = static_cast<double>(detected.size_of(largest) + truth.size_of(t) - inter);
        out.largest_jaccard = std::max(out.largest_jaccard, static_cast<double>(inter) / uni);
    }
    return out;
}

std::string to_string(InitiatorSelector s) {
    switch (s) {
    case InitiatorSelector::random:
        return "random";
    case InitiatorSelector::degree:
        return "degree";
    case InitiatorSelector::permanence:
        return "permanence";
    }
    return "?";
}

InitiatorSelector parse_initiator_selector(const std::string& name) {
    if (name == "random")
        return InitiatorSelector::random;
    if (name == "degree")
        return InitiatorSelector::degree;
    if (name == "permanence")
        return InitiatorSelector::permanence;
    throw DataError("unknown initiator selector '" + name + "'");
}

std::vector<VertexId> select_initiators(const Graph& graph, const Partition& truth, InitiatorSelector selector,
                                        std::uint64_t rng_seed) {
    std::vector<double> key;
    if (selector == InitiatorSelector::permanence) {
        key = vertex_permanences(graph, truth);
    } else if (selector == InitiatorSelector::degree) {
        key.resize(graph.vertex_count());
        for (VertexId v = 0; v < graph.vertex_count(); ++v)
            key[v] = static_cast<double>(graph.degree(v));
    }
    Rng rng(derive_seed(rng_seed, "initiators"));
    std::vector<VertexId> out;
    for (CommunityId c = 0; c < truth.slot_count(); ++c) {
        const auto members = truth.members(c);
        if (members.empty())
            continue;
        if (selector == InitiatorSelector::random) {
            out.push_back(members[uniform_index(rng, members.size())]);
            continue;
        }
        VertexId best = members[0];
        for (VertexId v : members)
            if (key[v] > key[best] || (key[v] == key[best] && v < best))
                best = v;
        out.push_back(best);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t spread_once(const Graph& graph, std::span<const VertexId> initiators, std::uint64_t rng_seed) {
    const std::size_t n = graph.vertex_count();
    std::vector<char> informed(n, 0);
    std::vector<VertexId> active;
    for (VertexId v : initiators)
        if (!informed[v]) {
            informed[v] = 1;
            active.push_back(v);
        }

    Rng rng(rng_seed);
    std::vector<VertexId> candidates, targets;
    std::size_t rounds = 0;
    for (;;) {
        targets.clear();
        for (VertexId u : active) {
            candidates.clear();
            for (VertexId w : graph.neighbors(u))
                if (!informed[w])
                    candidates.push_back(w);
            if (!candidates.empty())
                targets.push_back(candidates[uniform_index(rng, candidates.size())]);
        }
        if (targets.empty())
            return rounds;
        ++rounds;
        for (VertexId t : targets)
            if (!informed[t]) {
                informed[t] = 1;
                active.push_back(t);
            }
    }
}

namespace {

std::size_t reachable_count(const Graph& graph, std::span<const VertexId> sources) {
    std::vector<char> seen(graph.vertex_count(), 0);
    std::deque<VertexId> queue;
    for (VertexId s : sources)
        if (!seen[s]) {
            seen[s] = 1;
            queue.push_back(s);
        }
    std::size_t count = queue.size();
    while (!queue.empty()) {
        const VertexId x = queue.front();
        queue.pop_front();
        for (VertexId y : graph.neighbors(x))
            if (!seen[y]) {
                seen[y] = 1;
                ++count;
                queue.push_back(y);
            }
    }
    return count;
}

} // namespace

SpreadResult spreading_simulation(const Graph& graph, const Partition& truth, InitiatorSelector selector,
                                  std::size_t runs, std::uint64_t rng_seed) {
    if (runs == 0)
        throw DataError("spreading needs at least one run");
    if (graph.vertex_count() == 0)
        throw DataError("spreading on an empty graph is undefined");
    SpreadResult out;
    out.rounds.assign(runs, 0);
    std::vector<VertexId> fixed;
    if (selector != InitiatorSelector::random)
        fixed = select_initiators(graph, truth, selector, rng_seed);

    std::vector<std::size_t> reach(runs, 0);
    const auto count = static_cast<std::int64_t>(runs);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t r = 0; r < count; ++r) {
        const auto run = static_cast<std::uint64_t>(r);
        std::vector<VertexId> initiators =
            selector == InitiatorSelector::random
                ? select_initiators(graph, truth, selector, derive_seed(rng_seed, "spread_initiators", {run}))
                : fixed;
        out.rounds[r] = spread_once(graph, initiators, derive_seed(rng_seed, "spread", {run}));
        reach[r] = reachable_count(graph, initiators);
    }

    double total = 0.0;
    for (std::size_t r = 0; r < runs; ++r) {
        total += static_cast<double>(out.rounds[r]);
        out.reachable = std::max(out.reachable, reach[r]);
        if (reach[r] < graph.vertex_count())
            out.full_coverage = false;
    }
    out.mean_rounds = total / static_cast<double>(runs);
    return out;
}

std::vector<GrowthRow> asymptotic_growth_study(std::span<const std::size_t> block_counts,
                                               const PlantedPartition& base, std::uint64_t rng_seed,
                                               bool hold_external_degree, std::size_t replicates) {
    if (block_counts.empty())
        throw DataError("growth study needs at least one size");
    if (replicates == 0)
        throw DataError("growth study needs at least one replicate");
    const std::size_t b0 = block_counts.front();
    std::vector<GrowthRow> rows;
    for (std::size_t b : block_counts) {
        if (b < 2)
            throw DataError("growth study needs at least two blocks per size");
        PlantedPartition spec = base;
        spec.blocks = b;
        if (hold_external_degree)
            spec.p_out = base.p_out * static_cast<double>(b0 - 1) / static_cast<double>(b - 1);
        validate(spec);

        GrowthRow row;
        row.blocks = b;
        row.vertices = b * base.block_size;
        row.p_out = spec.p_out;
        const double scale = 1.0 / static_cast<double>(replicates * row.vertices);
        for (std::size_t r = 0; r < replicates; ++r) {
            spec.rng_seed = derive_seed(rng_seed, "growth", {b, r});
            const auto gen = generate(spec);
            row.modularity += modularity(gen.graph, gen.truth) / static_cast<double>(replicates);
            row.permanence += graph_permanence(gen.graph, gen.truth) / static_cast<double>(replicates);
            for (const auto& v : permanence_breakdown(gen.graph, gen.truth)) {
                row.mean_internal_degree += static_cast<double>(v.internal_degree) * scale;
                row.mean_external_degree += static_cast<double>(v.degree - v.internal_degree) * scale;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace perm
