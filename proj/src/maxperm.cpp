#include "perm/maxperm.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "perm/rng.hpp"

namespace perm {

std::vector<VertexId> resolve_order(const Graph& graph, const DetectorConfig& config) {
    if (config.max_iterations == 0)
        throw DataError("max_iterations must be at least 1");
    const std::size_t n = graph.vertex_count();
    if (config.vertex_order) {
        const auto& order = *config.vertex_order;
        std::vector<char> seen(n, 0);
        if (order.size() != n)
            throw DataError("vertex order must list every vertex exactly once");
        for (VertexId v : order) {
            if (v >= n || seen[v])
                throw DataError("vertex order must list every vertex exactly once");
            seen[v] = 1;
        }
        return order;
    }
    if (config.shuffle_order)
        return random_order(n, derive_seed(config.rng_seed, "vertex_order"));
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), VertexId{0});
    return order;
}

std::vector<double> local_clustering(const Graph& graph) {
    std::vector<double> cc(graph.vertex_count(), 0.0);
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        const auto nb = graph.neighbors(v);
        if (nb.size() < 2)
            continue;
        std::size_t twice = 0;
        for (VertexId u : nb) {
            const auto nu = graph.neighbors(u);
            std::size_t i = 0, j = 0;
            while (i < nu.size() && j < nb.size()) {
                if (nu[i] < nb[j])
                    ++i;
                else if (nb[j] < nu[i])
                    ++j;
                else {
                    ++twice;
                    ++i;
                    ++j;
                }
            }
        }
        const double pairs = static_cast<double>(nb.size()) * static_cast<double>(nb.size() - 1);
        cc[v] = static_cast<double>(twice) / pairs;
    }
    return cc;
}

Partition seed(const Graph& graph, SeedStrategy strategy, std::span<const VertexId> order_in) {
    const std::size_t n = graph.vertex_count();
    std::vector<VertexId> order(order_in.begin(), order_in.end());
    if (order.empty()) {
        order.resize(n);
        std::iota(order.begin(), order.end(), VertexId{0});
    }

    constexpr CommunityId unset = static_cast<CommunityId>(-1);
    std::vector<CommunityId> assignment(n, unset);
    CommunityId next = 0;

    if (strategy == SeedStrategy::pair_wise) {
        for (VertexId v : order) {
            if (assignment[v] != unset)
                continue;
            assignment[v] = next;
            for (VertexId u : graph.neighbors(v))
                if (assignment[u] == unset) {
                    assignment[u] = next;
                    break;
                }
            ++next;
        }
        return Partition(std::move(assignment));
    }

    // Sweep by decreasing key; stable sort keeps `order` as the tie-break.
    std::vector<double> key(n);
    if (strategy == SeedStrategy::high_degree)
        for (VertexId v = 0; v < n; ++v)
            key[v] = static_cast<double>(graph.degree(v));
    else
        key = local_clustering(graph);
    std::stable_sort(order.begin(), order.end(), [&key](VertexId a, VertexId b) { return key[a] > key[b]; });

    for (VertexId v : order) {
        if (assignment[v] != unset)
            continue;
        assignment[v] = next;
        for (VertexId u : graph.neighbors(v))
            if (assignment[u] == unset)
                assignment[u] = next;
        ++next;
    }
    return Partition(std::move(assignment));
}

namespace {

std::vector<CommunityId> neighbouring_communities(const Graph& graph, const Partition& p, VertexId v) {
    std::vector<CommunityId> out;
    const CommunityId own = p.community_of(v);
    for (VertexId u : graph.neighbors(v))
        if (p.community_of(u) != own)
            out.push_back(p.community_of(u));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double neighbour_sum(const Graph& graph, const Partition& p, VertexId v) {
    double s = 0.0;
    for (VertexId u : graph.neighbors(v))
        s += vertex_permanence(graph, p, u).permanence;
    return s;
}

} // namespace

DetectionResult detect(const Graph& graph, const DetectorConfig& config, const CommitObserver& observer) {
    if (graph.vertex_count() == 0)
        throw DataError("cannot detect communities in an empty graph");
    const auto order = resolve_order(graph, config);

    DetectionResult result;
    Partition p = seed(graph, config.seed_strategy, order);
    result.permanence_history.push_back(graph_permanence(graph, p));

    double sum = 0.0;
    double old_sum = -1.0;
    while (sum != old_sum && result.iterations < config.max_iterations) {
        ++result.iterations;
        old_sum = sum;
        sum = 0.0;
        for (VertexId v : order) {
            double cur = vertex_permanence(graph, p, v).permanence;
            if (cur == 1.0) {
                sum += cur;
                continue;
            }
            const double cur_neighbours = neighbour_sum(graph, p, v);
            const CommunityId origin = p.community_of(v);
            std::optional<CommunityId> target;
            for (CommunityId c : neighbouring_communities(graph, p, v)) {
                p.move(v, c);
                const double np = vertex_permanence(graph, p, v).permanence;
                const bool accept =
                    np > cur && (config.acceptance == AcceptanceRule::vertex_only ||
                                 neighbour_sum(graph, p, v) > cur_neighbours);
                p.move(v, origin);
                if (accept) {
                    cur = np;
                    target = c;
                    if (config.scan == CandidateScan::first_improvement)
                        break;
                }
            }
            if (target) {
                p.move(v, *target);
                ++result.moves;
                if (observer)
                    observer(p, v);
            }
            sum += cur;
        }
        result.permanence_history.push_back(graph_permanence(graph, p));
    }

    result.permanence = result.permanence_history.back();
    result.partition = std::move(p);
    return result;
}

SensitivityReport sensitivity(const Graph& graph, const DetectorConfig& config, std::size_t permutations) {
    if (permutations < 2)
        throw DataError("sensitivity needs at least two permutations");
    const std::size_t n = graph.vertex_count();

    std::vector<Partition> runs(permutations);
    std::vector<double> run_perm(permutations);
    const auto count = static_cast<std::int64_t>(permutations);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t k = 0; k < count; ++k) {
        DetectorConfig c = config;
        if (!c.vertex_order)
            c.vertex_order = random_order(n, derive_seed(config.rng_seed, "sensitivity", {static_cast<std::uint64_t>(k)}));
        auto r = detect_with_cache(graph, c);
        run_perm[k] = r.permanence;
        runs[k] = std::move(r.partition);
    }

    SensitivityReport report;
    report.permutation_count = permutations;
    report.run_permanence = run_perm;

    // Refine a running grouping by each run's assignment.
    std::vector<std::uint64_t> group(n, 0);
    for (std::size_t k = 0; k < permutations; ++k) {
        std::map<std::pair<std::uint64_t, CommunityId>, std::uint64_t> relabel;
        for (VertexId v = 0; v < n; ++v) {
            auto key = std::make_pair(group[v], runs[k].community_of(v));
            auto [it, inserted] = relabel.emplace(key, relabel.size());
            group[v] = it->second;
        }
        report.phi_values.push_back(static_cast<double>(relabel.size()) / static_cast<double>(n));
    }
    const double lowest = *std::min_element(report.phi_values.begin(), report.phi_values.end());
    for (double phi : report.phi_values)
        report.normalized_phi.push_back(phi / lowest);

    std::map<std::uint64_t, std::size_t> slot;
    for (VertexId v = 0; v < n; ++v) {
        auto [it, inserted] = slot.emplace(group[v], report.constant_communities.size());
        if (inserted)
            report.constant_communities.emplace_back();
        report.constant_communities[it->second].push_back(v);
    }
    return report;
}

} // namespace perm
