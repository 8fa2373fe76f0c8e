#include "perm/perturbation.hpp"

#include <cmath>
#include <limits>

#include "perm/rng.hpp"

namespace perm {

std::string to_string(PerturbationStrategy s) {
    switch (s) {
    case PerturbationStrategy::edge_based:
        return "edge_based";
    case PerturbationStrategy::random:
        return "random";
    case PerturbationStrategy::community_based:
        return "community_based";
    }
    return "?";
}

PerturbationStrategy parse_perturbation_strategy(const std::string& name) {
    if (name == "edge_based" || name == "edge")
        return PerturbationStrategy::edge_based;
    if (name == "random")
        return PerturbationStrategy::random;
    if (name == "community_based" || name == "community")
        return PerturbationStrategy::community_based;
    throw DataError("unknown perturbation strategy '" + name + "'");
}

namespace {

void check_intensity(double p) {
    if (!(p >= 0.0 && p <= 0.5))
        throw DataError("perturbation intensity must lie in [0, 0.5]");
}

// Swap count for intensity p over `count` items; the epsilon absorbs
// representation error such as 0.3 * 100 = 30.000000000000004.
std::size_t swap_budget(double p, std::size_t count) {
    const double x = p * static_cast<double>(count);
    return static_cast<std::size_t>(std::ceil(x - 1e-9));
}

/// Inter-community edges under a changing partition, updated per swap.
class BoundaryEdges {
public:
    BoundaryEdges(const Graph& g, const Partition& p) : edges_(g.edges()), incident_(g.vertex_count()), p_(p) {
        pos_.assign(edges_.size(), npos);
        for (std::uint32_t e = 0; e < edges_.size(); ++e) {
            incident_[edges_[e].first].push_back(e);
            incident_[edges_[e].second].push_back(e);
            refresh_edge(e);
        }
    }

    bool empty() const { return items_.empty(); }
    std::size_t size() const { return items_.size(); }
    std::pair<VertexId, VertexId> edge(std::size_t i) const { return edges_[items_[i]]; }

    void refresh(VertexId v) {
        for (std::uint32_t e : incident_[v])
            refresh_edge(e);
    }

private:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    void refresh_edge(std::uint32_t e) {
        const bool inter = p_.community_of(edges_[e].first) != p_.community_of(edges_[e].second);
        if (inter && pos_[e] == npos) {
            pos_[e] = items_.size();
            items_.push_back(e);
        } else if (!inter && pos_[e] != npos) {
            const std::uint32_t last = items_.back();
            items_[pos_[e]] = last;
            pos_[last] = pos_[e];
            items_.pop_back();
            pos_[e] = npos;
        }
    }

    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::vector<std::uint32_t>> incident_;
    std::vector<std::uint32_t> items_;
    std::vector<std::size_t> pos_;
    const Partition& p_;
};

} // namespace

PerturbationOutcome perturb_edge_based(const Graph& graph, const Partition& truth, double p, std::uint64_t rng_seed) {
    check_intensity(p);
    PerturbationOutcome out;
    out.partition = truth;
    out.requested_swaps = swap_budget(p, graph.edge_count());
    if (out.requested_swaps == 0)
        return out;

    Rng rng(derive_seed(rng_seed, "edge_based"));
    BoundaryEdges boundary(graph, out.partition);
    if (boundary.empty())
        throw DataError("edge-based perturbation needs at least one inter-community edge");
    for (std::size_t i = 0; i < out.requested_swaps && !boundary.empty(); ++i) {
        auto [u, v] = boundary.edge(uniform_index(rng, boundary.size()));
        out.partition.swap_members(u, v);
        boundary.refresh(u);
        boundary.refresh(v);
        ++out.performed_swaps;
    }
    return out;
}

PerturbationOutcome perturb_random(const Graph& graph, const Partition& truth, double p, std::uint64_t rng_seed) {
    check_intensity(p);
    if (truth.community_count() < 2)
        throw DataError("random perturbation needs at least two communities");
    PerturbationOutcome out;
    out.partition = truth;
    out.requested_swaps = swap_budget(p, graph.vertex_count());
    Rng rng(derive_seed(rng_seed, "random"));
    const std::size_t n = graph.vertex_count();
    for (std::size_t i = 0; i < out.requested_swaps; ++i) {
        const auto u = static_cast<VertexId>(uniform_index(rng, n));
        VertexId v;
        do {
            v = static_cast<VertexId>(uniform_index(rng, n));
        } while (out.partition.community_of(v) == out.partition.community_of(u));
        out.partition.swap_members(u, v);
        ++out.performed_swaps;
    }
    return out;
}

PerturbationOutcome perturb_community_based(const Graph& graph, const Partition& truth, double p,
                                            std::uint64_t rng_seed) {
    check_intensity(p);
    PerturbationOutcome out;
    out.partition = truth;
    out.per_community_swaps.assign(truth.slot_count(), 0);
    Rng rng(derive_seed(rng_seed, "community_based"));
    BoundaryEdges boundary(graph, out.partition);

    std::vector<std::size_t> touching;
    for (CommunityId s = 0; s < truth.slot_count(); ++s) {
        const std::size_t budget = swap_budget(p, truth.size_of(s));
        out.requested_swaps += budget;
        for (std::size_t i = 0; i < budget; ++i) {
            touching.clear();
            for (std::size_t k = 0; k < boundary.size(); ++k) {
                auto [a, b] = boundary.edge(k);
                if (out.partition.community_of(a) == s || out.partition.community_of(b) == s)
                    touching.push_back(k);
            }
            if (touching.empty()) {
                if (out.per_community_swaps[s] == 0)
                    out.skipped_communities.push_back(s);
                break;
            }
            auto [u, v] = boundary.edge(touching[uniform_index(rng, touching.size())]);
            out.partition.swap_members(u, v);
            boundary.refresh(u);
            boundary.refresh(v);
            ++out.per_community_swaps[s];
            ++out.performed_swaps;
        }
    }
    return out;
}

PerturbationOutcome perturb(PerturbationStrategy strategy, const Graph& graph, const Partition& truth, double p,
                            std::uint64_t rng_seed) {
    switch (strategy) {
    case PerturbationStrategy::edge_based:
        return perturb_edge_based(graph, truth, p, rng_seed);
    case PerturbationStrategy::random:
        return perturb_random(graph, truth, p, rng_seed);
    case PerturbationStrategy::community_based:
        return perturb_community_based(graph, truth, p, rng_seed);
    }
    throw DataError("unknown perturbation strategy");
}

namespace {

struct Cell {
    ScoreReport scores;
    double swaps = 0.0;
    double internal_degree = 0.0;
    double max_external = 0.0;
    double internal_cc = 0.0;
};

double normalise(double value, double peak) { return peak == 0.0 ? 0.0 : value / std::abs(peak); }

} // namespace

SweepResult sweep(const Graph& graph, const Partition& truth, PerturbationStrategy strategy,
                  std::span<const double> p_grid, std::size_t runs, std::uint64_t rng_seed) {
    if (runs == 0)
        throw DataError("sweep needs at least one run per grid point");
    for (std::size_t i = 0; i < p_grid.size(); ++i) {
        check_intensity(p_grid[i]);
        if (i > 0 && p_grid[i] < p_grid[i - 1])
            throw DataError("p grid must be ascending");
    }

    const std::size_t cells = p_grid.size() * runs;
    std::vector<Cell> results(cells);
    const auto total = static_cast<std::int64_t>(cells);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t idx = 0; idx < total; ++idx) {
        const std::size_t pi = static_cast<std::size_t>(idx) / runs;
        const std::size_t run = static_cast<std::size_t>(idx) % runs;
        const std::uint64_t seed =
            derive_seed(rng_seed, "sweep", {static_cast<std::uint64_t>(strategy), pi, run});
        const auto outcome = perturb(strategy, graph, truth, p_grid[pi], seed);
        Cell c;
        c.scores = score_report(graph, outcome.partition);
        c.swaps = static_cast<double>(outcome.performed_swaps);
        const auto breakdown = permanence_breakdown(graph, outcome.partition);
        for (const auto& b : breakdown) {
            c.internal_degree += static_cast<double>(b.internal_degree);
            c.max_external += static_cast<double>(b.max_external);
            c.internal_cc += b.internal_cc;
        }
        const auto n = static_cast<double>(breakdown.size());
        c.internal_degree /= n;
        c.max_external /= n;
        c.internal_cc /= n;
        results[idx] = c;
    }

    const double base = static_cast<double>(strategy == PerturbationStrategy::edge_based ? graph.edge_count()
                                                                                         : graph.vertex_count());
    SweepResult out;
    out.strategy = strategy;
    out.runs = runs;
    out.rng_seed = rng_seed;
    for (std::size_t pi = 0; pi < p_grid.size(); ++pi) {
        SweepPoint pt;
        pt.p = p_grid[pi];
        double swaps = 0.0;
        for (std::size_t run = 0; run < runs; ++run) {
            const Cell& c = results[pi * runs + run];
            pt.raw.modularity += c.scores.modularity;
            pt.raw.mean_conductance_complement += c.scores.mean_conductance_complement;
            pt.raw.mean_cutratio_complement += c.scores.mean_cutratio_complement;
            pt.raw.graph_permanence += c.scores.graph_permanence;
            pt.raw.degenerate_communities += c.scores.degenerate_communities;
            swaps += c.swaps;
            pt.mean_internal_degree += c.internal_degree;
            pt.mean_max_external += c.max_external;
            pt.mean_internal_cc += c.internal_cc;
        }
        const auto r = static_cast<double>(runs);
        pt.raw.modularity /= r;
        pt.raw.mean_conductance_complement /= r;
        pt.raw.mean_cutratio_complement /= r;
        pt.raw.graph_permanence /= r;
        pt.raw.degenerate_communities /= runs;
        pt.effective_p = base == 0.0 ? 0.0 : swaps / r / base;
        pt.mean_internal_degree /= r;
        pt.mean_max_external /= r;
        pt.mean_internal_cc /= r;
        out.points.push_back(pt);
    }

    ScoreReport peak;
    peak.modularity = peak.mean_conductance_complement = peak.mean_cutratio_complement = peak.graph_permanence =
        -std::numeric_limits<double>::infinity();
    for (const auto& pt : out.points) {
        peak.modularity = std::max(peak.modularity, pt.raw.modularity);
        peak.mean_conductance_complement = std::max(peak.mean_conductance_complement, pt.raw.mean_conductance_complement);
        peak.mean_cutratio_complement = std::max(peak.mean_cutratio_complement, pt.raw.mean_cutratio_complement);
        peak.graph_permanence = std::max(peak.graph_permanence, pt.raw.graph_permanence);
    }
    for (auto& pt : out.points) {
        pt.normalized.modularity = normalise(pt.raw.modularity, peak.modularity);
        pt.normalized.mean_conductance_complement =
            normalise(pt.raw.mean_conductance_complement, peak.mean_conductance_complement);
        pt.normalized.mean_cutratio_complement =
            normalise(pt.raw.mean_cutratio_complement, peak.mean_cutratio_complement);
        pt.normalized.graph_permanence = normalise(pt.raw.graph_permanence, peak.graph_permanence);
        pt.normalized.degenerate_communities = pt.raw.degenerate_communities;
    }
    return out;
}

} // namespace perm
