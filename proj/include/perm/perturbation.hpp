#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "perm/graph.hpp"
#include "perm/scoring.hpp"

namespace perm {

enum class PerturbationStrategy { edge_based, random, community_based };

std::string to_string(PerturbationStrategy s);
PerturbationStrategy parse_perturbation_strategy(const std::string& name);

struct PerturbationOutcome {
    Partition partition;
    std::size_t requested_swaps = 0;
    std::size_t performed_swaps = 0;
    /// community_based only: swaps performed per truth community (by id).
    std::vector<std::size_t> per_community_swaps;
    /// community_based only: communities skipped for lack of a boundary edge.
    std::vector<CommunityId> skipped_communities;
};

/// ceil(p * |E|) swaps across uniformly drawn inter-community edges. Stops
/// early if no inter-community edge remains.
PerturbationOutcome perturb_edge_based(const Graph& graph, const Partition& truth, double p, std::uint64_t rng_seed);

/// ceil(p * |V|) swaps of uniformly drawn vertex pairs from different
/// communities. Throws DataError if fewer than two communities exist.
PerturbationOutcome perturb_random(const Graph& graph, const Partition& truth, double p, std::uint64_t rng_seed);

/// For each community S in id order, ceil(p * |S|) swaps across uniformly
/// drawn inter-community edges with one endpoint currently in S.
PerturbationOutcome perturb_community_based(const Graph& graph, const Partition& truth, double p,
                                            std::uint64_t rng_seed);

PerturbationOutcome perturb(PerturbationStrategy strategy, const Graph& graph, const Partition& truth, double p,
                            std::uint64_t rng_seed);

struct SweepPoint {
    double p = 0.0;
    /// Mean performed swaps divided by the strategy's base count.
    double effective_p = 0.0;
    ScoreReport raw;
    /// raw divided by each function's maximum over the sweep.
    ScoreReport normalized;
    double mean_internal_degree = 0.0;
    double mean_max_external = 0.0;
    double mean_internal_cc = 0.0;
};

struct SweepResult {
    PerturbationStrategy strategy = PerturbationStrategy::edge_based;
    std::vector<SweepPoint> points;
    std::size_t runs = 0;
    std::uint64_t rng_seed = 0;
};

/// Averages `runs` perturbations per grid point. Cells are evaluated
/// concurrently, each with its own derived random stream.
SweepResult sweep(const Graph& graph, const Partition& truth, PerturbationStrategy strategy,
                  std::span<const double> p_grid, std::size_t runs, std::uint64_t rng_seed);

} // namespace perm
