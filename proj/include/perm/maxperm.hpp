#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "perm/graph.hpp"
#include "perm/scoring.hpp"

namespace perm {

enum class SeedStrategy { pair_wise, high_degree, high_cc };

/// Which improvements a tentative move must achieve to be committed.
enum class AcceptanceRule {
    vertex_and_neighbors, ///< Perm(v) and the sum over Neig(v) must both strictly increase
    vertex_only,          ///< only Perm(v) must strictly increase
};

/// How the neighbouring communities of a vertex are scanned.
enum class CandidateScan {
    first_improvement, ///< commit the first acceptable community (ascending id)
    best_so_far,       ///< keep scanning; each acceptance raises the bar for Perm(v)
};

struct DetectorConfig {
    SeedStrategy seed_strategy = SeedStrategy::high_degree;
    std::size_t max_iterations = 10;
    std::uint64_t rng_seed = 0;
    /// When set, this permutation drives both seeding ties and the sweep.
    std::optional<std::vector<VertexId>> vertex_order;
    /// Without an explicit order: false -> ascending ids, true -> a
    /// permutation derived from rng_seed.
    bool shuffle_order = false;
    AcceptanceRule acceptance = AcceptanceRule::vertex_and_neighbors;
    CandidateScan scan = CandidateScan::first_improvement;
};

/// Throws DataError for max_iterations == 0 or an order that is not a permutation.
std::vector<VertexId> resolve_order(const Graph& graph, const DetectorConfig& config);

/// Seed communities. Every seed community induces a connected subgraph.
/// `order` sets the sweep order for pair_wise and breaks ties for the sorted
/// strategies; empty means ascending ids.
Partition seed(const Graph& graph, SeedStrategy strategy, std::span<const VertexId> order = {});

/// Whole-graph local clustering coefficient (0 for degree < 2).
std::vector<double> local_clustering(const Graph& graph);

struct DetectionResult {
    Partition partition;
    double permanence = 0.0;
    std::size_t iterations = 0;
    std::size_t moves = 0;
    /// Perm(G) after seeding, then after every iteration.
    std::vector<double> permanence_history;
};

using CommitObserver = std::function<void(const Partition&, VertexId moved)>;

/// Greedy permanence maximisation, evaluating every tentative move from scratch.
DetectionResult detect(const Graph& graph, const DetectorConfig& config, const CommitObserver& observer = {});

/// Per-vertex counts of edges into each neighbouring community plus the
/// number of edges among each vertex's internal neighbours, kept current
/// across moves.
class CommunityEdgeCache {
public:
    CommunityEdgeCache(const Graph& graph, const Partition& partition);

    /// Edges from v into community c.
    std::size_t edges_to(VertexId v, CommunityId c) const;
    std::span<const std::pair<CommunityId, std::uint32_t>> entries(VertexId v) const { return counts_[v]; }
    std::size_t internal_edges(VertexId v) const { return internal_edges_[v]; }

    PermanenceCounts counts(VertexId v) const;

    /// Recounts everything from scratch; returns a description of the first
    /// disagreement, or an empty string.
    std::string audit() const;

private:
    friend class CachedDetector;

    const Graph* graph_;
    const Partition* partition_;
    std::vector<std::vector<std::pair<CommunityId, std::uint32_t>>> counts_;
    std::vector<std::size_t> internal_edges_;
};

using CacheObserver = std::function<void(const CommunityEdgeCache&, const Partition&, VertexId moved)>;

/// Same contract and output as detect(); candidate moves are evaluated from
/// the incremental cache instead of recomputing neighbour permanence.
DetectionResult detect_with_cache(const Graph& graph, const DetectorConfig& config,
                                  const CacheObserver& observer = {});

struct SensitivityReport {
    std::size_t permutation_count = 0;
    /// phi after the first k runs, k = 1..permutation_count.
    std::vector<double> phi_values;
    /// phi_values divided by their minimum.
    std::vector<double> normalized_phi;
    /// Vertex groups co-assigned in every run, ordered by smallest member.
    std::vector<std::vector<VertexId>> constant_communities;
    std::vector<double> run_permanence;
};

/// Runs the detector under `permutations` vertex orders derived from
/// config.rng_seed (or config.vertex_order for every run when set). Runs are
/// independent and execute concurrently.
SensitivityReport sensitivity(const Graph& graph, const DetectorConfig& config, std::size_t permutations);

} // namespace perm
