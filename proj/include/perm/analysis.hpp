#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "perm/generators.hpp"
#include "perm/graph.hpp"

namespace perm {

inline constexpr std::size_t kPermanenceBins = 20;

/// Bin of a permanence value: 20 equal intervals over [-1, 1], the last one
/// closed on the right.
std::size_t permanence_bin(double permanence);
double bin_lower_edge(std::size_t bin);

struct BinnedDistribution {
    std::array<std::size_t, kPermanenceBins> counts{};
    std::array<double, kPermanenceBins> fractions{};
};

BinnedDistribution permanence_histogram(const Graph& graph, const Partition& partition);

struct ComponentBin {
    std::size_t bin = 0;
    std::size_t vertices = 0;
    double internal_degree = 0.0;
    double degree = 0.0;
    double max_external = 0.0;
    /// I / (D * max(E_max, 1)); vertices without external edges use E_max = 1.
    double combined = 0.0;
    double internal_cc = 0.0;
};

/// Per-bin means of the permanence terms, one row per bin (empty bins have
/// vertices == 0 and zero means).
std::vector<ComponentBin> component_profile(const Graph& graph, const Partition& partition);

/// Dense ranks of the values (1 = smallest; equal values share a rank).
std::vector<std::size_t> dense_rank(std::span<const double> values);

/// Internal edges of S over |S|(|S|-1)/2.
double edge_density(const Graph& graph, std::span<const VertexId> members);

struct StrengthenRow {
    double fraction = 0.0;
    std::size_t removed = 0;
    /// Communities contributing (nonzero initial density, >= 2 survivors).
    std::size_t communities = 0;
    double mean_change_percent = 0.0;
    double variance_change_percent = 0.0;
};

/// Ranks vertices once by permanence under `partition`, then for each
/// fraction f removes the floor(f * |S|) lowest-ranked vertices of every
/// community S and reports the percentage change of its edge density.
std::vector<StrengthenRow> strengthen(const Graph& graph, const Partition& partition,
                                      std::span<const double> removal_fractions);

/// Mean shortest-path distance from each vertex to the co-members it can
/// reach inside the subgraph induced by its community; NaN when it reaches none.
std::vector<double> farness(const Graph& graph, const Partition& partition);

struct FarnessBin {
    double lower = 0.0;
    double upper = 0.0;
    std::size_t vertices = 0;
    double mean_permanence = 0.0;
};

struct FarnessProfile {
    std::vector<FarnessBin> bins; ///< populated bins only, ascending
    std::vector<double> vertex_farness;
    std::vector<double> vertex_permanence;
    std::size_t unreachable = 0; ///< vertices with no reachable co-member
};

FarnessProfile farness_profile(const Graph& graph, const Partition& partition, double bin_width = 0.1);

struct AssortativityReport {
    double r_permanence = 0.0;
    double r_degree = 0.0;
    std::size_t used_permanence = 0;
    std::size_t used_degree = 0;
    /// Communities with < 2 vertices, no internal edge, or zero variance.
    std::size_t skipped_permanence = 0;
    std::size_t skipped_degree = 0;
};

/// Newman scalar assortativity over each community's internal edges, with
/// the permanence bin index or the degree as the attribute, averaged over
/// communities where it is defined (NaN when no community qualifies).
AssortativityReport permanence_assortativity(const Graph& graph, const Partition& partition);

/// Pearson correlation over both orientations of every edge; NaN for zero variance.
double scalar_assortativity(std::span<const std::pair<VertexId, VertexId>> edges, std::span<const double> attribute);

struct OverlapEdge {
    CommunityId detected = 0;
    CommunityId truth = 0;
    double weight = 0.0;
};

struct OverlapReport {
    std::vector<OverlapEdge> edges;
    /// Bucket 0 = [0.9, 1], bucket k = [0.9 - 0.1k, 1 - 0.1k).
    std::array<std::size_t, 10> bucket_counts{};
    std::array<double, 10> bucket_fractions{};
};

/// Weight |c_a ∩ c_g| / |c_a| for every overlapping (detected, truth) pair.
OverlapReport bipartite_overlap(const Partition& detected, const Partition& truth);
std::size_t overlap_bucket(double weight);

struct SizeDiagnostics {
    std::vector<std::size_t> detected_sizes; ///< descending
    std::vector<std::size_t> truth_sizes;    ///< descending
    /// Best Jaccard between the largest detected community and any truth community.
    double largest_jaccard = 0.0;
};

SizeDiagnostics size_diagnostics(const Partition& detected, const Partition& truth);

enum class InitiatorSelector { random, degree, permanence };

std::string to_string(InitiatorSelector s);
InitiatorSelector parse_initiator_selector(const std::string& name);

/// One initiator per nonempty truth community. `random` draws from rng;
/// the others take the maximum (lowest id on ties).
std::vector<VertexId> select_initiators(const Graph& graph, const Partition& truth, InitiatorSelector selector,
                                        std::uint64_t rng_seed);

struct SpreadResult {
    double mean_rounds = 0.0;
    std::vector<std::size_t> rounds;
    /// False when some vertex is unreachable from every initiator; coverage
    /// then means the reachable set.
    bool full_coverage = true;
    std::size_t reachable = 0;
};

/// Synchronous push: each round every informed vertex informs one uniformly
/// chosen uninformed neighbour. Counts rounds until the reachable set is informed.
std::size_t spread_once(const Graph& graph, std::span<const VertexId> initiators, std::uint64_t rng_seed);

SpreadResult spreading_simulation(const Graph& graph, const Partition& truth, InitiatorSelector selector,
                                  std::size_t runs, std::uint64_t rng_seed);

struct GrowthRow {
    std::size_t blocks = 0;
    std::size_t vertices = 0;
    double p_out = 0.0;
    double modularity = 0.0;
    double permanence = 0.0;
    double mean_internal_degree = 0.0;
    double mean_external_degree = 0.0;
};

/// Planted partitions with `block_counts` blocks of the template's size and
/// p_in, each scored on its ground truth. With `hold_external_degree`, p_out
/// is rescaled by (b0 - 1) / (b - 1) so a vertex keeps the same expected
/// number of inter-block edges as at the first size b0; otherwise p_out is
/// used unchanged. Each row averages `replicates` independent graphs.
std::vector<GrowthRow> asymptotic_growth_study(std::span<const std::size_t> block_counts,
                                               const PlantedPartition& base, std::uint64_t rng_seed,
                                               bool hold_external_degree = true, std::size_t replicates = 1);

} // namespace perm
