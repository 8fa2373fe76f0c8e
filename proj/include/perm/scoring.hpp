#pragma once

#include <cstddef>
#include <vector>

#include "perm/graph.hpp"

namespace perm {

/// Per-vertex terms of the permanence formula
///   Perm(v) = I(v) / (E_max(v) * D(v)) - (1 - c_in(v)).
struct PermanenceBreakdown {
    VertexId vertex = 0;
    std::size_t internal_degree = 0; ///< I(v)
    std::size_t degree = 0;          ///< D(v)
    std::size_t max_external = 0;    ///< E_max(v)
    double internal_cc = 0.0;        ///< c_in(v)
    double permanence = 0.0;
    bool isolated = false; ///< degree 0; permanence reported as 0
    bool clamped = false;  ///< raw value was -1 (I = 0, non-singleton); reported as -1 + eps
};

/// Integer inputs from which permanence is evaluated. Shared by the direct
/// evaluator and the incremental detector so both produce bit-identical values.
struct PermanenceCounts {
    std::size_t internal_degree = 0;
    std::size_t degree = 0;
    std::size_t max_external = 0;
    std::size_t internal_edges = 0; ///< edges with both endpoints internal neighbours of v
    bool singleton = false;
};

/// Lower clamp for vertices whose raw permanence is exactly -1.
inline constexpr double kPermanenceFloor = -1.0 + 2.220446049250313e-16;

/// Applies the boundary rules in order: singleton community -> 0; no
/// external edges -> c_in; I < 2 -> c_in = 0; raw -1 -> kPermanenceFloor.
PermanenceBreakdown evaluate_permanence(const PermanenceCounts& counts);

PermanenceCounts permanence_counts(const Graph& graph, const Partition& partition, VertexId v);
PermanenceBreakdown vertex_permanence(const Graph& graph, const Partition& partition, VertexId v);

/// OpenMP kernels. Per-vertex values are computed in parallel and reduced in
/// vertex order, so results are bit-identical to the serial versions.
std::vector<PermanenceBreakdown> permanence_breakdown(const Graph& graph, const Partition& partition);
std::vector<double> vertex_permanences(const Graph& graph, const Partition& partition);
/// Mean vertex permanence. Throws DataError on an empty graph.
double graph_permanence(const Graph& graph, const Partition& partition);

namespace serial {
std::vector<double> vertex_permanences(const Graph& graph, const Partition& partition);
double graph_permanence(const Graph& graph, const Partition& partition);
} // namespace serial

/// Newman modularity. Throws DataError on an edgeless graph.
double modularity(const Graph& graph, const Partition& partition);

struct CommunityScore {
    double value = 0.0;
    bool degenerate = false; ///< defined as 0 because the denominator vanished
};

/// Boundary edges over min(Vol(S), Vol(V \ S)).
CommunityScore conductance(const Graph& graph, const Partition& partition, CommunityId community);
/// Boundary edges over n_S * (n - n_S).
CommunityScore cut_ratio(const Graph& graph, const Partition& partition, CommunityId community);

enum class Aggregation { unweighted, size_weighted };

struct ScoreReport {
    double modularity = 0.0;
    double mean_conductance_complement = 0.0; ///< mean over communities of 1 - conductance
    double mean_cutratio_complement = 0.0;    ///< mean over communities of 1 - cut ratio
    double graph_permanence = 0.0;
    std::size_t degenerate_communities = 0;
};

ScoreReport score_report(const Graph& graph, const Partition& partition,
                         Aggregation aggregation = Aggregation::unweighted);

} // namespace perm
