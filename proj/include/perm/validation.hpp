#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "perm/graph.hpp"

namespace perm {

/// Joint mass of (detected community, truth community) over all vertices.
/// Each vertex contributes its weight: 1 for the plain metrics, its degree
/// for the weighted variants.
class ContingencyTable {
public:
    ContingencyTable(const Partition& detected, const Partition& truth, std::span<const double> weights = {});

    const std::map<std::pair<CommunityId, CommunityId>, double>& cells() const { return cells_; }
    const std::map<CommunityId, double>& row_marginals() const { return rows_; }
    const std::map<CommunityId, double>& column_marginals() const { return cols_; }
    double total() const { return total_; }
    std::size_t vertex_count() const { return n_; }

private:
    std::map<std::pair<CommunityId, CommunityId>, double> cells_;
    std::map<CommunityId, double> rows_;
    std::map<CommunityId, double> cols_;
    double total_ = 0.0;
    std::size_t n_ = 0;
};

/// Mutual information normalised by the arithmetic mean of both entropies.
double nmi(const ContingencyTable& table);
/// Pair-counting Rand index corrected for chance.
double ari(const ContingencyTable& table);
/// Mass-weighted share of each detected community held by its best truth
/// community. Asymmetric: detected -> truth.
double purity(const ContingencyTable& table);

double nmi(const Partition& detected, const Partition& truth);
double ari(const Partition& detected, const Partition& truth);
double purity(const Partition& detected, const Partition& truth);

enum class Metric { nmi, ari, purity };

/// The metric evaluated on a degree-mass contingency table.
double weighted_variant(Metric metric, const Partition& detected, const Partition& truth, const Graph& graph);

struct ValidationReport {
    double nmi = 0.0;
    double ari = 0.0;
    double purity = 0.0;
    double weighted_nmi = 0.0;
    double weighted_ari = 0.0;
    double weighted_purity = 0.0;

    double mean() const { return (nmi + ari + purity + weighted_nmi + weighted_ari + weighted_purity) / 6.0; }
};

ValidationReport validate_partition(const Partition& detected, const Partition& truth, const Graph& graph);

} // namespace perm
