#include "perm/validation.hpp"

#include <algorithm>
#include <cmath>

namespace perm {

ContingencyTable::ContingencyTable(const Partition& detected, const Partition& truth, std::span<const double> weights)
    : n_(detected.vertex_count()) {
    if (detected.vertex_count() != truth.vertex_count())
        throw DataError("partitions cover different vertex counts");
    if (!weights.empty() && weights.size() != n_)
        throw DataError("weight vector does not match vertex count");
    for (VertexId v = 0; v < n_; ++v) {
        const double w = weights.empty() ? 1.0 : weights[v];
        if (w == 0.0)
            continue;
        const CommunityId a = detected.community_of(v);
        const CommunityId b = truth.community_of(v);
        cells_[{a, b}] += w;
        rows_[a] += w;
        cols_[b] += w;
        total_ += w;
    }
}

namespace {

double entropy(const std::map<CommunityId, double>& marginal, double total) {
    double h = 0.0;
    for (const auto& [c, mass] : marginal) {
        const double p = mass / total;
        h -= p * std::log(p);
    }
    return h;
}

// True iff the table is a bijection between rows and columns.
bool is_matching(const ContingencyTable& t) {
    return t.cells().size() == t.row_marginals().size() && t.cells().size() == t.column_marginals().size();
}

} // namespace

double nmi(const ContingencyTable& t) {
    const double total = t.total();
    const double h_rows = entropy(t.row_marginals(), total);
    const double h_cols = entropy(t.column_marginals(), total);
    if (h_rows + h_cols == 0.0)
        return 1.0;
    double mi = 0.0;
    for (const auto& [key, mass] : t.cells()) {
        const double p = mass / total;
        const double pr = t.row_marginals().at(key.first) / total;
        const double pc = t.column_marginals().at(key.second) / total;
        mi += p * (std::log(p) - std::log(pr) - std::log(pc));
    }
    return std::clamp(2.0 * mi / (h_rows + h_cols), 0.0, 1.0);
}

double ari(const ContingencyTable& t) {
    // Masses are rescaled so the mean vertex carries unit mass; with unit
    // weights this is plain pair counting.
    const double unit = t.total() / static_cast<double>(t.vertex_count());
    auto pairs = [unit](double mass) {
        const double x = mass / unit;
        return x * (x - 1.0) / 2.0;
    };
    double joint = 0.0, rows = 0.0, cols = 0.0;
    for (const auto& [key, mass] : t.cells())
        joint += pairs(mass);
    for (const auto& [c, mass] : t.row_marginals())
        rows += pairs(mass);
    for (const auto& [c, mass] : t.column_marginals())
        cols += pairs(mass);
    const double all = pairs(t.total());
    const double expected = all == 0.0 ? 0.0 : rows * cols / all;
    const double max_index = 0.5 * (rows + cols);
    const double denom = max_index - expected;
    if (std::abs(denom) < 1e-12 * std::max(1.0, max_index))
        return is_matching(t) ? 1.0 : 0.0;
    return (joint - expected) / denom;
}

double purity(const ContingencyTable& t) {
    std::map<CommunityId, double> best;
    for (const auto& [key, mass] : t.cells())
        best[key.first] = std::max(best[key.first], mass);
    double sum = 0.0;
    for (const auto& [c, mass] : best)
        sum += mass;
    return sum / t.total();
}

double nmi(const Partition& detected, const Partition& truth) { return nmi(ContingencyTable(detected, truth)); }
double ari(const Partition& detected, const Partition& truth) { return ari(ContingencyTable(detected, truth)); }
double purity(const Partition& detected, const Partition& truth) { return purity(ContingencyTable(detected, truth)); }

namespace {

std::vector<double> degree_weights(const Graph& graph) {
    std::vector<double> w(graph.vertex_count());
    bool any = false;
    for (VertexId v = 0; v < w.size(); ++v) {
        w[v] = static_cast<double>(graph.degree(v));
        any = any || w[v] > 0.0;
    }
    if (!any)
        throw DataError("degree-weighted metrics need at least one edge");
    return w;
}

} // namespace

double weighted_variant(Metric metric, const Partition& detected, const Partition& truth, const Graph& graph) {
    if (graph.vertex_count() != detected.vertex_count())
        throw DataError("graph and partitions cover different vertex counts");
    const auto w = degree_weights(graph);
    const ContingencyTable t(detected, truth, w);
    switch (metric) {
    case Metric::nmi:
        return nmi(t);
    case Metric::ari:
        return ari(t);
    case Metric::purity:
        return purity(t);
    }
    return 0.0;
}

ValidationReport validate_partition(const Partition& detected, const Partition& truth, const Graph& graph) {
    ValidationReport r;
    const ContingencyTable plain(detected, truth);
    r.nmi = nmi(plain);
    r.ari = ari(plain);
    r.purity = purity(plain);
    r.weighted_nmi = weighted_variant(Metric::nmi, detected, truth, graph);
    r.weighted_ari = weighted_variant(Metric::ari, detected, truth, graph);
    r.weighted_purity = weighted_variant(Metric::purity, detected, truth, graph);
    return r;
}

} // namespace perm
