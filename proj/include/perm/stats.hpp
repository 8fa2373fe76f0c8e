#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace perm {

/// Ranks starting at 1; tied values share the mean of their positions.
std::vector<double> average_ranks(std::span<const double> values);

/// Pearson correlation; 0 when either side has zero variance.
double pearson(std::span<const double> x, std::span<const double> y);

/// Pearson correlation of average ranks.
double spearman(std::span<const double> x, std::span<const double> y);

double mean(std::span<const double> values);
/// Population variance.
double variance(std::span<const double> values);

} // namespace perm
