#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>

#include "perm/graph.hpp"

namespace perm {

/// Cycle of `cliques` complete graphs of `clique_size` vertices. Clique i's
/// vertex 0 is joined to vertex 1 of clique (i+1) mod cliques.
struct RingOfCliques {
    std::size_t cliques = 0;
    std::size_t clique_size = 0;
};

/// 4-neighbour lattice.
struct Grid {
    std::size_t rows = 0;
    std::size_t cols = 0;
};

/// Blocks of equal size; intra-block pairs are edges with probability p_in,
/// inter-block pairs with probability p_out.
struct PlantedPartition {
    std::size_t blocks = 0;
    std::size_t block_size = 0;
    double p_in = 0.0;
    double p_out = 0.0;
    std::uint64_t rng_seed = 0;
};

using GeneratorSpec = std::variant<RingOfCliques, Grid, PlantedPartition>;

struct GeneratedGraph {
    Graph graph;
    /// Clique membership, singletons (grid) or blocks.
    Partition truth;
};

/// Throws DataError for out-of-range parameters (ring m, k >= 3; grid sides >= 2; 0 <= p_out < p_in <= 1).
void validate(const GeneratorSpec& spec);
GeneratedGraph generate(const GeneratorSpec& spec);

} // namespace perm
