#include "perm/generators.hpp"

#include <vector>

#include "perm/rng.hpp"

namespace perm {

namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

GeneratedGraph make_ring(const RingOfCliques& s) {
    const std::size_t n = s.cliques * s.clique_size;
    EdgeList edges;
    std::vector<CommunityId> truth(n);
    for (std::size_t c = 0; c < s.cliques; ++c) {
        const auto base = static_cast<VertexId>(c * s.clique_size);
        for (std::size_t i = 0; i < s.clique_size; ++i) {
            truth[base + i] = static_cast<CommunityId>(c);
            for (std::size_t j = i + 1; j < s.clique_size; ++j)
                edges.emplace_back(base + i, base + j);
        }
        const auto next = static_cast<VertexId>(((c + 1) % s.cliques) * s.clique_size);
        edges.emplace_back(base, next + 1);
    }
    return {Graph::from_edges(n, edges), Partition(std::move(truth))};
}

GeneratedGraph make_grid(const Grid& s) {
    const std::size_t n = s.rows * s.cols;
    EdgeList edges;
    for (std::size_t r = 0; r < s.rows; ++r)
        for (std::size_t c = 0; c < s.cols; ++c) {
            const auto v = static_cast<VertexId>(r * s.cols + c);
            if (c + 1 < s.cols)
                edges.emplace_back(v, v + 1);
            if (r + 1 < s.rows)
                edges.emplace_back(v, static_cast<VertexId>(v + s.cols));
        }
    return {Graph::from_edges(n, edges), Partition::singletons(n)};
}

GeneratedGraph make_planted(const PlantedPartition& s) {
    const std::size_t n = s.blocks * s.block_size;
    Rng rng(derive_seed(s.rng_seed, "planted_partition"));
    auto coin = [&rng](double p) {
        // 53-bit uniform in [0,1), independent of the library's distributions.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        return u < p;
    };
    EdgeList edges;
    std::vector<CommunityId> truth(n);
    for (std::size_t u = 0; u < n; ++u) {
        truth[u] = static_cast<CommunityId>(u / s.block_size);
        for (std::size_t v = u + 1; v < n; ++v) {
            const bool same = u / s.block_size == v / s.block_size;
            if (coin(same ? s.p_in : s.p_out))
                edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
        }
    }
    return {Graph::from_edges(n, edges), Partition(std::move(truth))};
}

} // namespace

void validate(const GeneratorSpec& spec) {
    std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, RingOfCliques>) {
                if (s.cliques < 3 || s.clique_size < 3)
                    throw DataError("ring of cliques needs at least 3 cliques of at least 3 vertices");
            } else if constexpr (std::is_same_v<T, Grid>) {
                if (s.rows < 2 || s.cols < 2)
                    throw DataError("grid needs at least 2 rows and 2 columns");
            } else {
                if (s.blocks < 1 || s.block_size < 1)
                    throw DataError("planted partition needs at least one nonempty block");
                if (!(0.0 <= s.p_out && s.p_out < s.p_in && s.p_in <= 1.0))
                    throw DataError("planted partition needs 0 <= p_out < p_in <= 1");
            }
        },
        spec);
}

GeneratedGraph generate(const GeneratorSpec& spec) {
    validate(spec);
    return std::visit(
        [](const auto& s) -> GeneratedGraph {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, RingOfCliques>)
                return make_ring(s);
            else if constexpr (std::is_same_v<T, Grid>)
                return make_grid(s);
            else
                return make_planted(s);
        },
        spec);
}

} // namespace perm
