#pragma once

#include <algorithm>
#include <initializer_list>
#include <utility>
#include <vector>

#include "perm/graph.hpp"
#include "perm/rng.hpp"

namespace testing_support {

using perm::CommunityId;
using perm::Graph;
using perm::Partition;
using perm::VertexId;

inline Graph make_graph(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> edges) {
    std::vector<std::pair<VertexId, VertexId>> e(edges);
    return Graph::from_edges(n, e);
}

/// Disjoint cliques of the given sizes, numbered consecutively.
inline Graph cliques(std::initializer_list<std::size_t> sizes, Partition* truth = nullptr) {
    std::vector<std::pair<VertexId, VertexId>> e;
    std::vector<CommunityId> a;
    VertexId base = 0;
    CommunityId c = 0;
    for (std::size_t s : sizes) {
        for (VertexId i = 0; i < s; ++i) {
            a.push_back(c);
            for (VertexId j = i + 1; j < s; ++j)
                e.emplace_back(base + i, base + j);
        }
        base += static_cast<VertexId>(s);
        ++c;
    }
    if (truth)
        *truth = Partition(a);
    return Graph::from_edges(base, e);
}

inline Graph random_graph(std::size_t n, double p, perm::Rng& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (coin(rng))
                e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

inline Partition random_partition(std::size_t n, std::size_t max_communities, perm::Rng& rng) {
    std::vector<CommunityId> a(n);
    for (auto& c : a)
        c = static_cast<CommunityId>(perm::uniform_index(rng, max_communities));
    return Partition(a);
}

/// Communities of a `core`-clique plus `periphery` vertices; each peripheral
/// vertex links to one core vertex, up to three peripheral co-members and one
/// peripheral vertex of another community. Permanence is high in the core and
/// low on the rim, unlike the homogeneous blocks of a planted partition.
inline Graph core_periphery(std::size_t blocks, std::size_t core, std::size_t periphery, std::uint64_t seed,
                            Partition* truth) {
    perm::Rng rng(seed);
    std::vector<std::pair<VertexId, VertexId>> e;
    std::vector<CommunityId> a;
    const std::size_t size = core + periphery;
    auto pick = [&](std::size_t n) { return static_cast<VertexId>(perm::uniform_index(rng, n)); };
    for (std::size_t b = 0; b < blocks; ++b) {
        const auto base = static_cast<VertexId>(b * size);
        a.insert(a.end(), size, static_cast<CommunityId>(b));
        for (VertexId i = 0; i < core; ++i)
            for (VertexId j = i + 1; j < core; ++j)
                e.emplace_back(base + i, base + j);
        for (auto i = static_cast<VertexId>(core); i < size; ++i) {
            e.emplace_back(base + i, base + pick(core));
            for (int t = 0; t < 3; ++t) {
                const auto j = static_cast<VertexId>(core + pick(periphery));
                if (j != i)
                    e.emplace_back(std::min(base + i, base + j), std::max(base + i, base + j));
            }
            const std::size_t other = (b + 1 + pick(blocks - 1)) % blocks;
            e.emplace_back(base + i, static_cast<VertexId>(other * size + core + pick(periphery)));
        }
    }
    for (auto& [u, v] : e)
        if (u > v)
            std::swap(u, v);
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    *truth = Partition(a);
    return Graph::from_edges(blocks * size, e);
}

} // namespace testing_support
