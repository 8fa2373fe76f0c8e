#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>
#include <vector>

#include "perm/graph.hpp"

namespace perm {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t tag_hash(std::string_view tag) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : tag) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Seed for a named sub-stream: hash(base, tag, parts...).
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view tag,
                                 std::initializer_list<std::uint64_t> parts = {}) {
    std::uint64_t h = splitmix64(base ^ tag_hash(tag));
    for (std::uint64_t p : parts)
        h = splitmix64(h ^ p);
    return h;
}

/// Uniform integer in [0, n).
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

/// Uniform random permutation of 0..n-1 (Fisher-Yates).
inline std::vector<VertexId> random_order(std::size_t n, std::uint64_t seed) {
    std::vector<VertexId> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = static_cast<VertexId>(i);
    Rng rng(seed);
    for (std::size_t i = n; i > 1; --i)
        std::swap(order[i - 1], order[uniform_index(rng, i)]);
    return order;
}

} // namespace perm
