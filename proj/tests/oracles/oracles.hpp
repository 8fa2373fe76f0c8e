#pragma once

// Definitional reference implementations. Everything here works from the
// adjacency predicate and the raw assignment vector, by enumeration, and
// shares no code with the library beyond Graph::has_edge.

#include <cmath>
#include <map>
#include <vector>

#include "perm/graph.hpp"
#include "perm/scoring.hpp"

namespace oracle {

using perm::Graph;
using perm::Partition;
using perm::VertexId;

struct Perm {
    double value = 0.0;
    bool clamped = false;
    bool isolated = false;
};

inline int adj(const Graph& g, VertexId u, VertexId v) { return u != v && g.has_edge(u, v) ? 1 : 0; }

inline Perm permanence(const Graph& g, const Partition& p, VertexId v) {
    const auto n = static_cast<VertexId>(g.vertex_count());
    const auto cv = p.community_of(v);
    std::size_t size = 0, degree = 0;
    std::vector<VertexId> internal;
    std::map<perm::CommunityId, std::size_t> pull;
    for (VertexId u = 0; u < n; ++u) {
        size += p.community_of(u) == cv;
        if (!adj(g, v, u))
            continue;
        ++degree;
        if (p.community_of(u) == cv)
            internal.push_back(u);
        else
            ++pull[p.community_of(u)];
    }
    Perm out;
    out.isolated = degree == 0;
    if (size == 1 || degree == 0)
        return out;
    std::size_t emax = 0;
    for (auto [c, k] : pull)
        emax = std::max(emax, k);
    double cin = 0.0;
    const std::size_t I = internal.size();
    if (I >= 2) {
        std::size_t links = 0;
        for (std::size_t i = 0; i < I; ++i)
            for (std::size_t j = i + 1; j < I; ++j)
                links += adj(g, internal[i], internal[j]);
        cin = static_cast<double>(links) / (static_cast<double>(I) * static_cast<double>(I - 1) / 2.0);
    }
    if (emax == 0) {
        out.value = cin;
        return out;
    }
    out.value = static_cast<double>(I) / (static_cast<double>(emax) * static_cast<double>(degree)) - (1.0 - cin);
    if (out.value <= -1.0) {
        out.value = perm::kPermanenceFloor;
        out.clamped = true;
    }
    return out;
}

inline double graph_permanence(const Graph& g, const Partition& p) {
    double s = 0.0;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        s += permanence(g, p, v).value;
    return s / static_cast<double>(g.vertex_count());
}

inline std::vector<double> degrees(const Graph& g) {
    const auto n = static_cast<VertexId>(g.vertex_count());
    std::vector<double> k(n, 0.0);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v)
            k[u] += adj(g, u, v);
    return k;
}

/// Sum over all ordered vertex pairs of (A_uv - k_u k_v / 2m) for same-community pairs, over 2m.
inline double modularity(const Graph& g, const Partition& p) {
    const auto n = static_cast<VertexId>(g.vertex_count());
    const auto k = degrees(g);
    double two_m = 0.0;
    for (double d : k)
        two_m += d;
    double q = 0.0;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v)
            if (p.community_of(u) == p.community_of(v))
                q += adj(g, u, v) - k[u] * k[v] / two_m;
    return q / two_m;
}

struct Cut {
    double boundary = 0.0;
    double volume = 0.0;
    double total_volume = 0.0;
    double size = 0.0;
};

inline Cut cut(const Graph& g, const Partition& p, perm::CommunityId c) {
    const auto n = static_cast<VertexId>(g.vertex_count());
    Cut out;
    for (VertexId u = 0; u < n; ++u) {
        const bool in = p.community_of(u) == c;
        out.size += in;
        for (VertexId v = 0; v < n; ++v) {
            out.total_volume += adj(g, u, v);
            if (in) {
                out.volume += adj(g, u, v);
                if (p.community_of(v) != c)
                    out.boundary += adj(g, u, v);
            }
        }
    }
    return out;
}

inline double conductance(const Graph& g, const Partition& p, perm::CommunityId c) {
    const Cut x = cut(g, p, c);
    const double denom = std::min(x.volume, x.total_volume - x.volume);
    return denom == 0.0 ? 0.0 : x.boundary / denom;
}

inline double cut_ratio(const Graph& g, const Partition& p, perm::CommunityId c) {
    const Cut x = cut(g, p, c);
    const double n = static_cast<double>(g.vertex_count());
    return x.size == 0.0 || x.size == n ? 0.0 : x.boundary / (x.size * (n - x.size));
}

/// Adjusted Rand index from the four pair counts over all C(n,2) pairs.
inline double ari(const Partition& a, const Partition& b) {
    const std::size_t n = a.vertex_count();
    double same_both = 0, same_a = 0, same_b = 0, neither = 0;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j) {
            const bool sa = a.community_of(i) == a.community_of(j);
            const bool sb = b.community_of(i) == b.community_of(j);
            if (sa && sb)
                ++same_both;
            else if (sa)
                ++same_a;
            else if (sb)
                ++same_b;
            else
                ++neither;
        }
    const double denom = (same_both + same_a) * (same_a + neither) + (same_both + same_b) * (same_b + neither);
    if (denom == 0.0)
        return a.same_grouping(b) ? 1.0 : 0.0;
    return 2.0 * (same_both * neither - same_a * same_b) / denom;
}

/// Mutual information over entropies' arithmetic mean, from raw counts.
inline double nmi(const Partition& a, const Partition& b) {
    const std::size_t n = a.vertex_count();
    std::map<std::pair<perm::CommunityId, perm::CommunityId>, double> joint;
    std::map<perm::CommunityId, double> ra, rb;
    for (VertexId v = 0; v < n; ++v) {
        joint[{a.community_of(v), b.community_of(v)}] += 1;
        ra[a.community_of(v)] += 1;
        rb[b.community_of(v)] += 1;
    }
    const double N = static_cast<double>(n);
    auto entropy = [N](const std::map<perm::CommunityId, double>& m) {
        double h = 0;
        for (auto [c, x] : m)
            h -= x / N * std::log(x / N);
        return h;
    };
    double mi = 0;
    for (auto [key, x] : joint)
        mi += x / N * std::log(N * x / (ra[key.first] * rb[key.second]));
    const double ha = entropy(ra), hb = entropy(rb);
    if (ha == 0.0 && hb == 0.0)
        return 1.0;
    return 2.0 * mi / (ha + hb);
}

inline double purity(const Partition& detected, const Partition& truth) {
    std::map<perm::CommunityId, std::map<perm::CommunityId, double>> rows;
    for (VertexId v = 0; v < detected.vertex_count(); ++v)
        rows[detected.community_of(v)][truth.community_of(v)] += 1;
    double s = 0;
    for (auto& [c, row] : rows) {
        double best = 0;
        for (auto [t, x] : row)
            best = std::max(best, x);
        s += best;
    }
    return s / static_cast<double>(detected.vertex_count());
}

} // namespace oracle
