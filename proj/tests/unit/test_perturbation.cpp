#include <gtest/gtest.h>

#include "perm/generators.hpp"
#include "perm/perturbation.hpp"
#include "perm/validation.hpp"
#include "support.hpp"

using namespace perm;
using namespace testing_support;

namespace {

constexpr PerturbationStrategy kAll[] = {PerturbationStrategy::edge_based, PerturbationStrategy::random,
                                         PerturbationStrategy::community_based};

Graph bridged_triangles(Partition* truth) {
    *truth = Partition({0, 0, 0, 1, 1, 1});
    return make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
}

} // namespace

TEST(Perturb, ZeroIntensityIsIdentity) {
    const auto gen = generate(PlantedPartition{4, 10, 0.6, 0.1, 1});
    for (auto s : kAll) {
        const auto r = perturb(s, gen.graph, gen.truth, 0.0, 5);
        EXPECT_TRUE(r.partition == gen.truth) << to_string(s);
        EXPECT_EQ(r.performed_swaps, 0u);
    }
}

TEST(Perturb, EdgeBasedSwapsBridgeEndpoints) {
    Partition truth;
    const Graph g = bridged_triangles(&truth);
    // ceil(0.1 * 7) = 1 swap; the only inter-community edge is (2, 3).
    const auto r = perturb_edge_based(g, truth, 0.1, 3);
    EXPECT_EQ(r.performed_swaps, 1u);
    EXPECT_EQ(r.partition.community_of(2), 1u);
    EXPECT_EQ(r.partition.community_of(3), 0u);
    EXPECT_EQ(r.partition.sorted_sizes(), (std::vector<std::size_t>{3, 3}));
}

TEST(Perturb, EdgeBasedNeedsABoundaryEdge) {
    Partition truth;
    const Graph g = cliques({3, 3}, &truth);
    EXPECT_THROW(perturb_edge_based(g, truth, 0.5, 1), DataError);
}

TEST(Perturb, EdgeBasedSwapCount) {
    Partition truth;
    const Graph g = bridged_triangles(&truth);
    // A swapped edge stays inter-community, so the boundary never empties here.
    const auto r = perturb_edge_based(g, truth, 0.5, 4);
    EXPECT_EQ(r.requested_swaps, 4u);
    EXPECT_EQ(r.performed_swaps, 4u);
}

TEST(Perturb, RandomNeedsTwoCommunities) {
    const Graph g = cliques({4});
    EXPECT_THROW(perturb_random(g, Partition::whole(4), 0.2, 1), DataError);
}

TEST(Perturb, CommunityBasedSkipsIsolatedCommunity) {
    // Community 2 (vertices 6..8) has no boundary edge.
    const Graph g = make_graph(9, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}, {6, 7}, {7, 8}, {6, 8}});
    const Partition truth({0, 0, 0, 1, 1, 1, 2, 2, 2});
    const auto r = perturb_community_based(g, truth, 0.3, 2);
    EXPECT_EQ(r.skipped_communities, std::vector<CommunityId>{2});
    EXPECT_EQ(r.per_community_swaps[2], 0u);
    EXPECT_GT(r.performed_swaps, 0u);
}

TEST(Perturb, IntensityOutOfRangeRejected) {
    const auto gen = generate(PlantedPartition{2, 10, 0.6, 0.1, 1});
    for (auto s : kAll) {
        EXPECT_THROW(perturb(s, gen.graph, gen.truth, -0.1, 1), DataError);
        EXPECT_THROW(perturb(s, gen.graph, gen.truth, 0.6, 1), DataError);
    }
}

TEST(Perturb, SizesPreserved) {
    const auto gen = generate(PlantedPartition{5, 12, 0.5, 0.1, 8});
    for (auto s : kAll)
        for (double p : {0.05, 0.2, 0.5}) {
            const auto r = perturb(s, gen.graph, gen.truth, p, 17);
            EXPECT_EQ(r.partition.sorted_sizes(), gen.truth.sorted_sizes());
            EXPECT_TRUE(r.partition.check_invariants());
            EXPECT_LE(r.performed_swaps, r.requested_swaps);
        }
}

TEST(Perturb, HalfIntensityDestroysTruth) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto gen = generate(PlantedPartition{4, 25, 0.8, 0.05, seed});
        const auto r = perturb_edge_based(gen.graph, gen.truth, 0.5, seed);
        EXPECT_LT(nmi(r.partition, gen.truth), 0.5);
    }
}

TEST(Sweep, ZeroGridNormalisesToOne) {
    const auto gen = generate(PlantedPartition{3, 10, 0.7, 0.05, 2});
    const std::vector<double> grid{0.0};
    for (auto s : kAll) {
        const auto r = sweep(gen.graph, gen.truth, s, grid, 3, 1);
        ASSERT_EQ(r.points.size(), 1u);
        EXPECT_EQ(r.points[0].normalized.modularity, 1.0);
        EXPECT_EQ(r.points[0].normalized.mean_conductance_complement, 1.0);
        EXPECT_EQ(r.points[0].normalized.mean_cutratio_complement, 1.0);
        EXPECT_EQ(r.points[0].normalized.graph_permanence, 1.0);
    }
}

TEST(Sweep, DeterministicAndValidated) {
    const auto gen = generate(PlantedPartition{3, 10, 0.7, 0.05, 2});
    const std::vector<double> grid{0.0, 0.1, 0.3};
    const auto a = sweep(gen.graph, gen.truth, PerturbationStrategy::random, grid, 4, 9);
    const auto b = sweep(gen.graph, gen.truth, PerturbationStrategy::random, grid, 4, 9);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        EXPECT_EQ(a.points[i].raw.graph_permanence, b.points[i].raw.graph_permanence);
        EXPECT_EQ(a.points[i].effective_p, b.points[i].effective_p);
    }
    const std::vector<double> descending{0.2, 0.1};
    EXPECT_THROW(sweep(gen.graph, gen.truth, PerturbationStrategy::random, descending, 2, 1), DataError);
    EXPECT_THROW(sweep(gen.graph, gen.truth, PerturbationStrategy::random, grid, 0, 1), DataError);
}

TEST(Strategy, NamesRoundTrip) {
    for (auto s : kAll)
        EXPECT_EQ(parse_perturbation_strategy(to_string(s)), s);
    EXPECT_THROW(parse_perturbation_strategy("bogus"), DataError);
}
