#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>

#include "oracles/oracles.hpp"
#include "perm/generators.hpp"
#include "perm/io.hpp"
#include "perm/scoring.hpp"
#include "support.hpp"

using namespace perm;
using namespace testing_support;

TEST(Permanence, CliqueInteriorIsOne) {
    Partition truth;
    const Graph g = cliques({5}, &truth);
    for (VertexId v = 0; v < 5; ++v)
        EXPECT_EQ(vertex_permanence(g, truth, v).permanence, 1.0);
}

TEST(Permanence, SingletonIsZero) {
    const Graph g = cliques({4});
    const auto b = vertex_permanence(g, Partition({0, 1, 1, 1}), 0);
    EXPECT_EQ(b.permanence, 0.0);
}

TEST(Permanence, HandWorkedExample) {
    // v = 0; internal 1, 2, 3 form a triangle; externals 4, 5 in X and 6, 7 in Y.
    const Graph g = make_graph(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7},
                                   {4, 5}, {6, 7}});
    // D = 7 here, matching the worked value 3/14 with E_max = 2.
    const Partition p({0, 0, 0, 0, 1, 1, 2, 2});
    const auto b = vertex_permanence(g, p, 0);
    EXPECT_EQ(b.internal_degree, 3u);
    EXPECT_EQ(b.degree, 7u);
    EXPECT_EQ(b.max_external, 2u);
    EXPECT_EQ(b.internal_cc, 1.0);
    EXPECT_NEAR(b.permanence, 3.0 / 14.0, 1e-15);
}

TEST(Permanence, IsolatedVertexFlagged) {
    const Graph g = make_graph(3, {{0, 1}});
    const auto b = vertex_permanence(g, Partition({0, 0, 0}), 2);
    EXPECT_TRUE(b.isolated);
    EXPECT_EQ(b.permanence, 0.0);
}

TEST(Permanence, ZeroInternalDegreeClampedAboveMinusOne) {
    // 0 shares a community with 2 but is only linked to 1.
    const Graph g = make_graph(3, {{0, 1}});
    const auto b = vertex_permanence(g, Partition({0, 1, 0}), 0);
    EXPECT_TRUE(b.clamped);
    EXPECT_EQ(b.permanence, kPermanenceFloor);
    EXPECT_GT(b.permanence, -1.0);
}

TEST(GraphPermanence, DisjointCliquesIsOne) {
    Partition truth;
    const Graph g = cliques({3, 4, 5}, &truth);
    EXPECT_EQ(graph_permanence(g, truth), 1.0);
}

TEST(GraphPermanence, RingOfCliques) {
    const auto gen = generate(RingOfCliques{10, 5});
    EXPECT_NEAR(graph_permanence(gen.graph, gen.truth), 0.92, 1e-12);
    EXPECT_NEAR(oracle::graph_permanence(gen.graph, gen.truth), 0.92, 1e-12);
}

TEST(GraphPermanence, TriangleFreeSingleCommunityIsZero) {
    const Graph g = generate(Grid{4, 6}).graph;
    EXPECT_EQ(graph_permanence(g, Partition::whole(g.vertex_count())), 0.0);
}

TEST(GraphPermanence, EmptyGraphIsAnError) {
    EXPECT_THROW(graph_permanence(Graph::from_edges(0, {}), Partition()), DataError);
}

TEST(GraphPermanence, ParallelMatchesSerialBitForBit) {
    const auto gen = generate(PlantedPartition{6, 40, 0.3, 0.03, 3});
    EXPECT_EQ(graph_permanence(gen.graph, gen.truth), serial::graph_permanence(gen.graph, gen.truth));
    EXPECT_EQ(vertex_permanences(gen.graph, gen.truth), serial::vertex_permanences(gen.graph, gen.truth));
}

TEST(Modularity, TwoDisjointTriangles) {
    Partition truth;
    const Graph g = cliques({3, 3}, &truth);
    EXPECT_NEAR(modularity(g, truth), 0.5, 1e-15);
}

TEST(Modularity, WholeGraphIsZero) {
    const auto gen = generate(PlantedPartition{3, 15, 0.5, 0.1, 8});
    EXPECT_NEAR(modularity(gen.graph, Partition::whole(45)), 0.0, 1e-15);
}

TEST(Modularity, EdgelessGraphIsAnError) {
    EXPECT_THROW(modularity(Graph::from_edges(3, {}), Partition::whole(3)), DataError);
}

TEST(Conductance, Examples) {
    // Community {0, 1} has no edges at all: no boundary.
    const Graph g = make_graph(5, {{2, 3}, {3, 4}});
    EXPECT_EQ(conductance(g, Partition({0, 0, 1, 1, 1}), 0).value, 0.0);

    const Graph star = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    EXPECT_EQ(conductance(star, Partition({0, 1, 1, 1}), 0).value, 1.0);

    const auto ring = generate(RingOfCliques{10, 5});
    EXPECT_NEAR(conductance(ring.graph, ring.truth, 0).value, 1.0 / 11.0, 1e-15);
}

TEST(Conductance, WholeGraphIsDegenerate) {
    const Graph g = cliques({3});
    const auto s = conductance(g, Partition::whole(3), 0);
    EXPECT_TRUE(s.degenerate);
    EXPECT_EQ(s.value, 0.0);
}

TEST(CutRatio, Examples) {
    const auto ring = generate(RingOfCliques{10, 5});
    EXPECT_NEAR(cut_ratio(ring.graph, ring.truth, 0).value, 2.0 / 225.0, 1e-15);

    const Graph star = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}});
    EXPECT_NEAR(cut_ratio(star, Partition({0, 1, 1, 1, 1}), 0).value, 3.0 / 4.0, 1e-15);

    const auto whole = cut_ratio(star, Partition::whole(5), 0);
    EXPECT_TRUE(whole.degenerate);
    EXPECT_EQ(whole.value, 0.0);
}

TEST(ScoreReport, DisjointCliques) {
    Partition truth;
    const Graph g = cliques({4, 4, 4}, &truth);
    const auto r = score_report(g, truth);
    EXPECT_GT(r.modularity, 0.0);
    EXPECT_EQ(r.mean_conductance_complement, 1.0);
    EXPECT_EQ(r.mean_cutratio_complement, 1.0);
    EXPECT_EQ(r.graph_permanence, 1.0);
}

TEST(ScoreReport, GridSingleCommunity) {
    const Graph g = generate(Grid{5, 5}).graph;
    const auto r = score_report(g, Partition::whole(25));
    EXPECT_EQ(r.graph_permanence, 0.0);
    EXPECT_NEAR(r.modularity, 0.0, 1e-15);
    EXPECT_EQ(r.degenerate_communities, 1u);
}

TEST(ScoreReport, RingOfCliques) {
    const auto gen = generate(RingOfCliques{10, 5});
    const auto r = score_report(gen.graph, gen.truth);
    EXPECT_NEAR(r.graph_permanence, 0.92, 1e-12);
    EXPECT_NEAR(r.mean_conductance_complement, 10.0 / 11.0, 1e-12);
}

TEST(ScoreReport, SizeWeightedAggregation) {
    const Graph g = make_graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}});
    const Partition p({0, 0, 0, 1, 1});
    const auto u = score_report(g, p, Aggregation::unweighted);
    const auto w = score_report(g, p, Aggregation::size_weighted);
    const double phi0 = conductance(g, p, 0).value, phi1 = conductance(g, p, 1).value;
    EXPECT_NEAR(u.mean_conductance_complement, ((1 - phi0) + (1 - phi1)) / 2, 1e-15);
    EXPECT_NEAR(w.mean_conductance_complement, (3 * (1 - phi0) + 2 * (1 - phi1)) / 5, 1e-15);
}

TEST(Football, ModularityOfGroundTruth) {
    const std::filesystem::path dir = PERM_DATA_DIR;
    if (!std::filesystem::exists(dir / "football.edges") || !std::filesystem::exists(dir / "football.truth"))
        GTEST_SKIP() << "football dataset not present in " << dir;
    const auto g = load_edge_list(read_text_file(dir / "football.edges")).graph;
    const auto truth = load_partition(read_text_file(dir / "football.truth"), g);
    EXPECT_NEAR(modularity(g, truth), oracle::modularity(g, truth), 1e-12);
    EXPECT_NEAR(modularity(g, truth), 0.554, 0.01);
}
