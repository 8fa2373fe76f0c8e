#include <gtest/gtest.h>

#include <filesystem>

#include "perm/generators.hpp"
#include "perm/io.hpp"
#include "support.hpp"

using namespace perm;
using namespace testing_support;

TEST(EdgeList, PathGraph) {
    const auto g = load_edge_list("a b\nb c").graph;
    EXPECT_EQ(g.vertex_count(), 3u);
    EXPECT_EQ(g.edge_count(), 2u);
    EXPECT_EQ(g.label(0), "a");
    EXPECT_TRUE(g.has_edge(g.id_of("a"), g.id_of("b")));
    EXPECT_FALSE(g.has_edge(g.id_of("a"), g.id_of("c")));
}

TEST(EdgeList, DuplicatesAndSelfLoopsDropped) {
    const auto r = load_edge_list("a b\nb a\na a");
    EXPECT_EQ(r.graph.vertex_count(), 2u);
    EXPECT_EQ(r.graph.edge_count(), 1u);
    EXPECT_EQ(r.dropped_self_loops, 1u);
}

TEST(EdgeList, CommentsAndBlankLinesIgnored) {
    const auto g = load_edge_list("# header\n\na\tb\n  \nb c\n").graph;
    EXPECT_EQ(g.edge_count(), 2u);
}

TEST(EdgeList, MalformedLineReportsLineNumber) {
    try {
        load_edge_list("a b\nb c d\n");
        FAIL() << "no error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
}

TEST(EdgeList, EmptyInputIsAnError) {
    EXPECT_THROW(load_edge_list(""), DataError);
    EXPECT_THROW(load_edge_list("# only a comment\n"), DataError);
}

TEST(EdgeList, RoundTrip) {
    const auto gen = generate(RingOfCliques{4, 4});
    const auto back = load_edge_list(write_edge_list(gen.graph)).graph;
    EXPECT_EQ(back.edge_count(), gen.graph.edge_count());
    for (auto [u, v] : gen.graph.edges())
        EXPECT_TRUE(back.has_edge(back.id_of(std::to_string(u)), back.id_of(std::to_string(v))));
}

TEST(PartitionFile, OneCommunity) {
    const auto g = load_edge_list("a b\nb c").graph;
    const auto p = load_partition("a x\nb x\nc x\n", g);
    EXPECT_EQ(p.community_count(), 1u);
    EXPECT_EQ(p.community_label(0), "x");
}

TEST(PartitionFile, DuplicateVertexIsAnError) {
    const auto g = load_edge_list("a b\nb c").graph;
    EXPECT_THROW(load_partition("a x\nb x\nc y\na y\n", g), DataError);
}

TEST(PartitionFile, MissingVerticesAreListed) {
    const auto g = load_edge_list("a b\nb c\nc d").graph;
    try {
        load_partition("a x\nc x\n", g);
        FAIL() << "no error";
    } catch (const DataError& e) {
        const std::string what = e.what();
        EXPECT_NE(what.find('b'), std::string::npos);
        EXPECT_NE(what.find('d'), std::string::npos);
    }
}

TEST(PartitionFile, UnknownVertexIsAnError) {
    const auto g = load_edge_list("a b").graph;
    EXPECT_THROW(load_partition("a x\nb x\nz x\n", g), ParseError);
}

TEST(PartitionFile, RoundTripKeepsGrouping) {
    const auto gen = generate(PlantedPartition{3, 6, 0.9, 0.1, 4});
    const auto back = load_partition(write_partition(gen.graph, gen.truth), gen.graph);
    EXPECT_TRUE(back.same_grouping(gen.truth));
}

TEST(Partition, MembersStayInverseOfAssignment) {
    Partition p({0, 0, 1, 1, 2});
    p.move(0, 2);
    p.swap_members(1, 2);
    p.move(4, 7);
    EXPECT_TRUE(p.check_invariants());
    EXPECT_EQ(p.community_of(0), 2u);
    EXPECT_EQ(p.community_of(1), 1u);
    EXPECT_EQ(p.community_of(2), 0u);
    EXPECT_EQ(p.community_of(4), 7u);
    EXPECT_EQ(p.community_count(), 4u);
}

TEST(Partition, CanonicalFormIdentifiesGroupings) {
    EXPECT_TRUE(Partition({5, 5, 2, 9}).same_grouping(Partition({0, 0, 1, 2})));
    EXPECT_FALSE(Partition({0, 1, 1}).same_grouping(Partition({0, 0, 1})));
}

TEST(Generators, RingOfCliquesCounts) {
    const auto gen = generate(RingOfCliques{10, 5});
    EXPECT_EQ(gen.graph.vertex_count(), 50u);
    EXPECT_EQ(gen.graph.edge_count(), 110u);
    EXPECT_EQ(gen.truth.community_count(), 10u);
    EXPECT_TRUE(gen.graph.check_invariants());
}

TEST(Generators, GridCountsAndNoTriangles) {
    const auto g = generate(Grid{5, 5}).graph;
    EXPECT_EQ(g.vertex_count(), 25u);
    EXPECT_EQ(g.edge_count(), 40u);
    for (VertexId v = 0; v < 25; ++v)
        for (VertexId a : g.neighbors(v))
            for (VertexId b : g.neighbors(v))
                EXPECT_FALSE(a < b && g.has_edge(a, b));
}

TEST(Generators, DegeneratePlantedPartitionIsDisjointCliques) {
    const auto gen = generate(PlantedPartition{4, 25, 1.0, 0.0, 99});
    EXPECT_EQ(gen.graph.edge_count(), 4u * 300u);
    for (auto [u, v] : gen.graph.edges())
        EXPECT_EQ(gen.truth.community_of(u), gen.truth.community_of(v));
}

TEST(Generators, PlantedPartitionIsSeedDeterministic) {
    const auto a = generate(PlantedPartition{3, 20, 0.5, 0.05, 1});
    const auto b = generate(PlantedPartition{3, 20, 0.5, 0.05, 1});
    const auto c = generate(PlantedPartition{3, 20, 0.5, 0.05, 2});
    EXPECT_TRUE(a.graph == b.graph);
    EXPECT_FALSE(a.graph == c.graph);
}

TEST(Generators, InvalidSpecsRejected) {
    EXPECT_THROW(generate(RingOfCliques{2, 5}), DataError);
    EXPECT_THROW(generate(Grid{1, 5}), DataError);
    EXPECT_THROW(generate(PlantedPartition{4, 10, 0.1, 0.2, 0}), DataError);
}

TEST(Football, LoadsWithPublishedShape) {
    const std::filesystem::path dir = PERM_DATA_DIR;
    if (!std::filesystem::exists(dir / "football.edges") || !std::filesystem::exists(dir / "football.truth"))
        GTEST_SKIP() << "football dataset not present in " << dir;
    const auto g = load_edge_list(read_text_file(dir / "football.edges")).graph;
    EXPECT_EQ(g.vertex_count(), 115u);
    EXPECT_EQ(g.edge_count(), 613u);
    const auto truth = load_partition(read_text_file(dir / "football.truth"), g);
    EXPECT_EQ(truth.community_count(), 12u);
    const auto sizes = truth.sorted_sizes();
    EXPECT_GE(sizes.front(), 5u);
    EXPECT_LE(sizes.back(), 13u);
}
