#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "perm/lemma_lab.hpp"
#include "perm/scoring.hpp"

using namespace perm;

namespace {

SideSpec sparse(std::size_t attach, std::size_t internal_degree, std::size_t core_size = 0, std::size_t reach = 0) {
    SideSpec s;
    s.attach = attach;
    s.wiring = Wiring::sparse;
    s.internal_degree = internal_degree;
    s.core_size = core_size;
    s.core_reach = reach;
    return s;
}

SideSpec tight(std::size_t attach, std::size_t k, std::size_t extra = 0) {
    SideSpec s;
    s.attach = attach;
    s.wiring = Wiring::tight;
    s.group_size = k;
    s.extra = extra;
    return s;
}

const LemmaVerdict& find(const std::vector<LemmaVerdict>& vs, const std::string& id) {
    return *std::find_if(vs.begin(), vs.end(), [&](const LemmaVerdict& v) { return v.id == id; });
}

} // namespace

TEST(Scenario, SingleBridgeEdges) {
    const auto s = build_lemma_scenario(sparse(1, 2), sparse(1, 2), 3);
    EXPECT_EQ(s.graph.degree(s.v), 2u);
    EXPECT_EQ(s.symbols.alpha, 1.0);
    EXPECT_EQ(s.symbols.beta, 1.0);
    EXPECT_TRUE(s.graph.has_edge(s.v, s.n_alpha[0]));
    EXPECT_TRUE(s.graph.has_edge(s.v, s.n_beta[0]));
    EXPECT_TRUE(s.graph.check_invariants());
}

TEST(Scenario, TightCliqueGivesFullClustering) {
    const auto s = build_lemma_scenario(tight(4, 4), sparse(2, 2), 1);
    EXPECT_EQ(s.symbols.Cv_A, 1.0);
    EXPECT_EQ(s.symbols.C_alpha, s.symbols.C_A);
    EXPECT_TRUE(s.homogeneous);
}

TEST(Scenario, SparseNeighbourhoodHasNoClustering) {
    const auto s = build_lemma_scenario(sparse(3, 2), sparse(1, 2), 1);
    EXPECT_EQ(s.symbols.Cv_A, 0.0);
    const double I = s.symbols.I_alpha;
    EXPECT_NEAR(s.symbols.C_alpha, s.symbols.C_A * (I - 1) / (I + 1), 1e-12);
}

TEST(Scenario, ShuffleDoesNotChangeTotals) {
    const auto a = four_case_totals(build_lemma_scenario(tight(6, 3, 4), sparse(2, 3, 6, 2), 0));
    const auto b = four_case_totals(build_lemma_scenario(tight(6, 3, 4), sparse(2, 3, 6, 2), 99));
    EXPECT_NEAR(a.p_case1, b.p_case1, 1e-9);
    EXPECT_NEAR(a.p_case3, b.p_case3, 1e-9);
}

TEST(Scenario, BadSpecThrows) {
    EXPECT_THROW(build_lemma_scenario(tight(5, 3), sparse(1, 2)), DataError);
    EXPECT_THROW(build_lemma_scenario(sparse(0, 2), sparse(1, 2)), DataError);
}

TEST(FourCases, PartitionsHaveExpectedShape) {
    const auto s = build_lemma_scenario(sparse(2, 2), sparse(2, 2), 4);
    EXPECT_EQ(case_partition(s, 1).community_count(), 2u);
    EXPECT_EQ(case_partition(s, 3).community_count(), 1u);
    EXPECT_EQ(case_partition(s, 4).community_count(), 3u);
    EXPECT_EQ(case_partition(s, 1).community_of(s.v), case_partition(s, 1).community_of(s.n_alpha[0]));
    EXPECT_EQ(case_partition(s, 2).community_of(s.v), case_partition(s, 2).community_of(s.n_beta[0]));
}

TEST(FourCases, SymmetricSidesTie) {
    const auto f = four_case_totals(build_lemma_scenario(sparse(3, 3, 5), sparse(3, 3, 5), 2));
    EXPECT_NEAR(f.p_case1, f.p_case2, 1e-9);
}

TEST(FourCases, ClosedFormsMatchExactTotals) {
    for (const auto& [a, b] : standard_lemma_specs()) {
        const auto s = build_lemma_scenario(a, b, 8);
        if (!s.homogeneous)
            continue;
        const auto f = four_case_totals(s);
        EXPECT_NEAR(f.closed_case1, f.p_case1, 1e-9);
        EXPECT_NEAR(f.closed_case2, f.p_case2, 1e-9);
        EXPECT_NEAR(f.closed_case3, f.p_case3, 1e-9);
        EXPECT_NEAR(f.closed_case4, f.p_case4, 1e-9);
        EXPECT_NEAR(f.x_lemma2_gamma, f.x_lemma2, 1e-9);
    }
}

TEST(FourCases, DenseSymmetricBridgeStaysAlone) {
    for (std::size_t alpha = 1; alpha <= 4; ++alpha) {
        const auto f = four_case_totals(build_lemma_scenario(sparse(alpha, 3), sparse(alpha, 3), alpha));
        EXPECT_GT(f.p_case4, std::max({f.p_case1, f.p_case2, f.p_case3}) + 1e-9) << "alpha " << alpha;
    }
}

TEST(FourCases, SingleTieToSparseBPrefersA) {
    // beta = 1 into a sparse B: joining A beats merging everything.
    const auto s = build_lemma_scenario(tight(4, 4), sparse(1, 3), 5);
    const auto f = four_case_totals(s);
    EXPECT_GT(f.p_case1, f.p_case3);
    EXPECT_TRUE(find(lemma_check(s, f), "corollary5").applicable);
}

TEST(Verdicts, TightPairUsesFirstDiscriminant) {
    const auto s = build_lemma_scenario(tight(6, 3), tight(3, 3), 6);
    const auto f = four_case_totals(s);
    const auto& l1 = find(lemma_check(s, f), "lemma1");
    ASSERT_TRUE(l1.applicable);
    EXPECT_EQ(l1.predicted, f.z1);
    EXPECT_TRUE(l1.agree);
    EXPECT_TRUE(std::isnan(l1.literal));
}

TEST(Verdicts, SparsePairCarriesLiteralForm) {
    const auto s = build_lemma_scenario(sparse(4, 2), sparse(2, 3), 7);
    const auto vs = lemma_check(s);
    const auto& l1 = find(vs, "lemma1");
    ASSERT_TRUE(l1.applicable);
    EXPECT_FALSE(std::isnan(l1.literal));
    EXPECT_TRUE(l1.agree);
    EXPECT_TRUE(find(vs, "lemma2").agree);
    EXPECT_TRUE(find(vs, "lemma3").agree);
    EXPECT_TRUE(find(vs, "lemma4").agree);
}

TEST(Verdicts, SkipReasonsAreReported) {
    const auto s = build_lemma_scenario(tight(3, 3), sparse(2, 2), 1);
    const auto vs = lemma_check(s);
    EXPECT_EQ(vs.size(), 8u);
    const auto& l1 = find(vs, "lemma1");
    EXPECT_FALSE(l1.applicable);
    EXPECT_FALSE(l1.reason.empty());
    EXPECT_FALSE(find(vs, "corollary5").applicable);
    EXPECT_NE(find(vs, "corollary5").reason.find("beta = 1"), std::string::npos);
}

TEST(Verdicts, SignDeadZone) {
    EXPECT_EQ(sign_tol(1e-12), 0);
    EXPECT_EQ(sign_tol(-1e-3), -1);
    EXPECT_EQ(sign_tol(2.0), 1);
}

TEST(Families, StandardCoversEveryIdentity) {
    std::map<std::string, std::size_t> applicable;
    std::size_t i = 0;
    for (const auto& [a, b] : standard_lemma_specs()) {
        const auto s = build_lemma_scenario(a, b, i++);
        for (const auto& v : lemma_check(s))
            applicable[v.id] += v.applicable;
    }
    ASSERT_EQ(applicable.size(), 8u);
    for (const auto& [id, n] : applicable)
        EXPECT_GT(n, 0u) << id;
}

TEST(Families, SymmetricSparseSpecsAreSymmetric) {
    const auto specs = symmetric_sparse_specs(3);
    ASSERT_FALSE(specs.empty());
    for (const auto& [a, b] : specs) {
        EXPECT_EQ(a.attach, b.attach);
        EXPECT_LE(a.attach, 3u);
        const auto s = build_lemma_scenario(a, b, 0);
        EXPECT_GT(s.symbols.C_A, 0.5);
        EXPECT_NEAR(s.symbols.C_A, s.symbols.C_B, 1e-12);
    }
}
