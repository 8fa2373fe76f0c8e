#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "perm/graph.hpp"

namespace perm {

// Two communities A and B joined only through a bridge vertex v, which has
// alpha neighbours in A (the set N_alpha) and beta in B (N_beta).

enum class Wiring {
    /// N_alpha is a union of k-cliques, each vertex adjacent to v; its
    /// internal clustering is unchanged when v joins.
    tight,
    /// N_alpha is independent; every a links to a window of a core graph,
    /// so v joining adds no triangle at a.
    sparse,
};

std::string to_string(Wiring w);

struct SideSpec {
    std::size_t attach = 1; ///< alpha (or beta)
    Wiring wiring = Wiring::sparse;
    /// tight: clique size k; attach must be a multiple of k.
    std::size_t group_size = 3;
    /// tight: size of an extra clique of A-vertices not adjacent to N_alpha (0 or >= 2).
    std::size_t extra = 0;
    /// sparse: internal degree of each attached vertex.
    std::size_t internal_degree = 2;
    /// sparse: core vertex count (>= internal_degree; 0 picks internal_degree + 2).
    std::size_t core_size = 0;
    /// sparse: core is a circulant graph joining vertices within this cyclic
    /// distance; 0 (or >= core_size / 2) makes it a clique.
    std::size_t core_reach = 0;
};

/// Averages over N_alpha / N_beta measured on the constructed graph.
struct LemmaSymbols {
    double alpha = 0.0;
    double beta = 0.0;
    double I_alpha = 0.0;
    double I_beta = 0.0;
    double C_A = 0.0;     ///< c_in of a in [A:v:B]
    double C_B = 0.0;
    double Cv_A = 0.0;    ///< c_in of v in [(A+v):B]
    double Cv_B = 0.0;    ///< c_in of v in [A:(v+B)]
    double C_alpha = 0.0; ///< c_in of a in [(A+v):B]
    double C_beta = 0.0;  ///< c_in of b in [A:(v+B)]
    double P_x = 0.0;     ///< permanence of the vertices outside N_alpha, N_beta, v
};

struct LemmaScenario {
    Graph graph;
    VertexId v = 0;
    std::vector<VertexId> community_a; ///< all of A
    std::vector<VertexId> community_b;
    std::vector<VertexId> n_alpha;
    std::vector<VertexId> n_beta;
    SideSpec spec_a;
    SideSpec spec_b;
    LemmaSymbols symbols;
    /// Every vertex of N_alpha shares one internal degree, likewise N_beta;
    /// the case expressions are then exact.
    bool homogeneous = false;
};

/// Builds and measures a scenario. Vertex ids are shuffled by rng_seed so
/// results cannot depend on construction order. Throws DataError for an
/// unconstructible spec.
LemmaScenario build_lemma_scenario(const SideSpec& a, const SideSpec& b, std::uint64_t rng_seed = 0);

/// Community assignment for case 1..4: [(A+v):B], [A:(v+B)], [(A+v+B)], [A:v:B].
Partition case_partition(const LemmaScenario& s, int which);

struct FourCaseResult {
    double p_case1 = 0.0; ///< exact sums over every scenario vertex
    double p_case2 = 0.0;
    double p_case3 = 0.0;
    double p_case4 = 0.0;
    double closed_case1 = 0.0; ///< case expressions evaluated on the measured symbols
    double closed_case2 = 0.0;
    double closed_case3 = 0.0;
    double closed_case4 = 0.0;
    double z1 = 0.0;
    /// Sparse-wiring discriminant as derived from the case expressions.
    double z2 = 0.0;
    /// As printed, with alpha(C_A + 1)/(I_alpha + 1) terms.
    double z2_literal = 0.0;
    /// Case 1 minus case 3 for C^beta = C_B, derived from the case expressions.
    double x_lemma2 = 0.0;
    /// As printed, with beta(beta-1)(C^v_A + C^v_B).
    double x_lemma2_literal = 0.0;
    /// The gamma = alpha/beta rewrite before any term is dropped; equals x_lemma2.
    double x_lemma2_gamma = 0.0;
    /// The gamma rewrite after dropping the 1/beta corrections (approximate).
    double x_lemma2_gamma_approx = 0.0;
    /// Vertex c_in of v in the merged community.
    double merged_cc = 0.0;
};

FourCaseResult four_case_totals(const LemmaScenario& s);

struct LemmaVerdict {
    std::string id; ///< lemma1..lemma4, corollary5..corollary8
    bool applicable = false;
    std::string reason; ///< why the hypotheses fail, when not applicable
    std::string comparison; ///< e.g. "case1-case2"
    double predicted = 0.0; ///< closed-form discriminant
    double oracle = 0.0;    ///< exact difference of the compared cases
    bool agree = false;
    /// Discriminant as printed when it differs from `predicted`; NaN otherwise.
    double literal = 0.0;
    bool literal_agree = false;
};

/// Sign with a dead zone: |x| <= tol counts as 0.
int sign_tol(double x, double tol = 1e-9);

std::vector<LemmaVerdict> lemma_check(const LemmaScenario& s);
/// lemma_check plus the four totals (avoids recomputing them).
std::vector<LemmaVerdict> lemma_check(const LemmaScenario& s, const FourCaseResult& totals);

/// A fixed family of constructions exercising every lemma and corollary
/// with homogeneous neighbourhoods: tight/tight, sparse/sparse and
/// tight/sparse pairs over a grid of sizes.
std::vector<std::pair<SideSpec, SideSpec>> standard_lemma_specs();

/// Symmetric sparse pairs with alpha = beta in 1..max_alpha and C_A = C_B > 0.5.
std::vector<std::pair<SideSpec, SideSpec>> symmetric_sparse_specs(std::size_t max_alpha = 5);

} // namespace perm
