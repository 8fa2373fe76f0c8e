#include "perm/lemma_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "perm/rng.hpp"
#include "perm/scoring.hpp"

namespace perm {

std::string to_string(Wiring w) { return w == Wiring::tight ? "tight" : "sparse"; }

namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

struct BuiltSide {
    std::vector<VertexId> members;
    std::vector<VertexId> attached;
};

void add_clique(EdgeList& edges, const std::vector<VertexId>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            edges.emplace_back(vs[i], vs[j]);
}

BuiltSide build_side(const SideSpec& spec, VertexId& next, EdgeList& edges) {
    if (spec.attach == 0)
        throw DataError("each side needs at least one vertex adjacent to v");
    BuiltSide side;
    auto fresh = [&] {
        side.members.push_back(next);
        return next++;
    };

    if (spec.wiring == Wiring::tight) {
        const std::size_t k = spec.group_size;
        if (k < 2 || spec.attach % k != 0)
            throw DataError("tight wiring needs group_size >= 2 dividing attach");
        if (spec.extra == 1)
            throw DataError("an extra clique needs at least two vertices");
        for (std::size_t g = 0; g < spec.attach / k; ++g) {
            std::vector<VertexId> group;
            for (std::size_t i = 0; i < k; ++i)
                group.push_back(fresh());
            add_clique(edges, group);
            side.attached.insert(side.attached.end(), group.begin(), group.end());
        }
        std::vector<VertexId> extra;
        for (std::size_t i = 0; i < spec.extra; ++i)
            extra.push_back(fresh());
        add_clique(edges, extra);
        return side;
    }

    const std::size_t I = spec.internal_degree;
    const std::size_t c = spec.core_size == 0 ? I + 2 : spec.core_size;
    if (I == 0 || c < I || c < 2)
        throw DataError("sparse wiring needs 1 <= internal_degree <= core_size and core_size >= 2");
    const bool clique = spec.core_reach == 0 || 2 * spec.core_reach >= c;
    std::vector<VertexId> core;
    for (std::size_t i = 0; i < c; ++i)
        core.push_back(fresh());
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = i + 1; j < c; ++j) {
            const std::size_t d = std::min(j - i, c - (j - i));
            if (clique || d <= spec.core_reach)
                edges.emplace_back(core[i], core[j]);
        }
    for (std::size_t i = 0; i < spec.attach; ++i) {
        const VertexId a = fresh();
        side.attached.push_back(a);
        for (std::size_t j = 0; j < I; ++j)
            edges.emplace_back(a, core[(i + j) % c]);
    }
    return side;
}

constexpr CommunityId kA = 0, kB = 1, kV = 2;

} // namespace

Partition case_partition(const LemmaScenario& s, int which) {
    if (which < 1 || which > 4)
        throw DataError("case must be 1..4");
    std::vector<CommunityId> assignment(s.graph.vertex_count(), kA);
    for (VertexId b : s.community_b)
        assignment[b] = which == 3 ? kA : kB;
    assignment[s.v] = which == 1 || which == 3 ? kA : which == 2 ? kB : kV;
    return Partition(std::move(assignment));
}

LemmaScenario build_lemma_scenario(const SideSpec& a, const SideSpec& b, std::uint64_t rng_seed) {
    EdgeList edges;
    VertexId next = 0;
    const BuiltSide side_a = build_side(a, next, edges);
    const BuiltSide side_b = build_side(b, next, edges);
    const VertexId v = next++;
    for (VertexId x : side_a.attached)
        edges.emplace_back(v, x);
    for (VertexId x : side_b.attached)
        edges.emplace_back(v, x);

    const std::size_t n = next;
    const auto relabel = random_order(n, derive_seed(rng_seed, "lemma_scenario"));
    for (auto& [x, y] : edges) {
        x = relabel[x];
        y = relabel[y];
    }
    auto map_all = [&](const std::vector<VertexId>& in) {
        std::vector<VertexId> out;
        for (VertexId x : in)
            out.push_back(relabel[x]);
        std::sort(out.begin(), out.end());
        return out;
    };

    LemmaScenario s;
    s.graph = Graph::from_edges(n, edges);
    s.v = relabel[v];
    s.community_a = map_all(side_a.members);
    s.community_b = map_all(side_b.members);
    s.n_alpha = map_all(side_a.attached);
    s.n_beta = map_all(side_b.attached);
    s.spec_a = a;
    s.spec_b = b;

    LemmaSymbols& sym = s.symbols;
    sym.alpha = static_cast<double>(s.n_alpha.size());
    sym.beta = static_cast<double>(s.n_beta.size());

    const Partition p1 = case_partition(s, 1);
    const Partition p2 = case_partition(s, 2);
    const Partition p4 = case_partition(s, 4);

    s.homogeneous = true;
    auto side_means = [&](const std::vector<VertexId>& nbrs, const Partition& joined, double& I, double& C,
                          double& C_after) {
        const std::size_t first = vertex_permanence(s.graph, p4, nbrs.front()).internal_degree;
        for (VertexId x : nbrs) {
            const auto before = vertex_permanence(s.graph, p4, x);
            const auto after = vertex_permanence(s.graph, joined, x);
            if (before.internal_degree != first)
                s.homogeneous = false;
            I += static_cast<double>(before.internal_degree);
            C += before.internal_cc;
            C_after += after.internal_cc;
        }
        const auto k = static_cast<double>(nbrs.size());
        I /= k;
        C /= k;
        C_after /= k;
    };
    side_means(s.n_alpha, p1, sym.I_alpha, sym.C_A, sym.C_alpha);
    side_means(s.n_beta, p2, sym.I_beta, sym.C_B, sym.C_beta);
    sym.Cv_A = vertex_permanence(s.graph, p1, s.v).internal_cc;
    sym.Cv_B = vertex_permanence(s.graph, p2, s.v).internal_cc;

    std::vector<char> touched(n, 0);
    touched[s.v] = 1;
    for (VertexId x : s.n_alpha)
        touched[x] = 1;
    for (VertexId x : s.n_beta)
        touched[x] = 1;
    for (VertexId x = 0; x < n; ++x)
        if (!touched[x])
            sym.P_x += vertex_permanence(s.graph, p4, x).permanence;
    return s;
}

FourCaseResult four_case_totals(const LemmaScenario& s) {
    FourCaseResult r;
    double* totals[] = {&r.p_case1, &r.p_case2, &r.p_case3, &r.p_case4};
    for (int c = 1; c <= 4; ++c) {
        const Partition p = case_partition(s, c);
        double sum = 0.0;
        for (VertexId x = 0; x < s.graph.vertex_count(); ++x)
            sum += vertex_permanence(s.graph, p, x).permanence;
        *totals[c - 1] = sum;
        if (c == 3)
            r.merged_cc = vertex_permanence(s.graph, p, s.v).internal_cc;
    }

    const LemmaSymbols& y = s.symbols;
    const double a = y.alpha, b = y.beta;
    const double sep_a = a * (y.I_alpha / (y.I_alpha + 1.0) - (1.0 - y.C_A));
    const double sep_b = b * (y.I_beta / (y.I_beta + 1.0) - (1.0 - y.C_B));
    const double merged = (a * (a - 1.0) * y.Cv_A + b * (b - 1.0) * y.Cv_B) / ((a + b) * (a + b - 1.0));
    r.closed_case1 = y.P_x + a * y.C_alpha + a / ((a + b) * b) - (1.0 - y.Cv_A) + sep_b;
    r.closed_case2 = y.P_x + sep_a + b / ((a + b) * a) - (1.0 - y.Cv_B) + b * y.C_beta;
    r.closed_case3 = y.P_x + a * y.C_alpha + merged + b * y.C_beta;
    r.closed_case4 = y.P_x + sep_a + sep_b;

    const double head = (a - b) / (a * b) + (y.Cv_A - y.Cv_B);
    r.z1 = head + a / (y.I_alpha + 1.0) - b / (y.I_beta + 1.0);
    r.z2 = head + a * (1.0 - 2.0 * y.C_A) / (y.I_alpha + 1.0) - b * (1.0 - 2.0 * y.C_B) / (y.I_beta + 1.0);
    r.z2_literal = head + a * (y.C_A + 1.0) / (y.I_alpha + 1.0) - b * (y.C_B + 1.0) / (y.I_beta + 1.0);

    const double x_head = a / ((a + b) * b) - b / (y.I_beta + 1.0) - 1.0;
    const double pairs = (a + b) * (a + b - 1.0);
    r.x_lemma2 = x_head + (b * (b - 1.0) * (y.Cv_A - y.Cv_B) + 2.0 * a * b * y.Cv_A) / pairs;
    r.x_lemma2_literal = x_head + (b * (b - 1.0) * (y.Cv_A + y.Cv_B) + 2.0 * a * b * y.Cv_A) / pairs;

    const double g = a / b;
    r.x_lemma2_gamma = g / ((g + 1.0) * b) - 1.0 + y.Cv_A - b / (y.I_beta + 1.0) -
                       (g * (g - 1.0 / b) * y.Cv_A + (1.0 - 1.0 / b) * y.Cv_B) / ((g + 1.0) * (g + 1.0 - 1.0 / b));
    r.x_lemma2_gamma_approx = g / ((g + 1.0) * b) - 1.0 +
                              (y.Cv_A * (2.0 * g + 1.0) - y.Cv_B) / ((g + 1.0) * (g + 1.0)) - b / (y.I_beta + 1.0);
    return r;
}

int sign_tol(double x, double tol) { return x > tol ? 1 : x < -tol ? -1 : 0; }

namespace {

constexpr double kTol = 1e-9;

bool is_tight(double C, double C_after) { return std::abs(C_after - C) <= kTol; }
bool is_sparse(double C, double C_after, double I) { return std::abs(C_after - C * (I - 1.0) / (I + 1.0)) <= kTol; }

LemmaVerdict verdict(std::string id, std::string comparison) {
    LemmaVerdict v;
    v.id = std::move(id);
    v.comparison = std::move(comparison);
    v.literal = std::numeric_limits<double>::quiet_NaN();
    return v;
}

void settle(LemmaVerdict& v, double predicted, double oracle) {
    v.applicable = true;
    v.predicted = predicted;
    v.oracle = oracle;
    v.agree = sign_tol(predicted) == sign_tol(oracle);
    if (!std::isnan(v.literal))
        v.literal_agree = sign_tol(v.literal) == sign_tol(oracle);
}

} // namespace

std::vector<LemmaVerdict> lemma_check(const LemmaScenario& s) { return lemma_check(s, four_case_totals(s)); }

std::vector<LemmaVerdict> lemma_check(const LemmaScenario& s, const FourCaseResult& t) {
    const LemmaSymbols& y = s.symbols;
    const double a = y.alpha, b = y.beta;
    const bool tight_a = is_tight(y.C_A, y.C_alpha);
    const bool tight_b = is_tight(y.C_B, y.C_beta);
    const bool sparse_a = is_sparse(y.C_A, y.C_alpha, y.I_alpha);
    const bool sparse_b = is_sparse(y.C_B, y.C_beta, y.I_beta);
    const bool both_tight = tight_a && tight_b;
    const bool both_sparse = sparse_a && sparse_b;
    const double merged = (a * (a - 1.0) * y.Cv_A + b * (b - 1.0) * y.Cv_B) / ((a + b) * (a + b - 1.0));
    const double d13 = t.p_case1 - t.p_case3;
    const double d14 = t.p_case1 - t.p_case4;

    std::vector<LemmaVerdict> out;
    auto skip = [&](LemmaVerdict v, const std::string& why) {
        v.reason = why;
        out.push_back(std::move(v));
    };
    const std::string heterogeneous = "neighbourhood internal degrees differ";

    {
        auto v = verdict("lemma1", "case1-case2");
        if (!s.homogeneous)
            skip(v, heterogeneous);
        else if (both_tight) {
            settle(v, t.z1, t.p_case1 - t.p_case2);
            out.push_back(v);
        } else if (both_sparse) {
            v.literal = t.z2_literal;
            settle(v, t.z2, t.p_case1 - t.p_case2);
            out.push_back(v);
        } else
            skip(v, "wiring is neither tight nor sparse on both sides");
    }
    {
        auto v = verdict("lemma2", "case1-case3");
        if (!s.homogeneous)
            skip(v, heterogeneous);
        else if (tight_b || sparse_b) {
            const double extra = tight_b ? 0.0 : 2.0 * b * y.C_B / (y.I_beta + 1.0);
            v.literal = t.x_lemma2_literal + extra;
            settle(v, t.x_lemma2 + extra, d13);
            out.push_back(v);
        } else
            skip(v, "B wiring is neither tight nor sparse");
    }
    {
        auto v = verdict("lemma3", "case3-case4");
        const double d34 = t.p_case3 - t.p_case4;
        if (!s.homogeneous)
            skip(v, heterogeneous);
        else if (both_tight) {
            settle(v, merged + a / (y.I_alpha + 1.0) + b / (y.I_beta + 1.0), d34);
            v.agree = v.agree && sign_tol(v.predicted) > 0;
            out.push_back(v);
        } else if (both_sparse) {
            const double rest = a * (2.0 * y.C_A - 1.0) / (y.I_alpha + 1.0) + b * (2.0 * y.C_B - 1.0) / (y.I_beta + 1.0);
            const double g = a / b;
            v.literal = (g * g * y.Cv_A + y.Cv_B) / ((g + 1.0) * (g + 1.0)) - rest;
            settle(v, merged - rest, d34);
            out.push_back(v);
        } else
            skip(v, "wiring is neither tight nor sparse on both sides");
    }
    {
        auto v = verdict("lemma4", "case1-case4");
        const double tail = a / ((a + b) * b) + y.Cv_A - 1.0;
        if (!s.homogeneous)
            skip(v, heterogeneous);
        else if (both_tight) {
            settle(v, a / (y.I_alpha + 1.0) + tail, d14);
            out.push_back(v);
        } else if (both_sparse) {
            settle(v, a * (1.0 - 2.0 * y.C_A) / (y.I_alpha + 1.0) + tail, d14);
            out.push_back(v);
        } else
            skip(v, "wiring is neither tight nor sparse on both sides");
    }
    {
        auto v = verdict("corollary5", "case1-case3");
        if (!s.homogeneous)
            skip(v, heterogeneous);
        else if (b != 1.0 || !sparse_b)
            skip(v, "needs beta = 1 with sparse B");
        else if (!(y.Cv_A > 0.5 && y.C_B > 0.5))
            skip(v, "needs C^v_A > 1/2 and C_B > 1/2");
        else {
            settle(v, (2.0 * y.Cv_A - 1.0) / (a + 1.0) + (2.0 * y.C_B - 1.0) / (y.I_beta + 1.0), d13);
            v.agree = v.agree && sign_tol(d13) > 0;
            out.push_back(v);
        }
    }
    {
        auto v = verdict("corollary6", "case1-case3");
        if (!s.homogeneous)
            skip(v, heterogeneous);
        else if (!sparse_b || std::abs(y.C_B - 1.0) > kTol)
            skip(v, "needs sparse B with C_B = 1");
        else if (!(b >= y.I_beta + 1.0 && y.Cv_A >= y.Cv_B / 3.0))
            skip(v, "needs beta >= I_beta + 1 and C^v_A >= C^v_B / 3");
        else {
            settle(v, t.x_lemma2 + 2.0 * b * y.C_B / (y.I_beta + 1.0), d13);
            v.agree = v.agree && sign_tol(d13) > 0;
            out.push_back(v);
        }
    }
    {
        auto v = verdict("corollary7", "case1-case3");
        if (!s.homogeneous)
            skip(v, heterogeneous);
        else if (a != b || !sparse_b || std::abs(y.Cv_A - y.Cv_B) > kTol)
            skip(v, "needs alpha = beta, sparse B and C^v_A = C^v_B");
        else {
            settle(v, 1.0 / (2.0 * b) + y.Cv_A / 2.0 + b * (2.0 * y.C_B - 1.0) / (y.I_beta + 1.0) - 1.0, d13);
            out.push_back(v);
        }
    }
    {
        auto v = verdict("corollary8", "case1-case4");
        if (!s.homogeneous)
            skip(v, heterogeneous);
        else if (a != b || !sparse_b || !sparse_a || std::abs(y.Cv_A - y.Cv_B) > kTol)
            skip(v, "needs alpha = beta, sparse wiring and C^v_A = C^v_B");
        else {
            settle(v, a * (1.0 - 2.0 * y.C_A) / (y.I_alpha + 1.0) + 1.0 / (2.0 * a) + y.Cv_A - 1.0, d14);
            // alpha = beta = 1: separate is never worse (ties at I_alpha = 1, C_A = 0).
            if (a == 1.0)
                v.agree = v.agree && sign_tol(d14) <= 0;
            out.push_back(v);
        }
    }
    return out;
}

std::vector<std::pair<SideSpec, SideSpec>> standard_lemma_specs() {
    std::vector<std::pair<SideSpec, SideSpec>> out;
    auto tight = [](std::size_t k, std::size_t groups, std::size_t extra) {
        SideSpec s;
        s.wiring = Wiring::tight;
        s.group_size = k;
        s.attach = k * groups;
        s.extra = extra;
        return s;
    };
    auto sparse = [](std::size_t attach, std::size_t I, bool partial) {
        SideSpec s;
        s.wiring = Wiring::sparse;
        s.attach = attach;
        s.internal_degree = I;
        s.core_size = partial ? I + 3 : I + 2;
        s.core_reach = partial ? 1 : 0;
        return s;
    };

    for (std::size_t ka = 3; ka <= 5; ++ka)
        for (std::size_t ga = 1; ga <= 3; ++ga)
            for (std::size_t kb = 3; kb <= 5; ++kb)
                for (std::size_t gb = 1; gb <= 3; ++gb)
                    for (std::size_t extra : {0, 3})
                        out.emplace_back(tight(ka, ga, extra), tight(kb, gb, 0));

    for (std::size_t alpha = 1; alpha <= 8; ++alpha)
        for (std::size_t beta = 1; beta <= 8; ++beta)
            for (std::size_t ia = 1; ia <= 4; ++ia)
                for (std::size_t ib = 1; ib <= 4; ++ib)
                    for (bool partial : {false, true})
                        out.emplace_back(sparse(alpha, ia, partial), sparse(beta, ib, partial));

    for (std::size_t k = 3; k <= 12; ++k)
        for (std::size_t groups = 1; groups <= 2; ++groups)
            for (std::size_t beta = 1; beta <= 6; ++beta)
                for (std::size_t ib = 1; ib <= 7; ++ib)
                    for (std::size_t extra : {0, 4})
                        out.emplace_back(tight(k, groups, extra), sparse(beta, ib, false));
    return out;
}

std::vector<std::pair<SideSpec, SideSpec>> symmetric_sparse_specs(std::size_t max_alpha) {
    std::vector<std::pair<SideSpec, SideSpec>> out;
    for (std::size_t alpha = 1; alpha <= max_alpha; ++alpha)
        for (std::size_t I = 2; I <= 6; ++I)
            for (bool partial : {false, true}) {
                SideSpec s;
                s.wiring = Wiring::sparse;
                s.attach = alpha;
                s.internal_degree = I;
                s.core_size = partial ? I + 4 : I + 2;
                s.core_reach = partial ? 2 : 0;
                out.emplace_back(s, s);
            }
    return out;
}

} // namespace perm
