#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "perm/analysis.hpp"
#include "perm/generators.hpp"
#include "perm/io.hpp"
#include "perm/lemma_lab.hpp"
#include "perm/maxperm.hpp"
#include "perm/perturbation.hpp"
#include "perm/rng.hpp"
#include "perm/scoring.hpp"
#include "perm/validation.hpp"

#ifndef PERM_VERSION
#define PERM_VERSION "dev"
#endif

using json = nlohmann::ordered_json;
using namespace perm;

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string num(double x) {
    if (std::isnan(x))
        return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

// JSON number carrying the same 9 significant digits as the CSV output.
json jnum(double x) {
    if (!std::isfinite(x))
        return nullptr;
    return std::strtod(num(x).c_str(), nullptr);
}

std::string csv_cell(const json& v) {
    if (v.is_null())
        return "";
    if (v.is_number_float())
        return num(v.get<double>());
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s.find_first_of(",\"\n") == std::string::npos)
            return s;
        std::string q = "\"";
        for (char ch : s)
            q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        return q + "\"";
    }
    return v.dump();
}

/// Rows of named cells, rendered as CSV (header always present) or as a
/// JSON array of objects.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<json>> rows;

    void add(std::vector<json> row) { rows.push_back(std::move(row)); }

    std::string csv() const {
        std::string out;
        for (std::size_t i = 0; i < header.size(); ++i)
            out += (i ? "," : "") + header[i];
        out += '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out += (i ? "," : "") + csv_cell(row[i]);
            out += '\n';
        }
        return out;
    }

    json to_json() const {
        json arr = json::array();
        for (const auto& row : rows) {
            json obj = json::object();
            for (std::size_t i = 0; i < header.size(); ++i)
                obj[header[i]] = row[i];
            arr.push_back(std::move(obj));
        }
        return arr;
    }
};

struct Output {
    std::string format = "csv";
    std::string out = "-";
};

struct Context {
    std::string subcommand;
    CLI::App* app = nullptr;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::uint64_t rng_seed = 0;
};

Context ctx;

void write_output(const std::string& path, const std::string& text) {
    if (path == "-" || path.empty()) {
        std::cout << text;
        return;
    }
    write_text_file(path, text);
    ctx.outputs.push_back(path);
}

void emit(const Output& o, const Table& t) {
    write_output(o.out, o.format == "json" ? t.to_json().dump(2) + "\n" : t.csv());
}

void emit(const Output& o, const json& j, const std::string& csv) {
    write_output(o.out, o.format == "json" ? j.dump(2) + "\n" : csv);
}

std::string input(const std::string& path) {
    ctx.inputs.push_back(path);
    return read_text_file(path);
}

Graph load_graph(const std::string& path) {
    auto loaded = load_edge_list(input(path));
    if (loaded.dropped_self_loops > 0)
        std::cerr << "note: dropped " << loaded.dropped_self_loops << " self-loops from " << path << "\n";
    return std::move(loaded.graph);
}

Partition load_part(const std::string& path, const Graph& g) { return load_partition(input(path), g); }

// Edgeless graph over the vertex labels of a partition file, for commands
// that compare partitions without a graph.
Graph label_universe(const std::string& text) {
    std::vector<std::string> labels;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (ls >> first && first.front() != '#')
            labels.push_back(first);
    }
    Graph g = Graph::from_edges(labels.size(), {});
    g.set_labels(std::move(labels));
    return g;
}

std::vector<double> parse_doubles(const std::string& list) {
    std::vector<double> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("not a number list: '" + list + "'");
        }
    }
    return out;
}

std::vector<std::size_t> parse_counts(const std::string& list) {
    std::vector<std::size_t> out;
    for (double d : parse_doubles(list)) {
        if (d < 0 || d != std::floor(d))
            throw UsageError("not a list of counts: '" + list + "'");
        out.push_back(static_cast<std::size_t>(d));
    }
    return out;
}

SeedStrategy parse_seed_strategy(const std::string& s) {
    if (s == "pair_wise")
        return SeedStrategy::pair_wise;
    if (s == "high_degree")
        return SeedStrategy::high_degree;
    if (s == "high_cc")
        return SeedStrategy::high_cc;
    throw UsageError("unknown seed strategy '" + s + "'");
}

void add_output(CLI::App* app, Output& o, const std::string& default_format = "csv") {
    o.format = default_format;
    app->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app->add_option("--out", o.out, "Output path ('-' for stdout)")->capture_default_str();
}

// --------------------------------------------------------------------------

struct GenerateArgs {
    Output o;
    std::string kind;
    std::size_t m = 10, k = 5, rows = 5, cols = 5, blocks = 4, block_size = 25;
    double p_in = 0.8, p_out = 0.05;
    std::uint64_t seed = 0;
    std::string truth;
};

void run_generate(const GenerateArgs& a) {
    GeneratorSpec spec;
    if (a.kind == "ring")
        spec = RingOfCliques{a.m, a.k};
    else if (a.kind == "grid")
        spec = Grid{a.rows, a.cols};
    else
        spec = PlantedPartition{a.blocks, a.block_size, a.p_in, a.p_out, a.seed};
    validate(spec);
    const auto gen = generate(spec);
    const Graph& g = gen.graph;

    std::size_t isolated = 0;
    std::string truth_text;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) {
            ++isolated;
            continue;
        }
        truth_text += g.label(v) + "\t" + std::to_string(gen.truth.community_of(v)) + "\n";
    }
    if (isolated > 0)
        std::cerr << "note: " << isolated << " isolated vertices cannot appear in an edge list and were omitted\n";

    json j;
    j["vertices"] = g.vertex_count();
    j["edges"] = json::array();
    for (auto [u, v] : g.edges())
        j["edges"].push_back({u, v});
    j["truth"] = json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        j["truth"].push_back(gen.truth.community_of(v));
    emit(a.o, j, write_edge_list(g));
    if (!a.truth.empty())
        write_output(a.truth, truth_text);
}

struct ScoreArgs {
    Output o;
    std::string graph, partition, aggregation = "unweighted";
    bool per_vertex = false;
};

void run_score(const ScoreArgs& a) {
    const Graph g = load_graph(a.graph);
    const Partition p = load_part(a.partition, g);
    const auto agg = a.aggregation == "size_weighted" ? Aggregation::size_weighted : Aggregation::unweighted;
    const ScoreReport r = score_report(g, p, agg);
    const auto rows = permanence_breakdown(g, p);
    std::size_t clamped = 0, isolated = 0;
    for (const auto& b : rows) {
        clamped += b.clamped;
        isolated += b.isolated;
    }

    Table summary{{"metric", "value"}, {}};
    summary.add({"modularity", jnum(r.modularity)});
    summary.add({"mean_conductance_complement", jnum(r.mean_conductance_complement)});
    summary.add({"mean_cutratio_complement", jnum(r.mean_cutratio_complement)});
    summary.add({"graph_permanence", jnum(r.graph_permanence)});
    summary.add({"degenerate_communities", r.degenerate_communities});
    summary.add({"clamped_vertices", clamped});
    summary.add({"isolated_vertices", isolated});

    Table detail{{"vertex_label", "community", "I", "D", "Emax", "c_in", "permanence"}, {}};
    if (a.per_vertex)
        for (const auto& b : rows)
            detail.add({g.label(b.vertex), p.community_label(p.community_of(b.vertex)), b.internal_degree, b.degree,
                        b.max_external, jnum(b.internal_cc), jnum(b.permanence)});

    json j;
    j["modularity"] = jnum(r.modularity);
    j["mean_conductance_complement"] = jnum(r.mean_conductance_complement);
    j["mean_cutratio_complement"] = jnum(r.mean_cutratio_complement);
    j["graph_permanence"] = jnum(r.graph_permanence);
    j["degenerate_communities"] = r.degenerate_communities;
    j["clamped_vertices"] = clamped;
    j["isolated_vertices"] = isolated;
    j["aggregation"] = a.aggregation;
    if (a.per_vertex)
        j["vertices"] = detail.to_json();
    emit(a.o, j, summary.csv() + (a.per_vertex ? "\n" + detail.csv() : ""));
}

struct DetectArgs {
    Output o;
    std::string graph, seed_strategy = "high_degree", order_file, acceptance = "both", scan = "first",
                       engine = "cached";
    std::size_t max_iter = 10;
    std::uint64_t seed = 0;
    bool shuffle = false;
};

DetectorConfig make_config(const Graph& g, const std::string& strategy, std::size_t max_iter, std::uint64_t seed,
                           const std::string& order_file, bool shuffle) {
    DetectorConfig cfg;
    cfg.seed_strategy = parse_seed_strategy(strategy);
    cfg.max_iterations = max_iter;
    cfg.rng_seed = seed;
    cfg.shuffle_order = shuffle;
    if (!order_file.empty()) {
        std::istringstream in(input(order_file));
        std::vector<VertexId> order;
        std::string label;
        while (in >> label)
            order.push_back(g.id_of(label));
        cfg.vertex_order = std::move(order);
    }
    return cfg;
}

void run_detect(const DetectArgs& a) {
    const Graph g = load_graph(a.graph);
    DetectorConfig cfg = make_config(g, a.seed_strategy, a.max_iter, a.seed, a.order_file, a.shuffle);
    cfg.acceptance = a.acceptance == "vertex" ? AcceptanceRule::vertex_only : AcceptanceRule::vertex_and_neighbors;
    cfg.scan = a.scan == "best" ? CandidateScan::best_so_far : CandidateScan::first_improvement;
    const auto r = a.engine == "naive" ? detect(g, cfg) : detect_with_cache(g, cfg);

    std::string csv = "# permanence " + num(r.permanence) + "\n# iterations " + std::to_string(r.iterations) +
                      " moves " + std::to_string(r.moves) + "\n" + write_partition(g, r.partition);
    json j;
    j["permanence"] = jnum(r.permanence);
    j["iterations"] = r.iterations;
    j["moves"] = r.moves;
    j["communities"] = r.partition.community_count();
    j["history"] = json::array();
    for (double h : r.permanence_history)
        j["history"].push_back(jnum(h));
    const Partition canon = r.partition.canonical();
    j["partition"] = json::object();
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        j["partition"][g.label(v)] = canon.community_of(v);
    emit(a.o, j, csv);
}

struct ValidateArgs {
    Output o;
    std::string detected, truth, graph;
};

void run_validate(const ValidateArgs& a) {
    const std::string det_text = input(a.detected);
    const Graph g = a.graph.empty() ? label_universe(det_text) : load_graph(a.graph);
    const Partition det = load_partition(det_text, g);
    const Partition truth = load_part(a.truth, g);

    Table t{{"metric", "value"}, {}};
    json j;
    auto put = [&](const std::string& name, json value) {
        t.add({name, value});
        j[name] = value;
    };
    put("nmi", jnum(nmi(det, truth)));
    put("ari", jnum(ari(det, truth)));
    put("purity", jnum(purity(det, truth)));
    if (a.graph.empty()) {
        put("weighted_nmi", nullptr);
        put("weighted_ari", nullptr);
        put("weighted_purity", nullptr);
        put("mean", nullptr);
    } else {
        const auto r = validate_partition(det, truth, g);
        put("weighted_nmi", jnum(r.weighted_nmi));
        put("weighted_ari", jnum(r.weighted_ari));
        put("weighted_purity", jnum(r.weighted_purity));
        put("mean", jnum(r.mean()));
    }
    emit(a.o, j, t.csv());
}

struct PerturbArgs {
    Output o;
    std::string graph, truth, strategy = "all",
                              p_grid = "0,0.05,0.1,0.15,0.2,0.25,0.3,0.35,0.4,0.45,0.5";
    std::size_t runs = 10;
    std::uint64_t seed = 0;
};

void run_perturb(const PerturbArgs& a) {
    const Graph g = load_graph(a.graph);
    const Partition truth = load_part(a.truth, g);
    const auto grid = parse_doubles(a.p_grid);
    std::vector<PerturbationStrategy> strategies;
    if (a.strategy == "all")
        strategies = {PerturbationStrategy::edge_based, PerturbationStrategy::random,
                      PerturbationStrategy::community_based};
    else
        strategies = {parse_perturbation_strategy(a.strategy)};

    Table t{{"strategy", "p", "effective_p", "modularity", "conductance_complement", "cutratio_complement",
             "permanence", "norm_modularity", "norm_conductance_complement", "norm_cutratio_complement",
             "norm_permanence", "mean_I", "mean_Emax", "mean_cin"},
            {}};
    for (auto s : strategies) {
        const auto r = sweep(g, truth, s, grid, a.runs, a.seed);
        for (const auto& pt : r.points)
            t.add({to_string(s), jnum(pt.p), jnum(pt.effective_p), jnum(pt.raw.modularity),
                   jnum(pt.raw.mean_conductance_complement), jnum(pt.raw.mean_cutratio_complement),
                   jnum(pt.raw.graph_permanence), jnum(pt.normalized.modularity),
                   jnum(pt.normalized.mean_conductance_complement), jnum(pt.normalized.mean_cutratio_complement),
                   jnum(pt.normalized.graph_permanence), jnum(pt.mean_internal_degree), jnum(pt.mean_max_external),
                   jnum(pt.mean_internal_cc)});
    }
    emit(a.o, t);
}

struct SensitivityArgs {
    Output o;
    std::string graph, seed_strategy = "high_degree";
    std::size_t permutations = 20, max_iter = 10;
    std::uint64_t seed = 0;
};

void run_sensitivity(const SensitivityArgs& a) {
    const Graph g = load_graph(a.graph);
    DetectorConfig cfg = make_config(g, a.seed_strategy, a.max_iter, a.seed, "", false);
    const auto r = sensitivity(g, cfg, a.permutations);
    Table t{{"k", "phi", "normalized_phi", "run_permanence"}, {}};
    for (std::size_t k = 0; k < r.phi_values.size(); ++k)
        t.add({k + 1, jnum(r.phi_values[k]), jnum(r.normalized_phi[k]), jnum(r.run_permanence[k])});
    json j;
    j["permutations"] = r.permutation_count;
    j["series"] = t.to_json();
    j["constant_communities"] = json::array();
    for (const auto& group : r.constant_communities) {
        json labels = json::array();
        for (VertexId v : group)
            labels.push_back(g.label(v));
        j["constant_communities"].push_back(std::move(labels));
    }
    emit(a.o, j, t.csv());
}

// --------------------------------------------------------------------------

struct AnalyzeArgs {
    Output o;
    std::string graph, partition, detected, truth;
    std::string fractions = "0.05,0.1,0.15,0.2,0.25,0.3";
    double bin_width = 0.1;
    std::string selector = "all";
    std::size_t runs = 500;
    std::uint64_t seed = 0;
    std::string suite = "standard";
    std::string blocks = "4,8,16,32";
    std::size_t block_size = 25;
    double p_in = 0.6, p_out = 0.02;
    bool literal = false;
    std::size_t replicates = 1;
};

void run_histogram(const AnalyzeArgs& a) {
    const Graph g = load_graph(a.graph);
    const auto h = permanence_histogram(g, load_part(a.partition, g));
    Table t{{"bin", "lower", "upper", "count", "fraction"}, {}};
    for (std::size_t b = 0; b < kPermanenceBins; ++b)
        t.add({b + 1, jnum(bin_lower_edge(b)), jnum(bin_lower_edge(b + 1)), h.counts[b], jnum(h.fractions[b])});
    emit(a.o, t);
}

void run_components(const AnalyzeArgs& a) {
    const Graph g = load_graph(a.graph);
    Table t{{"bin", "lower", "upper", "vertices", "I", "D", "Emax", "combined", "c_in"}, {}};
    for (const auto& r : component_profile(g, load_part(a.partition, g)))
        t.add({r.bin + 1, jnum(bin_lower_edge(r.bin)), jnum(bin_lower_edge(r.bin + 1)), r.vertices,
               jnum(r.internal_degree), jnum(r.degree), jnum(r.max_external), jnum(r.combined), jnum(r.internal_cc)});
    emit(a.o, t);
}

void run_strengthen(const AnalyzeArgs& a) {
    const Graph g = load_graph(a.graph);
    const auto fractions = parse_doubles(a.fractions);
    Table t{{"fraction", "removed", "communities", "mean_change_percent", "variance_change_percent"}, {}};
    for (const auto& r : strengthen(g, load_part(a.partition, g), fractions))
        t.add({jnum(r.fraction), r.removed, r.communities, jnum(r.mean_change_percent),
               jnum(r.variance_change_percent)});
    emit(a.o, t);
}

void run_farness(const AnalyzeArgs& a) {
    const Graph g = load_graph(a.graph);
    const auto f = farness_profile(g, load_part(a.partition, g), a.bin_width);
    Table t{{"lower", "upper", "vertices", "mean_permanence"}, {}};
    for (const auto& b : f.bins)
        t.add({jnum(b.lower), jnum(b.upper), b.vertices, jnum(b.mean_permanence)});
    emit(a.o, t);
}

void run_assortativity(const AnalyzeArgs& a) {
    const Graph g = load_graph(a.graph);
    const auto r = permanence_assortativity(g, load_part(a.partition, g));
    Table t{{"r_permanence", "r_degree", "used_permanence", "skipped_permanence", "used_degree", "skipped_degree"},
            {}};
    t.add({jnum(r.r_permanence), jnum(r.r_degree), r.used_permanence, r.skipped_permanence, r.used_degree,
           r.skipped_degree});
    emit(a.o, t);
}

void run_overlap(const AnalyzeArgs& a) {
    const Graph g = load_graph(a.graph);
    const auto r = bipartite_overlap(load_part(a.detected, g), load_part(a.truth, g));
    Table t{{"bucket", "lower", "upper", "edges", "fraction"}, {}};
    for (std::size_t b = 0; b < 10; ++b)
        t.add({b + 1, jnum(0.9 - 0.1 * static_cast<double>(b)), jnum(1.0 - 0.1 * static_cast<double>(b)),
               r.bucket_counts[b], jnum(r.bucket_fractions[b])});
    emit(a.o, t);
}

void run_sizes(const AnalyzeArgs& a) {
    const Graph g = load_graph(a.graph);
    const auto r = size_diagnostics(load_part(a.detected, g), load_part(a.truth, g));
    Table t{{"partition", "rank", "size"}, {}};
    for (std::size_t i = 0; i < r.detected_sizes.size(); ++i)
        t.add({"detected", i + 1, r.detected_sizes[i]});
    for (std::size_t i = 0; i < r.truth_sizes.size(); ++i)
        t.add({"truth", i + 1, r.truth_sizes[i]});
    json j;
    j["largest_jaccard"] = jnum(r.largest_jaccard);
    j["sizes"] = t.to_json();
    emit(a.o, j, "metric,value\nlargest_jaccard," + num(r.largest_jaccard) + "\n\n" + t.csv());
}

void run_spread(const AnalyzeArgs& a) {
    const Graph g = load_graph(a.graph);
    const Partition truth = load_part(a.truth, g);
    std::vector<InitiatorSelector> selectors;
    if (a.selector == "all")
        selectors = {InitiatorSelector::random, InitiatorSelector::degree, InitiatorSelector::permanence};
    else
        selectors = {parse_initiator_selector(a.selector)};
    Table t{{"selector", "runs", "mean_rounds", "min_rounds", "max_rounds", "full_coverage"}, {}};
    for (auto s : selectors) {
        const auto r = spreading_simulation(g, truth, s, a.runs, a.seed);
        const auto [lo, hi] = std::minmax_element(r.rounds.begin(), r.rounds.end());
        t.add({to_string(s), a.runs, jnum(r.mean_rounds), *lo, *hi, r.full_coverage});
    }
    emit(a.o, t);
}

void run_lemmas(const AnalyzeArgs& a) {
    std::vector<std::pair<SideSpec, SideSpec>> specs;
    if (a.suite == "standard")
        specs = standard_lemma_specs();
    else if (a.suite == "symmetric")
        specs = symmetric_sparse_specs();
    else
        throw UsageError("unknown lemma suite '" + a.suite + "'");

    Table t{{"scenario", "alpha", "beta", "wiring_a", "wiring_b", "I_alpha", "I_beta", "C_A", "C_B", "Cv_A", "Cv_B",
             "p_case1", "p_case2", "p_case3", "p_case4", "check", "comparison", "predicted", "oracle", "agree",
             "literal", "literal_agree"},
            {}};
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const auto s = build_lemma_scenario(specs[i].first, specs[i].second, derive_seed(a.seed, "lemmas", {i}));
        const auto f = four_case_totals(s);
        const auto& y = s.symbols;
        for (const auto& v : lemma_check(s, f)) {
            if (!v.applicable)
                continue;
            t.add({i, jnum(y.alpha), jnum(y.beta), to_string(specs[i].first.wiring), to_string(specs[i].second.wiring),
                   jnum(y.I_alpha), jnum(y.I_beta), jnum(y.C_A), jnum(y.C_B), jnum(y.Cv_A), jnum(y.Cv_B),
                   jnum(f.p_case1), jnum(f.p_case2), jnum(f.p_case3), jnum(f.p_case4), v.id, v.comparison,
                   jnum(v.predicted), jnum(v.oracle), v.agree, jnum(v.literal),
                   std::isnan(v.literal) ? json(nullptr) : json(v.literal_agree)});
        }
    }
    emit(a.o, t);
}

void run_growth(const AnalyzeArgs& a) {
    const auto blocks = parse_counts(a.blocks);
    PlantedPartition base;
    base.block_size = a.block_size;
    base.p_in = a.p_in;
    base.p_out = a.p_out;
    Table t{{"blocks", "vertices", "p_out", "modularity", "permanence", "mean_internal_degree",
             "mean_external_degree"},
            {}};
    for (const auto& r : asymptotic_growth_study(blocks, base, a.seed, !a.literal, a.replicates))
        t.add({r.blocks, r.vertices, jnum(r.p_out), jnum(r.modularity), jnum(r.permanence),
               jnum(r.mean_internal_degree), jnum(r.mean_external_degree)});
    emit(a.o, t);
}

void write_manifests(double seconds) {
    json flags = json::object();
    CLI::App* leaf = ctx.app;
    std::vector<CLI::App*> chain{ctx.app};
    while (!leaf->get_subcommands().empty()) {
        leaf = leaf->get_subcommands().front();
        chain.push_back(leaf);
    }
    std::string name;
    for (CLI::App* app : chain) {
        if (app != ctx.app)
            name += (name.empty() ? "" : " ") + app->get_name();
        for (const CLI::Option* opt : app->get_options()) {
            if (opt->get_name() == "--help" || opt->get_name().empty())
                continue;
            const auto& res = opt->results();
            if (res.empty())
                continue;
            flags[opt->get_name()] = res.size() == 1 ? json(res.front()) : json(res);
        }
    }
    json m;
    m["tool"] = "permanence";
    m["version"] = PERM_VERSION;
    m["subcommand"] = name;
    m["inputs"] = ctx.inputs;
    m["outputs"] = ctx.outputs;
    m["flags"] = flags;
    m["rng_seed"] = ctx.rng_seed;
    m["duration_seconds"] = jnum(seconds);
    for (const auto& path : ctx.outputs)
        write_text_file(path + ".manifest.json", m.dump(2) + "\n");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Permanence-based community scoring, detection and analysis", "permanence"};
    app.require_subcommand(1);
    app.set_version_flag("--version", PERM_VERSION);
    ctx.app = &app;
    std::vector<std::pair<CLI::App*, std::function<void()>>> actions;
    auto seed_opt = [](CLI::App* sub, std::uint64_t& seed) {
        sub->add_option("--rng-seed", seed, "Seed for every random stream")->capture_default_str();
    };

    GenerateArgs gen;
    auto* g = app.add_subcommand("generate", "Write a synthetic graph and its ground truth");
    add_output(g, gen.o);
    g->add_option("--kind", gen.kind, "ring, grid or planted")->required()->check(CLI::IsMember({"ring", "grid", "planted"}));
    g->add_option("--m", gen.m, "Cliques in the ring")->capture_default_str();
    g->add_option("--k", gen.k, "Clique size")->capture_default_str();
    g->add_option("--rows", gen.rows)->capture_default_str();
    g->add_option("--cols", gen.cols)->capture_default_str();
    g->add_option("--blocks", gen.blocks)->capture_default_str();
    g->add_option("--block-size", gen.block_size)->capture_default_str();
    g->add_option("--p-in", gen.p_in)->capture_default_str();
    g->add_option("--p-out", gen.p_out)->capture_default_str();
    g->add_option("--truth", gen.truth, "Ground-truth partition output path");
    seed_opt(g, gen.seed);
    actions.emplace_back(g, [&] { ctx.rng_seed = gen.seed; run_generate(gen); });

    ScoreArgs sc;
    auto* s = app.add_subcommand("score", "Modularity, conductance, cut ratio and permanence of a partition");
    add_output(s, sc.o);
    s->add_option("--graph", sc.graph)->required();
    s->add_option("--partition", sc.partition)->required();
    s->add_flag("--per-vertex", sc.per_vertex, "Include the per-vertex permanence breakdown");
    s->add_option("--aggregation", sc.aggregation)->check(CLI::IsMember({"unweighted", "size_weighted"}))->capture_default_str();
    actions.emplace_back(s, [&] { run_score(sc); });

    DetectArgs de;
    auto* d = app.add_subcommand("detect", "MaxPerm community detection");
    add_output(d, de.o);
    d->add_option("--graph", de.graph)->required();
    d->add_option("--seed-strategy", de.seed_strategy)->check(CLI::IsMember({"pair_wise", "high_degree", "high_cc"}))->capture_default_str();
    d->add_option("--max-iter", de.max_iter)->check(CLI::PositiveNumber)->capture_default_str();
    d->add_option("--order-file", de.order_file, "Vertex labels in processing order");
    d->add_flag("--shuffle", de.shuffle, "Process vertices in an order drawn from --rng-seed");
    d->add_option("--acceptance", de.acceptance, "both: vertex and neighbours must improve; vertex: vertex only")
        ->check(CLI::IsMember({"both", "vertex"}))->capture_default_str();
    d->add_option("--scan", de.scan)->check(CLI::IsMember({"first", "best"}))->capture_default_str();
    d->add_option("--engine", de.engine)->check(CLI::IsMember({"cached", "naive"}))->capture_default_str();
    seed_opt(d, de.seed);
    actions.emplace_back(d, [&] { ctx.rng_seed = de.seed; run_detect(de); });

    ValidateArgs va;
    auto* v = app.add_subcommand("validate", "NMI, ARI, purity and their degree-weighted variants");
    add_output(v, va.o, "json");
    v->add_option("--detected", va.detected)->required();
    v->add_option("--truth", va.truth)->required();
    v->add_option("--graph", va.graph, "Needed for the weighted variants");
    actions.emplace_back(v, [&] { run_validate(va); });

    PerturbArgs pe;
    auto* p = app.add_subcommand("perturb", "Score perturbed ground truth over an intensity grid");
    add_output(p, pe.o);
    p->add_option("--graph", pe.graph)->required();
    p->add_option("--truth", pe.truth)->required();
    p->add_option("--strategy", pe.strategy)->check(CLI::IsMember({"all", "edge_based", "random", "community_based"}))->capture_default_str();
    p->add_option("--p-grid", pe.p_grid, "Comma-separated ascending intensities in [0, 0.5]")->capture_default_str();
    p->add_option("--runs", pe.runs)->check(CLI::PositiveNumber)->capture_default_str();
    seed_opt(p, pe.seed);
    actions.emplace_back(p, [&] { ctx.rng_seed = pe.seed; run_perturb(pe); });

    SensitivityArgs se;
    auto* sn = app.add_subcommand("sensitivity", "Constant communities across vertex orders");
    add_output(sn, se.o);
    sn->add_option("--graph", se.graph)->required();
    sn->add_option("--permutations", se.permutations)->check(CLI::Range(2, 1000000))->capture_default_str();
    sn->add_option("--seed-strategy", se.seed_strategy)->check(CLI::IsMember({"pair_wise", "high_degree", "high_cc"}))->capture_default_str();
    sn->add_option("--max-iter", se.max_iter)->check(CLI::PositiveNumber)->capture_default_str();
    seed_opt(sn, se.seed);
    actions.emplace_back(sn, [&] { ctx.rng_seed = se.seed; run_sensitivity(se); });

    AnalyzeArgs an;
    auto* a = app.add_subcommand("analyze", "Permanence analyses");
    a->require_subcommand(1);
    auto analysis = [&](const char* name, const char* about, bool graph, bool partition, bool pair,
                        std::function<void(const AnalyzeArgs&)> fn) {
        auto* sub = a->add_subcommand(name, about);
        add_output(sub, an.o);
        if (graph)
            sub->add_option("--graph", an.graph)->required();
        if (partition)
            sub->add_option("--partition", an.partition)->required();
        if (pair) {
            sub->add_option("--detected", an.detected)->required();
            sub->add_option("--truth", an.truth)->required();
        }
        actions.emplace_back(sub, [&an, fn] { ctx.rng_seed = an.seed; fn(an); });
        return sub;
    };
    analysis("histogram", "Vertex fraction per permanence bin", true, true, false, run_histogram);
    analysis("components", "Mean permanence terms per bin", true, true, false, run_components);
    analysis("strengthen", "Edge-density change after removing low-permanence vertices", true, true, false,
             run_strengthen)
        ->add_option("--fractions", an.fractions)->capture_default_str();
    analysis("farness", "Mean permanence by intra-community farness", true, true, false, run_farness)
        ->add_option("--bin-width", an.bin_width)->capture_default_str();
    analysis("assortativity", "Permanence-bin and degree assortativity inside communities", true, true, false,
             run_assortativity);
    analysis("overlap", "Detected-to-truth overlap weights in ten buckets", true, false, true, run_overlap);
    analysis("sizes", "Community sizes and largest-community Jaccard", true, false, true, run_sizes);
    auto* sp = analysis("spread", "Rounds to broadcast from one initiator per community", true, false, false, run_spread);
    sp->add_option("--truth", an.truth)->required();
    sp->add_option("--selector", an.selector)->check(CLI::IsMember({"all", "random", "degree", "permanence"}))->capture_default_str();
    sp->add_option("--runs", an.runs)->check(CLI::PositiveNumber)->capture_default_str();
    seed_opt(sp, an.seed);
    auto* lm = analysis("lemmas", "Four-case totals and lemma checks on constructed scenarios", false, false, false,
                        run_lemmas);
    lm->add_option("--suite", an.suite)->check(CLI::IsMember({"standard", "symmetric"}))->capture_default_str();
    seed_opt(lm, an.seed);
    auto* gr = analysis("growth", "Modularity and permanence of growing planted partitions", false, false, false,
                        run_growth);
    gr->add_option("--blocks", an.blocks)->capture_default_str();
    gr->add_option("--block-size", an.block_size)->capture_default_str();
    gr->add_option("--p-in", an.p_in)->capture_default_str();
    gr->add_option("--p-out", an.p_out)->capture_default_str();
    gr->add_option("--replicates", an.replicates, "Graphs averaged per size")->check(CLI::PositiveNumber)->capture_default_str();
    gr->add_flag("--literal", an.literal, "Keep p_out fixed instead of holding the external degree");
    seed_opt(gr, an.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        for (auto& [sub, fn] : actions)
            if (sub->parsed()) {
                fn();
                break;
            }
        const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        write_manifests(took.count());
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
