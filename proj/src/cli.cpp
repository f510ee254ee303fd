#include "convexia/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "convexia/at_free.hpp"
#include "convexia/convexity.hpp"
#include "convexia/decomposition.hpp"
#include "convexia/errors.hpp"
#include "convexia/generators.hpp"
#include "convexia/permutation.hpp"
#include "convexia/suites.hpp"
#include "convexia/tree_family.hpp"
#include "json.hpp"

namespace convexia {

namespace {

using nlohmann::json;

struct ComputeRequest {
    std::string input = "-";
    std::string format = "auto";
    std::string kind = "g";
    std::string algorithm = "auto";
    std::size_t cap = OracleConfig{}.cap;
    std::uint64_t seed = 1;
    bool complement = false;
};

struct VerifyRequest {
    std::string suite;
    SuiteOptions options;
};

struct GenerateRequest {
    std::string what;
    std::string format = "edges";
    std::string input = "-";
    std::uint64_t seed = 1;
    std::size_t n = 10;
    std::size_t feet = 3;
    bool thin = true;
    std::string head;
    int copies = 2;
};

/// Thrown for requests that do not fit the input class.
struct ClassMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_all(const std::string& path, std::istream& in) {
    if (path == "-") return {std::istreambuf_iterator<char>(in), {}};
    std::ifstream file(path, std::ios::binary);
    if (!file) throw ParseError("cannot open " + path, 0);
    return {std::istreambuf_iterator<char>(file), {}};
}

/// A single whitespace-free token is graph6; anything else is an edge list.
GraphFormat detect_format(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return GraphFormat::edge_list;
    const auto last = text.find_last_not_of(" \t\r\n");
    const std::string_view body = text.substr(first, last - first + 1);
    return body.find_first_of(" \t\r\n") == std::string_view::npos && body.find("n=") != 0 ? GraphFormat::graph6
                                                                                            : GraphFormat::edge_list;
}

std::optional<ConvexityKind> kind_of(const std::string& kind) {
    if (kind == "g") return ConvexityKind::geodetic;
    if (kind == "g2") return ConvexityKind::two_geodetic;
    if (kind == "s") return ConvexityKind::steiner;
    if (kind == "m") return ConvexityKind::monophonic;
    return std::nullopt;  // cm
}

bool is_cotree(const Graph& g) { return g.order() > 0 && is_tree(complement(g)); }

std::string detect_class(const Graph& g, bool have_diagram) {
    if (g.order() == 0) return "empty";
    if (is_tree(g)) return "tree";
    if (is_cotree(g)) return "cotree";
    if (decompose_tree_cograph(g)) return "tree-cograph";
    if (decompose_p4_sparse(g)) return "p4-sparse";
    if (is_chordal(g)) return "chordal";
    if (have_diagram) return "permutation";
    return "general";
}

WitnessedNumber sum_over_components(const Graph& g, const std::function<WitnessedNumber(const Graph&)>& solve) {
    WitnessedNumber total;
    for (const auto& c : components(g)) {
        const WitnessedNumber part = solve(induced_subgraph(g, c));
        total.value += part.value;
        for (Vertex v : part.witness) total.witness.push_back(c[static_cast<std::size_t>(v)]);
    }
    std::sort(total.witness.begin(), total.witness.end());
    return total;
}

WitnessedNumber run_algorithm(const std::string& algorithm, const std::string& kind, const Graph& g,
                              const std::optional<PermutationDiagram>& diagram, const OracleConfig& cfg) {
    const auto k = kind_of(kind);
    const bool g_or_g2 = k == ConvexityKind::geodetic || k == ConvexityKind::two_geodetic;
    auto need = [&](bool ok, const std::string& why) {
        if (!ok) throw ClassMismatch(algorithm + ": " + why);
    };
    if (algorithm == "oracle") {
        if (!k) return max_proper_monophonically_convex(g, cfg);
        return min_convexity_number(g, *k, cfg);
    }
    if (algorithm == "tree") {
        need(g_or_g2, "covers kinds g and g2");
        need(is_tree(g), "input is not a tree");
        return *k == ConvexityKind::geodetic ? tree_geodetic_number(g) : tree_2geodetic_number(g);
    }
    if (algorithm == "cotree") {
        need(g_or_g2, "covers kinds g and g2");
        need(is_cotree(g), "input is not the complement of a tree");
        const Graph t = complement(g);
        return *k == ConvexityKind::geodetic ? cotree_geodetic_number(t) : cotree_2geodetic_number(t);
    }
    if (algorithm == "tree-cograph" || algorithm == "p4-sparse") {
        need(g_or_g2, "covers kinds g and g2");
        try {
            return algorithm == "tree-cograph" ? tree_cograph_number(g, *k) : p4_sparse_number(g, *k);
        } catch (const DomainError& e) {
            throw ClassMismatch(algorithm + ": " + e.what());
        }
    }
    if (algorithm == "chordal") {
        need(k == ConvexityKind::monophonic, "covers kind m");
        need(is_chordal(g), "input is not chordal");
        return sum_over_components(g, [](const Graph& c) { return chordal_monophonic_number(c); });
    }
    if (algorithm == "permutation") {
        need(k == ConvexityKind::monophonic, "covers kind m");
        need(diagram.has_value(), "needs --format perm input");
        WitnessedNumber total;
        for (const auto& c : components(g)) {
            const WitnessedNumber part = permutation_monophonic_number(induced_diagram(*diagram, c));
            total.value += part.value;
            for (Vertex v : part.witness) total.witness.push_back(c[static_cast<std::size_t>(v)]);
        }
        std::sort(total.witness.begin(), total.witness.end());
        return total;
    }
    throw ClassMismatch("unknown algorithm " + algorithm);
}

std::pair<WitnessedNumber, std::string> run_auto(const std::string& kind, const Graph& g,
                                                 const std::optional<PermutationDiagram>& diagram,
                                                 const OracleConfig& cfg) {
    const auto k = kind_of(kind);
    std::vector<std::string> probes;
    if (k == ConvexityKind::geodetic || k == ConvexityKind::two_geodetic)
        probes = {"tree", "cotree", "tree-cograph", "p4-sparse"};
    if (k == ConvexityKind::monophonic) probes = {"chordal", "permutation"};
    for (const auto& a : probes) {
        try {
            return {run_algorithm(a, kind, g, diagram, cfg), a};
        } catch (const ClassMismatch&) {
        }
    }
    return {run_algorithm("oracle", kind, g, diagram, cfg), "oracle"};
}

int cmd_compute(const ComputeRequest& req, std::istream& in, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const std::string text = read_all(req.input, in);
    std::optional<PermutationDiagram> diagram;
    Graph g;
    if (req.format == "perm") {
        diagram = parse_permutation(text);
        g = permutation_to_graph(*diagram);
    } else {
        const GraphFormat f = req.format == "graph6"  ? GraphFormat::graph6
                              : req.format == "edges" ? GraphFormat::edge_list
                                                      : detect_format(text);
        g = load_graph(text, f);
    }
    if (req.complement) {
        g = complement(g);
        diagram.reset();
    }
    const OracleConfig cfg{req.cap};
    WitnessedNumber result;
    std::string used = req.algorithm;
    if (req.algorithm == "auto") std::tie(result, used) = run_auto(req.kind, g, diagram, cfg);
    else result = run_algorithm(req.algorithm, req.kind, g, diagram, cfg);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const json report{{"schema", "convexia/1"},
                      {"n", g.order()},
                      {"m_edges", g.size()},
                      {"class_detected", detect_class(g, diagram.has_value())},
                      {"kind", req.kind},
                      {"value", result.value},
                      {"witness", result.witness},
                      {"algorithm_used", used},
                      {"wall_ms", ms}};
    out << report.dump() << '\n';
    return kExitOk;
}

int cmd_verify(const VerifyRequest& req, std::ostream& out) {
    const SuiteReport report = run_suite(req.suite, req.options);
    out << to_json(report).dump() << '\n';
    return report.failures.empty() ? kExitOk : kExitFailures;
}

void write_graph(const Graph& g, const std::string& format, std::ostream& out) {
    if (format == "graph6") out << to_graph6(g) << '\n';
    else out << to_edge_list(g);
}

int cmd_generate(const GenerateRequest& req, std::istream& in, std::ostream& out) {
    Rng rng(req.seed);
    if (req.what == "figure1") {
        write_graph(figure1_graph().graph, req.format, out);
    } else if (req.what == "figure1-k") {
        if (req.copies < 1) throw RangeError("--copies must be positive");
        write_graph(figure1_copies(req.copies).graph, req.format, out);
    } else if (req.what == "random-tree") {
        if (req.n < 1) throw RangeError("--n must be positive");
        write_graph(random_tree(req.n, rng), req.format, out);
    } else if (req.what == "random-perm") {
        if (req.n < 1) throw RangeError("--n must be positive");
        const PermutationDiagram d = random_permutation(req.n, rng);
        if (req.format == "perm") out << to_string(d) << '\n';
        else write_graph(permutation_to_graph(d), req.format, out);
    } else if (req.what == "spider") {
        if (req.feet < 2) throw RangeError("--feet must be at least 2");
        const Graph head = req.head.empty() ? Graph(0) : parse_graph6(req.head);
        write_graph(make_spider(req.feet, req.thin, head), req.format, out);
    } else if (req.what == "cm-reduction") {
        const std::string text = read_all(req.input, in);
        write_graph(cm_reduction(load_graph(text, detect_format(text))), req.format, out);
    } else {
        throw RangeError("unknown instance " + req.what);
    }
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graph convexity numbers: exact oracles and class-specific algorithms"};
    app.require_subcommand(1);

    ComputeRequest compute;
    auto* c = app.add_subcommand("compute", "Compute g, g2, s, m or cm of a graph");
    c->add_option("input", compute.input, "Input file ('-' for stdin)");
    c->add_option("--format", compute.format, "Input format")->check(CLI::IsMember({"auto", "graph6", "edges", "perm"}));
    c->add_option("-k,--kind", compute.kind, "Invariant")->check(CLI::IsMember({"g", "g2", "s", "m", "cm"}));
    c->add_option("-a,--algorithm", compute.algorithm, "Algorithm")
        ->check(CLI::IsMember({"auto", "oracle", "tree", "cotree", "tree-cograph", "p4-sparse", "permutation", "chordal"}));
    c->add_option("--cap", compute.cap, "Oracle vertex cap")->check(CLI::Range(1, 64));
    c->add_option("--seed", compute.seed, "Random seed");
    c->add_flag("--complement", compute.complement, "Work on the complement of the input");

    VerifyRequest verify;
    auto* v = app.add_subcommand("verify", "Run a property suite");
    v->add_option("suite", verify.suite, "Suite name")->required();
    v->add_option("--seed", verify.options.seed, "Random seed");
    v->add_option("--budget", verify.options.budget, "Number of random cases")->check(CLI::NonNegativeNumber);
    v->add_option("--jobs", verify.options.jobs, "Worker threads")->check(CLI::PositiveNumber);

    GenerateRequest generate;
    auto* gen = app.add_subcommand("generate", "Write a named instance");
    gen->add_option("what", generate.what, "figure1, figure1-k, random-tree, random-perm, spider, cm-reduction")
        ->required();
    gen->add_option("--format", generate.format, "Output format")->check(CLI::IsMember({"graph6", "edges", "perm"}));
    gen->add_option("--input", generate.input, "Input graph for cm-reduction ('-' for stdin)");
    gen->add_option("--seed", generate.seed, "Random seed");
    gen->add_option("--n", generate.n, "Vertex count");
    gen->add_option("--feet", generate.feet, "Spider feet");
    gen->add_flag("--thin,!--thick", generate.thin, "Thin (default) or thick spider");
    gen->add_option("--head", generate.head, "Spider head as graph6");
    gen->add_option("--copies", generate.copies, "Copies for figure1-k");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "convexia: " << e.what() << '\n';
        return kExitParse;
    }

    try {
        if (c->parsed()) return cmd_compute(compute, in, out);
        if (v->parsed()) return cmd_verify(verify, out);
        return cmd_generate(generate, in, out);
    } catch (const ParseError& e) {
        err << "convexia: parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const RangeError& e) {
        err << "convexia: invalid input: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        err << "convexia: " << e.what() << '\n';
        return kExitParse;
    } catch (const ClassMismatch& e) {
        err << "convexia: class mismatch: " << e.what() << '\n';
        return kExitClass;
    } catch (const DomainError& e) {
        err << "convexia: class mismatch: " << e.what() << '\n';
        return kExitClass;
    } catch (const BudgetError& e) {
        err << "convexia: budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    }
}

}  // namespace convexia
