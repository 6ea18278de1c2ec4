// Command-line front end: check | realize | compile | roundtrip on JSON
// problem files. Exit codes: 0 success/realizable, 1 negative verdict,
// 2 input error, 3 partition budget exhausted.

#include "netreal/compile.hpp"
#include "netreal/dot.hpp"
#include "netreal/json_io.hpp"
#include "netreal/realize.hpp"
#include "netreal/report.hpp"
#include "netreal/roundtrip.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace netreal;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct CommonArgs {
    std::string path;
    std::optional<double> tol;
    bool no_timestamp = false;
};

long long default_budget() {
    if (const char* env = std::getenv("GRAPH_REALIZE_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v >= 0)
            return v;
    }
    return 10000;
}

void print_header(std::ostream& out, const std::string& command, const CommonArgs& args) {
    out << "# graph-realize " << command << "\n";
    if (!args.no_timestamp) {
        std::time_t now = std::time(nullptr);
        char buf[32];
        std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        out << "# generated: " << buf << "\n";
    }
    out << "input: " << args.path << "\n";
}

void print_tolerance(std::ostream& out, double tol) {
    out << "tolerance: " << format_double(tol) << "\n";
}

const char* role_name(VertexRole role) {
    switch (role) {
    case VertexRole::transient: return "transient";
    case VertexRole::source: return "source";
    case VertexRole::sink: return "sink";
    }
    return "?";
}

void print_diagnoses(std::ostream& out, const std::vector<DiagnosisCount>& diagnoses) {
    out << "[diagnosis]\n";
    for (const DiagnosisCount& entry : diagnoses) {
        out << to_string(entry.diagnosis.tag) << ": " << entry.diagnosis.detail;
        if (entry.count > 1)
            out << " (seen " << entry.count << "x)";
        out << "\n";
    }
}

void print_system_assumptions(std::ostream& out, const AssumptionCheck& check) {
    out << "[assumptions]\n";
    bool assout_ok = true, line_ok = true, ass3_ok = true;
    for (const Diagnosis& failure : check.failures) {
        if (failure.tag == Diagnosis::Tag::assout)
            assout_ok = false;
        if (failure.tag == Diagnosis::Tag::line_digraph)
            line_ok = false;
        if (failure.tag == Diagnosis::Tag::ass3)
            ass3_ok = false;
    }
    out << "assout: " << (assout_ok ? "PASS" : "FAIL") << "\n";
    out << "line-digraph: " << (line_ok ? "PASS" : "FAIL") << "\n";
    // The tail classes do not exist when recognition fails.
    out << "ass3: " << (!line_ok ? "SKIPPED" : ass3_ok ? "PASS" : "FAIL") << "\n";
    for (const Diagnosis& failure : check.failures)
        out << "  " << to_string(failure.tag) << ": " << failure.detail << "\n";
}

// Per-vertex flow-connectivity verdicts of a graph problem.
bool print_graph_checks(std::ostream& out, const MetricGraphProblem& problem,
                        const CompiledSystem& compiled, double tol) {
    bool all_ok = true;
    out << "[vertex checks]\n";
    std::vector<VertexCheck> checks = check_vertex_assumptions(compiled, tol);
    for (const VertexCheck& check : checks) {
        const std::string& label =
            problem.vertex_labels[static_cast<std::size_t>(check.vertex)];
        out << "vertex " << label << " (" << role_name(check.role) << "): ";
        out << "ass1: " << (check.ass1_ok ? "PASS" : "FAIL");
        if (!check.ass1_ok)
            out << " (" << check.ass1_detail << ")";
        const char* what =
            check.role == VertexRole::source ? "irreducibility" : "full-connectivity";
        out << ", " << what << ": " << (check.connectivity_ok ? "PASS" : "FAIL");
        if (!check.connectivity_ok)
            out << " (" << check.connectivity_detail << ")";
        out << ", kirchhoff row: ";
        if (check.kirchhoff_row)
            out << *check.kirchhoff_row + 1;
        else
            out << "none";
        out << "\n";
        all_ok = all_ok && check.ass1_ok && check.connectivity_ok;
    }
    return all_ok;
}

// Arc counts recovered from the realized edges: entry (i,j) counts arcs j -> i.
IntMatrix network_adjacency(const RealizedNetwork& network) {
    IntMatrix adjacency(static_cast<int>(network.roles.size()),
                        static_cast<int>(network.roles.size()));
    for (const RealizedEdge& e : network.edges) {
        switch (e.kind) {
        case RealizedEdge::Kind::concurrent_plus:
            adjacency.at(e.x1_vertex, e.x0_vertex) += 2;
            break;
        case RealizedEdge::Kind::concurrent_minus:
            adjacency.at(e.x0_vertex, e.x1_vertex) += 2;
            break;
        case RealizedEdge::Kind::countercurrent:
            adjacency.at(e.x1_vertex, e.x0_vertex) += 1;
            adjacency.at(e.x0_vertex, e.x1_vertex) += 1;
            break;
        }
    }
    return adjacency;
}

void print_network(std::ostream& out, const RealizedNetwork& network) {
    out << "[network]\n";
    out << "vertices:";
    for (std::size_t v = 0; v < network.labels.size(); ++v)
        out << (v ? ", " : " ") << network.labels[v] << " ("
            << role_name(network.roles[v]) << ")";
    out << "\n";
    out << "multi digraph adjacency:\n" << format_matrix(network_adjacency(network));
    for (std::size_t k = 0; k < network.edges.size(); ++k) {
        const RealizedEdge& e = network.edges[k];
        const char* kind = e.kind == RealizedEdge::Kind::concurrent_plus  ? "conc+"
                           : e.kind == RealizedEdge::Kind::concurrent_minus ? "conc-"
                                                                            : "counter";
        out << "edge e_" << k + 1 << ": (" << e.comp_first + 1 << "," << e.comp_second + 1
            << ") [" << kind << "] x0=" << network.labels[static_cast<std::size_t>(e.x0_vertex)]
            << " x1=" << network.labels[static_cast<std::size_t>(e.x1_vertex)] << "\n";
    }
    out << "[vertex systems]\n";
    for (const VertexSystem& vs : network.systems) {
        out << network.labels[static_cast<std::size_t>(vs.vertex)] << ": rows "
            << format_index_set(vs.rows) << ", out " << format_index_set(vs.out_cols) << ", in "
            << format_index_set(vs.in_cols) << "\n";
        out << "xi_out:\n" << format_matrix(vs.xi_out_block);
        if (vs.in_cols.size() > 0)
            out << "xi_in:\n" << format_matrix(vs.xi_in_block);
    }
}

bool write_file(const std::string& path, const std::string& text, std::ostream& err) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        err << "error: cannot write " << path << "\n";
        return false;
    }
    out << text;
    return true;
}

int run_check(const CommonArgs& args) {
    ProblemFile file = load_problem_file(args.path, args.tol);
    std::ostringstream out;
    print_header(out, "check", args);

    bool ok = true;
    if (file.is_boundary_system()) {
        const BoundarySystem& system = file.boundary_system();
        print_tolerance(out, system.tol);
        out << "kind: boundary_system\n";
        out << "[canonical input]\n" << canonical_json(system);
        AssumptionCheck check = check_assumptions(system);
        print_system_assumptions(out, check);
        ok = check.ok();
    } else {
        const MetricGraphProblem& problem = file.metric_graph();
        print_tolerance(out, problem.tol);
        out << "kind: metric_graph\n";
        out << "[canonical input]\n" << canonical_json(problem);
        CompiledSystem compiled = assemble_global(problem);
        ok = print_graph_checks(out, problem, compiled, problem.tol);
    }
    out << "verdict: " << (ok ? "PASS" : "FAIL") << "\n";
    std::cout << out.str();
    return ok ? kExitOk : kExitNegative;
}

int run_realize(const CommonArgs& args, long long budget, bool all_partitions,
                const std::string& dot_path, const std::string& json_path) {
    ProblemFile file = load_problem_file(args.path, args.tol);
    if (!file.is_boundary_system())
        throw ParseError("realize expects a boundary_system document");
    const BoundarySystem& system = file.boundary_system();

    std::ostringstream out;
    print_header(out, "realize", args);
    print_tolerance(out, system.tol);
    out << "[canonical input]\n" << canonical_json(system);

    AssumptionCheck check = check_assumptions(system);
    print_system_assumptions(out, check);

    RealizeOptions options;
    options.budget = budget;
    options.all_partitions = all_partitions;
    RealizeOutcome outcome = realize(system, options);

    // For a negative verdict the reconstructed multi digraph of the first
    // candidate partition is still a useful artifact.
    std::optional<std::string> fallback_dot;
    if (check.ok()) {
        out << "coupling pattern:\n" << format_matrix(check.line_adjacency);
        VertexPartition partition = vertex_partition(system, check);
        out << "[partition]\n";
        for (std::size_t i = 0; i < partition.parts.size(); ++i)
            out << "V_" << i + 1 << " = " << format_index_set(partition.parts[i]) << "\n";
        out << "V_S = " << format_index_set(partition.source_rows) << "\n";
        SourceDecomposition sources = source_decomposition(system, partition);
        out << "[sources]\n";
        out << "k = " << sources.arc_blocks.size() << "\n";
        for (std::size_t g = 0; g < sources.arc_blocks.size(); ++g)
            out << "S" << g + 1 << ": arcs " << format_index_set(sources.arc_blocks[g])
                << ", rows " << format_index_set(sources.row_blocks[g]) << "\n";
        if (sources.xi_s.rows() > 0)
            out << "source coupling:\n" << format_matrix(sources.xi_s);
        if (!dot_path.empty() && outcome.status != RealizeOutcome::Status::realizable) {
            SinkPartitionEnumerator enumerator(
                sink_arcs_by_part(system, partition, sources), !all_partitions);
            SinkPartition first;
            if (enumerator.next(first)) {
                BuiltIncidence built = build_incidence(system, partition, sources, first);
                HostGraph host = host_adjacency(built.pair);
                std::vector<std::string> labels;
                for (int i = 0; i < built.layout.transient_count; ++i)
                    labels.push_back("v" + std::to_string(i + 1));
                for (int g = 0; g < built.layout.source_count; ++g)
                    labels.push_back("S" + std::to_string(g + 1));
                for (int z = 0; z < built.layout.sink_count; ++z)
                    labels.push_back("Z" + std::to_string(z + 1));
                fallback_dot = to_dot(host.graph, labels);
            }
        }
    }

    out << "[search]\n";
    out << "partitions tried: " << outcome.partitions_tried << "\n";
    out << "successes: " << outcome.successes << "\n";
    if (outcome.census_truncated)
        out << "census truncated by budget\n";
    if (!outcome.diagnoses.empty())
        print_diagnoses(out, outcome.diagnoses);

    int code = kExitNegative;
    switch (outcome.status) {
    case RealizeOutcome::Status::realizable: {
        const RealizedNetwork& network = *outcome.network;
        print_network(out, network);
        out << "verdict: Realizable\n";
        code = kExitOk;
        if (!json_path.empty() && !write_file(json_path, network_json(network), std::cerr))
            return kExitInput;
        if (!dot_path.empty() && !write_file(dot_path, to_dot(network), std::cerr))
            return kExitInput;
        break;
    }
    case RealizeOutcome::Status::not_realizable:
        out << "verdict: NotRealizable\n";
        code = kExitNegative;
        break;
    case RealizeOutcome::Status::budget_exhausted:
        out << "verdict: BudgetExhausted\n";
        code = kExitBudget;
        break;
    }
    if (fallback_dot && !dot_path.empty() && !write_file(dot_path, *fallback_dot, std::cerr))
        return kExitInput;
    std::cout << out.str();
    return code;
}

int run_compile(const CommonArgs& args, const std::string& json_path) {
    ProblemFile file = load_problem_file(args.path, args.tol);
    if (file.is_boundary_system())
        throw ParseError("compile expects a metric_graph document");
    const MetricGraphProblem& problem = file.metric_graph();

    std::ostringstream out;
    print_header(out, "compile", args);
    print_tolerance(out, problem.tol);
    out << "[canonical input]\n" << canonical_json(problem);

    CompiledSystem compiled = assemble_global(problem);
    out << "[classification]\n";
    out << "m = " << problem.edges.size() << "\n";
    out << "J+ = " << format_index_set(compiled.classification.j_plus) << "\n";
    out << "J- = " << format_index_set(compiled.classification.j_minus) << "\n";
    for (std::size_t j = 0; j < problem.edges.size(); ++j) {
        const EdgeEigen& eig = compiled.classification.eigen[j];
        out << "edge " << j + 1 << ": lambda+ = " << format_double(eig.lambda_plus)
            << ", lambda- = " << format_double(eig.lambda_minus)
            << ", alpha = " << compiled.classification.alpha[j] << "\n";
    }
    out << "[vertices]\n";
    bool all_ok = true;
    for (std::size_t i = 0; i < compiled.assembled_vertices.size(); ++i) {
        int v = compiled.assembled_vertices[i];
        const WellposedResult& wp = compiled.wellposedness[i];
        out << problem.vertex_labels[static_cast<std::size_t>(v)] << ": role="
            << role_name(compiled.classification.roles[static_cast<std::size_t>(v)])
            << ", k=" << compiled.classification.k_v[static_cast<std::size_t>(v)]
            << ", wellposed: " << (wp.ok ? "PASS" : "FAIL")
            << " (det=" << format_double(wp.det)
            << ", threshold=" << format_double(wp.threshold) << ")\n";
        all_ok = all_ok && wp.ok;
    }
    for (int v = 0; v < vertex_count(problem); ++v)
        if (compiled.classification.roles[static_cast<std::size_t>(v)] == VertexRole::sink)
            out << problem.vertex_labels[static_cast<std::size_t>(v)]
                << ": role=sink, k=0\n";

    if (!all_ok) {
        out << "verdict: IllPosed\n";
        std::cout << out.str();
        return kExitNegative;
    }
    std::string document = canonical_json(*compiled.system);
    if (!json_path.empty()) {
        if (!write_file(json_path, document, std::cerr))
            return kExitInput;
        out << "boundary system written to " << json_path << "\n";
    } else {
        out << "[boundary system]\n" << document;
    }
    out << "verdict: PASS\n";
    std::cout << out.str();
    return kExitOk;
}

int run_roundtrip(const CommonArgs& args, long long budget) {
    ProblemFile file = load_problem_file(args.path, args.tol);
    if (file.is_boundary_system())
        throw ParseError("roundtrip expects a metric_graph document");
    const MetricGraphProblem& problem = file.metric_graph();

    std::ostringstream out;
    print_header(out, "roundtrip", args);
    print_tolerance(out, problem.tol);

    CompiledSystem compiled = assemble_global(problem);
    bool checks_ok = print_graph_checks(out, problem, compiled, problem.tol);
    if (!checks_ok) {
        out << "verdict: FAIL (stage: check)\n";
        std::cout << out.str();
        return kExitNegative;
    }
    if (!compiled.all_wellposed()) {
        out << "verdict: FAIL (stage: compile, ill-posed vertex)\n";
        std::cout << out.str();
        return kExitNegative;
    }
    out << "[stage compile] ok, m = " << problem.edges.size() << "\n";

    RealizeOptions options;
    options.budget = budget;
    RealizeOutcome outcome = realize(*compiled.system, options);
    if (outcome.status == RealizeOutcome::Status::budget_exhausted) {
        if (!outcome.diagnoses.empty())
            print_diagnoses(out, outcome.diagnoses);
        out << "verdict: FAIL (stage: realize, budget exhausted)\n";
        std::cout << out.str();
        return kExitBudget;
    }
    if (outcome.status != RealizeOutcome::Status::realizable) {
        if (!outcome.diagnoses.empty())
            print_diagnoses(out, outcome.diagnoses);
        out << "verdict: FAIL (stage: realize)\n";
        std::cout << out.str();
        return kExitNegative;
    }
    out << "[stage realize] Realizable (" << outcome.partitions_tried
        << " partition(s) tried, " << outcome.successes << " successful)\n";

    RoundTripResult comparison =
        compare_realization(problem, compiled.classification, *outcome.network);
    if (!comparison.ok) {
        out << "[stage compare] " << comparison.mismatch << "\n";
        out << "verdict: FAIL (stage: compare)\n";
        std::cout << out.str();
        return kExitNegative;
    }
    out << "[stage compare] match\n";
    out << "verdict: PASS\n";
    std::cout << out.str();
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph realizability of hyperbolic boundary systems"};
    app.set_version_flag("--version", "graph-realize 0.1.0");
    app.require_subcommand(1);

    CommonArgs args;
    long long budget = default_budget();
    bool all_partitions = false;
    std::string dot_path, json_path;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", args.path, "problem JSON file")->required();
        cmd->add_option("--tol", args.tol, "zero-pattern tolerance override");
        cmd->add_flag("--no-timestamp", args.no_timestamp, "omit the timestamp header");
    };

    CLI::App* check = app.add_subcommand("check", "evaluate structural assumptions");
    add_common(check);

    CLI::App* realize_cmd = app.add_subcommand("realize", "reconstruct a network");
    add_common(realize_cmd);
    realize_cmd->add_option("--budget", budget, "max sink partitions tried");
    realize_cmd->add_flag("--all-partitions", all_partitions,
                          "search general sink groups, not only pairs");
    realize_cmd->add_option("--dot", dot_path, "write the network as DOT");
    realize_cmd->add_option("--json", json_path, "write the network as JSON");

    CLI::App* compile_cmd = app.add_subcommand("compile", "flatten a graph problem");
    add_common(compile_cmd);
    compile_cmd->add_option("--json", json_path, "write the boundary system here");

    CLI::App* roundtrip_cmd =
        app.add_subcommand("roundtrip", "compile, realize, and compare against the input");
    add_common(roundtrip_cmd);
    roundtrip_cmd->add_option("--budget", budget, "max sink partitions tried");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed())
            return run_check(args);
        if (realize_cmd->parsed())
            return run_realize(args, budget, all_partitions, dot_path, json_path);
        if (compile_cmd->parsed())
            return run_compile(args, json_path);
        return run_roundtrip(args, budget);
    } catch (const netreal::ParseError& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return kExitInput;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInput;
    }
}
