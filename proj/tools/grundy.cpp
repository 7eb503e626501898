#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grundy/acceptance.hpp"
#include "grundy/errors.hpp"
#include "grundy/families.hpp"
#include "grundy/graph.hpp"
#include "grundy/interval.hpp"
#include "grundy/io.hpp"
#include "grundy/json_io.hpp"
#include "grundy/removal.hpp"
#include "grundy/sequence.hpp"
#include "grundy/sierpinski.hpp"
#include "grundy/solver.hpp"

#ifdef GRUNDY_HAVE_OPENMP
#include <omp.h>
#endif

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInternal = 3;

void apply_threads(int threads, grundy::SolverOptions& opts) {
    if (threads < 1) throw grundy::InputError("--threads must be at least 1");
    if (threads == 1) return;
    opts.parallel = true;
#ifdef GRUNDY_HAVE_OPENMP
    omp_set_num_threads(threads);
#else
    std::cerr << "note: built without OpenMP, running on one thread\n";
#endif
}

const char* status_name(grundy::SolveStatus s) {
    return s == grundy::SolveStatus::Exact ? "exact" : "budget-exceeded";
}

void print_sequence_line(const char* key, const grundy::VertexSequence& s) {
    std::cout << key;
    for (int v : s) std::cout << ' ' << v;
    std::cout << '\n';
}

struct SolveFlags {
    std::string graph_path;
    std::optional<uint64_t> budget;
    bool no_memo = false;
    bool witness = false;
    bool degree_heuristic = false;
    int threads = 1;
    int max_vertices = 24;
    bool json = false;
};

int run_solve(const SolveFlags& f) {
    grundy::SolverOptions opts;
    opts.budget = f.budget;
    opts.use_memo = !f.no_memo;
    opts.degree_heuristic = f.degree_heuristic;
    opts.max_vertices = f.max_vertices;
    apply_threads(f.threads, opts);

    const grundy::Graph g = grundy::read_edge_list_file(f.graph_path);
    const grundy::SolveResult r = grundy::grundy_domination_number(g, opts);

    if (f.json) {
        const nlohmann::json j = {
            {"schema", grundy::kJsonSchema}, {"command", "solve"}, {"result", r}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "gamma_gr " << r.gamma_gr << '\n';
        std::cout << "status " << status_name(r.status) << '\n';
        if (r.status == grundy::SolveStatus::BudgetExceeded)
            std::cout << "note gamma_gr is the best sequence found, a lower bound\n";
        if (f.witness) print_sequence_line("witness", r.witness);
        std::cout << "explored_states " << r.stats.explored_states << '\n';
        std::cout << "memo_entries " << r.stats.memo_entries << '\n';
        std::cout << "memo_hits " << r.stats.memo_hits << '\n';
        std::cout << "elapsed_seconds " << r.stats.elapsed_seconds << '\n';
    }
    return r.status == grundy::SolveStatus::Exact ? kExitOk : kExitBudget;
}

int run_verify(const std::string& graph_path, const std::string& seq_path, bool json) {
    const grundy::Graph g = grundy::read_edge_list_file(graph_path);
    const grundy::VertexSequence s = grundy::read_sequence_file(seq_path);
    const grundy::LegalityReport report = grundy::check_legal(g, s);
    const bool dominating = report.legal && grundy::is_dominating_sequence(g, s);

    if (json) {
        const nlohmann::json j = {{"schema", grundy::kJsonSchema},
                                  {"command", "verify"},
                                  {"sequence", s},
                                  {"report", report},
                                  {"dominating", dominating}};
        std::cout << j.dump(2) << '\n';
        return kExitOk;
    }

    std::cout << "legal " << (report.legal ? "true" : "false") << '\n';
    if (!report.legal) std::cout << "first_illegal " << report.first_illegal << '\n';
    std::cout << "dominating " << (dominating ? "true" : "false") << '\n';
    for (size_t i = 0; i < report.step_footprints.size(); ++i) {
        std::cout << "step " << i << " vertex " << s[i] << " footprint";
        for (int v : report.step_footprints[i].to_vector()) std::cout << ' ' << v;
        std::cout << '\n';
    }
    return kExitOk;
}

struct GenFlags {
    int p = 0;
    int n = 0;
    std::string method = "a";
    std::string emit = "labels";
};

int run_sierpinski_gen(const GenFlags& f) {
    if (f.emit == "labels" || f.emit == "both") {
        const grundy::LabelSequence seq = f.method == "a"
                                              ? grundy::a_sequence(f.p, f.n)
                                              : grundy::l_sequence(f.p, f.n);
        for (size_t k = 0; k < seq.size(); ++k)
            std::cout << grundy::format_label(seq.label(k)) << '\n';
    }
    if (f.emit == "graph" || f.emit == "both") {
        if (f.emit == "both") std::cout << "# graph\n";
        grundy::write_edge_list(std::cout, grundy::build_sierpinski(f.p, f.n).graph);
    }
    return kExitOk;
}

struct IntervalFlags {
    std::string model_path;
    bool witness = false;
    std::string graph_out;
    bool json = false;
};

int run_interval_solve(const IntervalFlags& f) {
    const grundy::IntervalModel model = grundy::read_interval_model_file(f.model_path);
    const grundy::EndpointSequence events = grundy::build_endpoint_sequence(model);
    const grundy::VertexSequence witness = grundy::grundy_interval(model);
    const int pairs = grundy::count_ab_pairs(events);

    if (!f.graph_out.empty()) {
        std::ofstream out(f.graph_out);
        if (!out) throw grundy::InputError("cannot open '" + f.graph_out + "'");
        grundy::write_edge_list(out, grundy::intersection_graph(model));
    }

    if (f.json) {
        const nlohmann::json j = {{"schema", grundy::kJsonSchema},
                                  {"command", "interval-solve"},
                                  {"gamma_gr", witness.size()},
                                  {"pair_count", pairs},
                                  {"witness", witness},
                                  {"endpoint_sequence", events}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "gamma_gr " << witness.size() << '\n';
        std::cout << "pair_count " << pairs << '\n';
        if (f.witness) print_sequence_line("witness", witness);
    }
    return kExitOk;
}

struct AnalyzeFlags {
    std::string graph_path;
    std::optional<uint64_t> budget;
    int threads = 1;
    bool json = false;
};

grundy::SolverOptions analyze_options(const AnalyzeFlags& f) {
    grundy::SolverOptions opts;
    opts.budget = f.budget;
    apply_threads(f.threads, opts);
    return opts;
}

int run_analyze_edges(const AnalyzeFlags& f) {
    const grundy::Graph g = grundy::read_edge_list_file(f.graph_path);
    const grundy::EdgeRemovalProfile profile =
        grundy::edge_removal_profile(g, analyze_options(f));

    if (f.json) {
        const nlohmann::json j = {{"schema", grundy::kJsonSchema},
                                  {"command", "analyze-edges"},
                                  {"profile", profile}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "gamma_gr " << profile.gamma_before << " "
                  << status_name(profile.base_status) << '\n';
        std::cout << "# u v role gamma_before gamma_after delta status\n";
        for (const auto& r : profile.records)
            std::cout << r.u << ' ' << r.v << ' ' << (r.role.empty() ? "-" : r.role)
                      << ' ' << profile.gamma_before << ' ' << r.gamma_after << ' '
                      << r.delta << ' ' << status_name(r.status) << '\n';
    }
    return profile.exact() ? kExitOk : kExitBudget;
}

int run_analyze_vertices(const AnalyzeFlags& f) {
    const grundy::Graph g = grundy::read_edge_list_file(f.graph_path);
    const grundy::VertexRemovalProfile profile =
        grundy::vertex_removal_profile(g, analyze_options(f));

    if (f.json) {
        const nlohmann::json j = {{"schema", grundy::kJsonSchema},
                                  {"command", "analyze-vertices"},
                                  {"profile", profile}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "gamma_gr " << profile.gamma_before << " "
                  << status_name(profile.base_status) << '\n';
        std::cout << "# vertex role gamma_before gamma_after delta status\n";
        for (const auto& r : profile.records)
            std::cout << r.vertex << ' ' << (r.role.empty() ? "-" : r.role) << ' '
                      << profile.gamma_before << ' ' << r.gamma_after << ' ' << r.delta
                      << ' ' << status_name(r.status) << '\n';
    }
    return profile.exact() ? kExitOk : kExitBudget;
}

struct FamilyFlags {
    std::string family;
    int m = 0;
    int n = 0;
    std::string out_path;
};

void emit_h_family(std::ostream& out, int m, int n) {
    const grundy::HFamily h = grundy::make_h_family(m, n);
    out << "# H family: path on " << m << " vertices joined to a cycle on " << n
        << " vertices\n";
    out << h.graph.vertex_count() << ' ' << h.graph.edge_count() << '\n';
    for (const auto& [u, v] : h.graph.edges())
        out << u << ' ' << v << " # " << h.edge_role(u, v) << '\n';
}

void emit_g_family(std::ostream& out, int m, int n) {
    const grundy::GFamily f = grundy::make_g_family(m, n);
    out << "# G family: path on " << m << " vertices, end identified with a K_" << n
        << " vertex\n";
    for (int v = 0; v < f.graph.vertex_count(); ++v)
        out << "# vertex " << v << ' ' << f.vertex_role(v) << '\n';
    grundy::write_edge_list(out, f.graph);
}

int run_families(const FamilyFlags& f) {
    std::ofstream file;
    if (!f.out_path.empty()) {
        file.open(f.out_path);
        if (!file) throw grundy::InputError("cannot open '" + f.out_path + "'");
    }
    std::ostream& out = f.out_path.empty() ? std::cout : file;
    if (f.family == "h") emit_h_family(out, f.m, f.n);
    else emit_g_family(out, f.m, f.n);
    return kExitOk;
}

struct AcceptFlags {
    uint64_t seed = 1;
    std::optional<uint64_t> budget;
    bool parallel = false;
    bool json = false;
};

int run_accept(const AcceptFlags& f) {
    grundy::AcceptanceOptions opts;
    opts.seed = f.seed;
    opts.budget = f.budget;
    opts.parallel = f.parallel;
    const grundy::AcceptanceReport report = grundy::run_acceptance_suite(opts);

    if (f.json) {
        const nlohmann::json j = {{"schema", grundy::kJsonSchema},
                                  {"command", "accept"},
                                  {"report", report}};
        std::cout << j.dump(2) << '\n';
    } else {
        grundy::print_acceptance_report(std::cout, report);
    }
    return report.all_passed() ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grundy domination: exact solver, Sierpinski and interval families, "
                 "removal analysis"};
    app.require_subcommand(1);

    SolveFlags solve_flags;
    CLI::App* solve = app.add_subcommand("solve", "Compute gamma_gr of an edge-list graph");
    solve->add_option("graph", solve_flags.graph_path, "edge-list file")->required();
    solve->add_option("--budget", solve_flags.budget,
                      "abort after this many memo insertions (node expansions with "
                      "--no-memo)");
    solve->add_flag("--no-memo", solve_flags.no_memo, "plain DFS without memoization");
    solve->add_flag("--witness", solve_flags.witness, "print a longest legal sequence");
    solve->add_flag("--degree-heuristic", solve_flags.degree_heuristic,
                    "visit high-degree vertices first");
    solve->add_option("--threads", solve_flags.threads,
                      "worker threads; more than 1 enables the parallel solver");
    solve->add_option("--max-vertices", solve_flags.max_vertices,
                      "refuse graphs larger than this (default 24, hard cap 56)");
    solve->add_flag("--json", solve_flags.json, "JSON output");

    std::string verify_graph, verify_seq;
    bool verify_json = false;
    CLI::App* verify =
        app.add_subcommand("verify", "Check a vertex sequence for legality");
    verify->add_option("graph", verify_graph, "edge-list file")->required();
    verify->add_option("sequence", verify_seq, "sequence file")->required();
    verify->add_flag("--json", verify_json, "JSON output");

    GenFlags gen_flags;
    CLI::App* sierpinski =
        app.add_subcommand("sierpinski", "Sierpinski graph constructions");
    sierpinski->require_subcommand(1);
    CLI::App* gen = sierpinski->add_subcommand(
        "gen", "Generate a dominating sequence or the graph itself");
    gen->add_option("--p", gen_flags.p, "base (clique size)")->required();
    gen->add_option("--n", gen_flags.n, "dimension")->required();
    gen->add_option("--method", gen_flags.method, "label sequence family")
        ->check(CLI::IsMember({"a", "l"}));
    gen->add_option("--emit", gen_flags.emit, "what to print")
        ->check(CLI::IsMember({"labels", "graph", "both"}));

    IntervalFlags interval_flags;
    CLI::App* interval = app.add_subcommand("interval", "Interval graph algorithms");
    interval->require_subcommand(1);
    CLI::App* isolve =
        interval->add_subcommand("solve", "gamma_gr of an interval model by sweep");
    isolve->add_option("model", interval_flags.model_path, "interval model file")
        ->required();
    isolve->add_flag("--witness", interval_flags.witness,
                     "print the sweep sequence (original vertex indices)");
    isolve->add_option("--graph-out", interval_flags.graph_out,
                       "write the intersection graph as an edge list");
    isolve->add_flag("--json", interval_flags.json, "JSON output");

    AnalyzeFlags edge_flags, vertex_flags;
    CLI::App* analyze =
        app.add_subcommand("analyze", "Removal effect on gamma_gr, element by element");
    analyze->require_subcommand(1);
    CLI::App* aedges = analyze->add_subcommand("edges", "gamma_gr(G-e) for every edge");
    aedges->add_option("graph", edge_flags.graph_path, "edge-list file")->required();
    aedges->add_option("--budget", edge_flags.budget, "per-solve state budget");
    aedges->add_option("--threads", edge_flags.threads, "parallel per-edge solves");
    aedges->add_flag("--json", edge_flags.json, "JSON output");
    CLI::App* averts =
        analyze->add_subcommand("vertices", "gamma_gr(G-u) for every vertex");
    averts->add_option("graph", vertex_flags.graph_path, "edge-list file")->required();
    averts->add_option("--budget", vertex_flags.budget, "per-solve state budget");
    averts->add_option("--threads", vertex_flags.threads, "parallel per-vertex solves");
    averts->add_flag("--json", vertex_flags.json, "JSON output");

    FamilyFlags family_flags;
    CLI::App* families =
        app.add_subcommand("families", "Emit an extremal H or G family graph");
    families->add_option("--family", family_flags.family, "h or g")
        ->required()
        ->check(CLI::IsMember({"h", "g"}));
    families->add_option("--m", family_flags.m, "path length parameter")->required();
    families->add_option("--n", family_flags.n, "cycle or clique size")->required();
    families->add_option("--out", family_flags.out_path, "output file (default stdout)");

    AcceptFlags accept_flags;
    CLI::App* accept = app.add_subcommand("accept", "Run the acceptance suite");
    accept->add_option("--seed", accept_flags.seed, "base seed for random corpora");
    accept->add_option("--budget", accept_flags.budget, "solver budget override");
    accept->add_flag("--parallel", accept_flags.parallel,
                     "parallel removal-analysis solves");
    accept->add_flag("--json", accept_flags.json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (solve->parsed()) return run_solve(solve_flags);
        if (verify->parsed()) return run_verify(verify_graph, verify_seq, verify_json);
        if (gen->parsed()) return run_sierpinski_gen(gen_flags);
        if (isolve->parsed()) return run_interval_solve(interval_flags);
        if (aedges->parsed()) return run_analyze_edges(edge_flags);
        if (averts->parsed()) return run_analyze_vertices(vertex_flags);
        if (families->parsed()) return run_families(family_flags);
        if (accept->parsed()) return run_accept(accept_flags);
        std::cerr << "error: no subcommand\n";
        return kExitInput;
    } catch (const grundy::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const grundy::InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
