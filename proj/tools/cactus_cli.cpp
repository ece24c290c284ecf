// Command-line front end: solve, oracle, verify, gen, root, audit-check.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cactus/compression.hpp"
#include "cactus/disjoint_solver.hpp"
#include "cactus/generator.hpp"
#include "cactus/graph_io.hpp"
#include "cactus/multigraph.hpp"
#include "cactus/oracle.hpp"
#include "cactus/recognizer.hpp"

namespace {

using cactus::ClassMode;
using cactus::MultiGraph;
using cactus::VertexId;
using json = nlohmann::ordered_json;

constexpr int kExitFeasible = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitError = 2;

ClassMode mode_from_name(const std::string& name) {
    if (name == "cvd") return ClassMode::Cactus;
    if (name == "ect") return ClassMode::OddCactus;
    throw std::runtime_error("unknown mode '" + name + "' (expected cvd or ect)");
}

// File header decides the mode; --mode may override, but asking for ect
// semantics on an unweighted file is rejected.
ClassMode resolve_mode(const cactus::GraphFile& file, const std::string& override_name) {
    if (override_name.empty()) return file.mode;
    ClassMode wanted = mode_from_name(override_name);
    if (wanted == ClassMode::OddCactus && file.mode == ClassMode::Cactus)
        throw std::runtime_error("--mode ect requires a weighted (ect) input file");
    return wanted;
}

struct SolveArgs {
    std::string file;
    std::string mode_name;
    std::string audit_path;
    int k = -1;
    bool k_set = false;
    bool sweep_min = false;
    bool stats = false;
};

int run_solve(const SolveArgs& args) {
    cactus::GraphFile file = cactus::read_graph_file(args.file);
    ClassMode mode = resolve_mode(file, args.mode_name);
    if (!args.sweep_min && !args.k_set)
        throw std::runtime_error("solve requires --k (or --min)");

    std::ofstream audit_out;
    cactus::SolveOptions opts;
    if (!args.audit_path.empty()) {
        audit_out.open(args.audit_path);
        if (!audit_out) throw std::runtime_error("cannot open audit file '" + args.audit_path + "'");
        opts.audit = [&audit_out](const cactus::AuditRecord& rec) {
            audit_out << cactus::audit_to_json_lines(rec);
        };
    }

    cactus::SearchStats stats;
    const auto t0 = std::chrono::steady_clock::now();
    bool feasible = false;
    int reported_k = 0;
    std::vector<VertexId> solution;

    if (args.sweep_min) {
        std::optional<int> cap;
        if (args.k_set) cap = args.k;
        auto best = cactus::find_min(file.graph, mode, cap, opts, &stats);
        if (best) {
            feasible = true;
            reported_k = best->first;
            solution = best->second.vertices;
        } else {
            reported_k = cap ? *cap : static_cast<int>(file.graph.vertex_count());
        }
    } else {
        if (args.k < 0) throw std::runtime_error("--k must be non-negative");
        reported_k = args.k;
        auto sol = cactus::solve(file.graph, args.k, mode, opts, &stats);
        if (sol) {
            feasible = true;
            solution = sol->vertices;
        }
    }
    const auto t1 = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    json out;
    out["feasible"] = feasible;
    out["k"] = reported_k;
    out["solution"] = solution;
    out["nodes"] = stats.nodes;
    out["time_ms"] = ms;
    std::cout << out.dump() << "\n";

    if (args.stats) {
        std::cerr << (feasible ? "feasible" : "infeasible") << ", k=" << reported_k
                  << ", |solution|=" << solution.size() << ", nodes=" << stats.nodes
                  << ", branch nodes=" << stats.branch_nodes << ", " << ms << " ms\n";
        for (const auto& [rule, count] : stats.rule_applications)
            std::cerr << "  " << rule << ": " << count << "\n";
    }
    return feasible ? kExitFeasible : kExitInfeasible;
}

int run_oracle(const std::string& path, const std::string& mode_name,
               std::optional<int> cap, bool allow_large) {
    cactus::GraphFile file = cactus::read_graph_file(path);
    ClassMode mode = resolve_mode(file, mode_name);
    if (!cap) {
        if (const char* env = std::getenv("CACTUS_ORACLE_CAP")) cap = std::atoi(env);
    }
    const std::size_t guard = allow_large ? file.graph.vertex_count() : 20;
    cactus::OracleResult res = cactus::min_deletion_set(file.graph, mode, cap, guard);

    json out;
    out["min_size"] = res.min_size ? *res.min_size : -1;
    out["witness"] = res.witness;
    std::cout << out.dump() << "\n";
    return res.min_size ? kExitFeasible : kExitInfeasible;
}

std::vector<VertexId> solution_from_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    json j = json::parse(in);
    json arr;
    if (j.is_array())
        arr = j;
    else if (j.contains("solution"))
        arr = j["solution"];
    else if (j.contains("witness"))
        arr = j["witness"];
    else
        throw std::runtime_error("expected a JSON array or an object with 'solution'");
    std::vector<VertexId> out;
    for (const auto& item : arr) out.push_back(item.get<VertexId>());
    return out;
}

int run_verify(const std::string& graph_path, const std::string& solution_path,
               const std::string& mode_name) {
    cactus::GraphFile file = cactus::read_graph_file(graph_path);
    ClassMode mode = resolve_mode(file, mode_name);
    std::vector<VertexId> xs = solution_from_json(solution_path);
    std::set<VertexId> del(xs.begin(), xs.end());
    cactus::Verdict verdict = cactus::class_check(file.graph.delete_vertices(del), mode);
    if (verdict.member) {
        std::cerr << "valid: deleting " << del.size() << " vertices leaves a "
                  << cactus::to_string(mode) << " forest\n";
        return kExitFeasible;
    }
    std::cerr << "invalid: residual graph violates the " << cactus::to_string(mode)
              << " condition\n";
    return kExitInfeasible;
}

struct GenArgs {
    std::string mode_name = "cvd";
    std::string out_path;
    int n = 10;
    int plant_r = 0;
    std::uint64_t seed = 0;
    int cycle_min = 0;
    int cycle_max = 0;
};

int run_gen(const GenArgs& args) {
    cactus::GenConfig cfg;
    cfg.mode = mode_from_name(args.mode_name);
    cfg.n = args.n;
    cfg.seed = args.seed;
    cfg.cycle_min = args.cycle_min;
    cfg.cycle_max = args.cycle_max;
    MultiGraph g = cactus::gen_class_graph(cfg);
    if (args.plant_r > 0) g = cactus::plant(g, args.plant_r, cfg).first;

    std::ostringstream comment;
    comment << "generated: mode=" << args.mode_name << " n=" << args.n
            << " plant=" << args.plant_r << " seed=" << args.seed;
    cactus::write_graph_file(args.out_path, g, cfg.mode, comment.str());
    std::cerr << "wrote " << g.vertex_count() << " vertices, " << g.edge_count()
              << " edges to " << args.out_path << "\n";
    return kExitFeasible;
}

int run_root(const std::string& factors_csv) {
    std::vector<double> factors;
    std::stringstream ss(factors_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        factors.push_back(std::stod(tok));
    }
    double root = cactus::branching_factor_root(factors);
    std::cout.precision(10);
    std::cout << root << "\n";
    return kExitFeasible;
}

int run_audit_check(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    constexpr double kTol = 1e-9;
    std::string line;
    int lineno = 0;
    std::size_t violations = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json rec = json::parse(line);
        const std::string rule = rec.at("rule").get<std::string>();
        const double drop =
            rec.at("mu_parent").get<double>() - rec.at("mu_child").get<double>();
        const double bound = rec.at("bound").get<double>();
        bool ok = drop >= bound - kTol;
        if (rule == "rr_forced_delete") ok = ok && drop <= bound + kTol;
        if (!ok) {
            ++violations;
            std::cerr << "line " << lineno << ": " << rule << " dropped " << drop
                      << ", bound " << bound << "\n";
        }
    }
    if (violations == 0) {
        std::cerr << "all records meet their bounds\n";
        return kExitFeasible;
    }
    std::cerr << violations << " violating record(s)\n";
    return kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver for cactus vertex deletion and even cycle transversal"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Decide feasibility for a budget k");
    solve->add_option("--k", solve_args.k, "Deletion budget (cap when used with --min)")
        ->check(CLI::NonNegativeNumber);
    solve->add_flag("--min", solve_args.sweep_min, "Sweep k upward and report the minimum");
    solve->add_option("--audit", solve_args.audit_path, "Write measure-audit JSON lines here");
    solve->add_flag("--stats", solve_args.stats, "Print search statistics to stderr");
    solve->add_option("--mode", solve_args.mode_name, "Override the file's problem (cvd|ect)");
    solve->add_option("file", solve_args.file, "Input graph file")->required();

    std::string oracle_file, oracle_mode;
    int oracle_cap = -1;
    bool oracle_allow_large = false;
    auto* oracle = app.add_subcommand("oracle", "Brute-force minimum deletion set");
    oracle->add_option("--cap", oracle_cap, "Largest deletion size to try");
    oracle->add_flag("--allow-large", oracle_allow_large, "Lift the 20-vertex guard");
    oracle->add_option("--mode", oracle_mode, "Override the file's problem (cvd|ect)");
    oracle->add_option("file", oracle_file, "Input graph file")->required();

    std::string verify_graph, verify_solution, verify_mode;
    auto* verify = app.add_subcommand("verify", "Check a deletion set against a graph");
    verify->add_option("file", verify_graph, "Input graph file")->required();
    verify->add_option("solution", verify_solution, "Solution JSON")->required();
    verify->add_option("--mode", verify_mode, "Override the file's problem (cvd|ect)");

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "Generate a class graph, optionally with noise");
    gen->add_option("--mode", gen_args.mode_name, "cvd or ect")->required();
    gen->add_option("--n", gen_args.n, "Base vertex count")->check(CLI::PositiveNumber);
    gen->add_option("--plant", gen_args.plant_r, "Planted noise vertices");
    gen->add_option("--seed", gen_args.seed, "Generator seed");
    gen->add_option("--cycle-min", gen_args.cycle_min, "Minimum attached cycle length");
    gen->add_option("--cycle-max", gen_args.cycle_max, "Maximum attached cycle length");
    gen->add_option("--out", gen_args.out_path, "Output file")->required();

    std::string root_factors;
    auto* root = app.add_subcommand("root", "Branching-polynomial root");
    root->add_option("--factors", root_factors, "Comma-separated decrease factors")->required();

    std::string audit_path;
    auto* audit = app.add_subcommand("audit-check", "Validate a measure-audit dump");
    audit->add_option("path", audit_path, "JSON-lines audit dump")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            solve_args.k_set = solve->count("--k") > 0;
            return run_solve(solve_args);
        }
        if (oracle->parsed()) {
            std::optional<int> cap;
            if (oracle->count("--cap") > 0) cap = oracle_cap;
            return run_oracle(oracle_file, oracle_mode, cap, oracle_allow_large);
        }
        if (verify->parsed()) return run_verify(verify_graph, verify_solution, verify_mode);
        if (gen->parsed()) return run_gen(gen_args);
        if (root->parsed()) return run_root(root_factors);
        if (audit->parsed()) return run_audit_check(audit_path);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
