// aspcomp: ASP-Core toolchain and competition harness.
//
//   parse     check syntax/safety and print the canonical program
//   ground    print the full Herbrand instantiation
//   solve     print one answer set (ANSWER block) or INCONSISTENT
//   query     cautious query answering, prints true/false
//   check     stability check of a witness file (checker protocol)
//   scramble  predicate/variable renaming countermeasure
//   run       execute a competition suite under resource limits
//   score     score a results directory
//   report    write report.txt, scores.csv and cactus.csv
//
// Exit codes: 0 success, 1 usage/input error, 2 internal error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "aspc/harness.hpp"
#include "aspc/parser.hpp"
#include "aspc/semantics.hpp"
#include "aspc/verification.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;

std::string read_file_or_fail(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CLI::ValidationError("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

/// Concatenates and parses program files; prints diagnostics on failure.
std::optional<aspc::Program> load_program(const std::vector<std::string>& files) {
    std::string source;
    for (const auto& f : files) source += read_file_or_fail(f) + "\n";
    aspc::ParseResult result = aspc::parse_program(source);
    if (!result.ok()) {
        for (const auto& d : result.diagnostics) std::cerr << d.to_string() << "\n";
        return std::nullopt;
    }
    return result.program;
}

int cmd_parse(const std::vector<std::string>& files) {
    auto program = load_program(files);
    if (!program) return kExitInput;
    std::cout << aspc::print_program(*program);
    return kExitOk;
}

int cmd_ground(const std::vector<std::string>& files, std::size_t max_rules) {
    auto program = load_program(files);
    if (!program) return kExitInput;
    aspc::GroundProgram g = aspc::ground_program(*program, {max_rules});
    for (const auto& r : g.rules) std::cout << r.to_string() << "\n";
    return kExitOk;
}

int cmd_solve(const std::vector<std::string>& files, std::size_t limit, bool all, std::size_t max_rules) {
    auto program = load_program(files);
    if (!program) return kExitInput;
    aspc::AnswerSetResult result =
        aspc::enumerate_answer_sets(*program, all ? limit : std::size_t{1}, {max_rules});
    if (result.status == aspc::SolveStatus::Inconsistent) {
        std::cout << "INCONSISTENT\n";
        return kExitOk;  // an answer, not an error
    }
    for (const auto& a : result.answer_sets) {
        std::cout << "ANSWER\n" << a.to_string() << "\n";
    }
    return kExitOk;
}

int cmd_query(std::vector<std::string> files, std::size_t max_rules) {
    std::string query_file = files.back();
    files.pop_back();
    auto program = load_program(files);
    if (!program) return kExitInput;
    aspc::QueryParseResult q = aspc::parse_query(read_file_or_fail(query_file));
    if (!q.ok()) {
        std::cerr << query_file << ":" << q.diagnostic->to_string() << "\n";
        return kExitInput;
    }
    std::cout << (aspc::cautious_entails(*program, *q.query, {max_rules}) ? "true" : "false") << "\n";
    return kExitOk;
}

int cmd_check(std::vector<std::string> files, const std::string& encoding, std::size_t max_rules) {
    std::string witness_file = files.back();
    files.pop_back();
    if (!encoding.empty()) files.insert(files.begin(), encoding);
    if (files.empty()) {
        std::cerr << "check needs at least one program file before the witness\n";
        return kExitInput;
    }
    auto program = load_program(files);
    if (!program) return kExitInput;

    aspc::SolverOutput output =
        aspc::parse_solver_output(read_file_or_fail(witness_file), aspc::ProblemType::Search);
    if (output.kind != aspc::SolverOutputKind::Witness) {
        std::cerr << "witness file has no ANSWER block: " << witness_file << "\n";
        return kExitInput;
    }
    bool stable = aspc::stability_check(*program, output.witness, {max_rules});
    std::cout << (stable ? "OK" : "FAIL") << "\n";
    return kExitOk;
}

int cmd_scramble(const std::vector<std::string>& files, std::uint64_t seed, const std::string& map_out) {
    auto program = load_program(files);
    if (!program) return kExitInput;
    auto [scrambled, map] = aspc::scramble(*program, seed);
    std::cout << aspc::print_program(scrambled);
    if (!map_out.empty()) {
        nlohmann::json j;
        j["seed"] = map.seed;
        j["predicate_renaming"] = map.predicate_renaming;
        std::ofstream out(map_out);
        out << j.dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_run(const std::string& manifest_path, aspc::RunSuiteOptions options) {
    aspc::SuiteManifest manifest = aspc::load_manifest(manifest_path);
    aspc::SuiteSummary summary = aspc::run_suite(manifest, options);
    std::cout << "executed " << summary.executed << " run(s), skipped " << summary.skipped << "\n";
    if (summary.infrastructure_errors > 0) {
        std::cerr << "warning: " << summary.infrastructure_errors << " run(s) hit checker failures\n";
    }
    if (summary.cross_check_disagreements > 0) {
        std::cerr << "warning: " << summary.cross_check_disagreements
                  << " witness(es) where checker and stability check disagree\n";
    }
    return kExitOk;
}

int cmd_score(const std::string& results_dir) {
    aspc::ResultsStore store = aspc::load_results(results_dir);
    auto scores = aspc::score_store(store);
    std::cout << aspc::render_ranking(store, scores) << "\n" << aspc::render_breakdown(store, scores);
    std::ofstream csv(fs::path(results_dir) / "scores.csv");
    csv << aspc::render_scores_csv(store, scores);
    return kExitOk;
}

int cmd_report(const std::string& results_dir, const std::string& out_dir) {
    aspc::ResultsStore store = aspc::load_results(results_dir);
    std::vector<std::string> files =
        aspc::emit_report(store, out_dir.empty() ? results_dir : out_dir);
    for (const auto& f : files) std::cout << f << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ASP-Core toolchain and competition harness"};
    app.require_subcommand(1);

    std::vector<std::string> files;
    std::size_t max_rules = 1'000'000;
    std::size_t limit = aspc::kNoLimit;
    bool all = false;
    std::string encoding;
    std::uint64_t seed = 0;
    std::string map_out;
    std::string manifest_path;
    std::string results_dir;
    std::string out_dir;
    std::string memory_text;
    double timeout = 0.0;
    aspc::RunSuiteOptions run_options;

    auto* parse_cmd = app.add_subcommand("parse", "parse programs and print canonical syntax");
    parse_cmd->add_option("files", files, "program files")->required()->check(CLI::ExistingFile);

    auto* ground_cmd = app.add_subcommand("ground", "print the ground instantiation");
    ground_cmd->add_option("files", files, "program files")->required()->check(CLI::ExistingFile);
    ground_cmd->add_option("--max-rules", max_rules, "ground rule cap");

    auto* solve_cmd = app.add_subcommand("solve", "compute an answer set");
    solve_cmd->add_option("files", files, "program files")->required()->check(CLI::ExistingFile);
    solve_cmd->add_flag("--all", all, "print every answer set");
    solve_cmd->add_option("--limit", limit, "max answer sets with --all");
    solve_cmd->add_option("--max-rules", max_rules, "ground rule cap");

    auto* query_cmd = app.add_subcommand("query", "cautious query answering (last file is the query)");
    query_cmd->add_option("files", files, "program files then query file")
        ->required()
        ->expected(-2)
        ->check(CLI::ExistingFile);
    query_cmd->add_option("--max-rules", max_rules, "ground rule cap");

    auto* check_cmd = app.add_subcommand("check", "stability-check a witness (last file)");
    check_cmd->add_option("files", files, "program files then witness file")
        ->required()
        ->check(CLI::ExistingFile);
    check_cmd->add_option("--encoding", encoding, "extra program file (checker protocol form)")
        ->check(CLI::ExistingFile);
    check_cmd->add_option("--max-rules", max_rules, "ground rule cap");

    auto* scramble_cmd = app.add_subcommand("scramble", "rename predicates and variables");
    scramble_cmd->add_option("files", files, "program files")->required()->check(CLI::ExistingFile);
    scramble_cmd->add_option("--seed", seed, "scramble seed")->required();
    scramble_cmd->add_option("--map-out", map_out, "write the renaming map as JSON");

    auto* run_cmd = app.add_subcommand("run", "run a competition suite");
    run_cmd->add_option("manifest", manifest_path, "suite manifest")->required()->check(CLI::ExistingFile);
    run_cmd->add_option("--results-dir", run_options.results_dir, "results directory")->required();
    run_cmd->add_flag("--resume", run_options.resume, "skip already-completed runs");
    run_cmd->add_option("--jobs", run_options.jobs, "parallel runs (default 1)");
    auto* timeout_opt = run_cmd->add_option("--timeout", timeout, "override t_out (seconds)");
    auto* memory_opt = run_cmd->add_option("--memory", memory_text, "override memory cap, e.g. 256MiB");
    run_cmd->add_flag("--cross-check", run_options.cross_check,
                      "also stability-check where an encoding exists");

    auto* score_cmd = app.add_subcommand("score", "score a results directory");
    score_cmd->add_option("results", results_dir, "results directory")->required();

    auto* report_cmd = app.add_subcommand("report", "emit report files from a results directory");
    report_cmd->add_option("results", results_dir, "results directory")->required();
    report_cmd->add_option("--out-dir", out_dir, "output directory (default: results dir)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (parse_cmd->parsed()) return cmd_parse(files);
        if (ground_cmd->parsed()) return cmd_ground(files, max_rules);
        if (solve_cmd->parsed()) return cmd_solve(files, limit, all, max_rules);
        if (query_cmd->parsed()) return cmd_query(files, max_rules);
        if (check_cmd->parsed()) return cmd_check(files, encoding, max_rules);
        if (scramble_cmd->parsed()) return cmd_scramble(files, seed, map_out);
        if (run_cmd->parsed()) {
            if (*timeout_opt) run_options.t_out = timeout;
            if (*memory_opt) {
                auto bytes = aspc::parse_memory_size(memory_text);
                if (!bytes) {
                    std::cerr << "bad memory size: " << memory_text << "\n";
                    return kExitInput;
                }
                run_options.memory = bytes;
            }
            return cmd_run(manifest_path, run_options);
        }
        if (score_cmd->parsed()) return cmd_score(results_dir);
        if (report_cmd->parsed()) return cmd_report(results_dir, out_dir);
    } catch (const aspc::ManifestError& e) {
        std::cerr << "manifest error: " << e.what() << "\n";
        return kExitInput;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
    } catch (const aspc::ResourceLimitError& e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInput;
}
