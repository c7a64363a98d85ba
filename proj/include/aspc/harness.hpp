#ifndef ASPC_HARNESS_HPP
#define ASPC_HARNESS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "aspc/run_types.hpp"
#include "aspc/scoring.hpp"
#include "aspc/verification.hpp"

// Competition orchestration: loads a suite manifest, executes every
// (system, problem, instance) triple under resource limits, verifies and
// classifies the answers, persists everything to a results directory, and
// scores/reports from that store alone.
//
// Manifest format: line-oriented sections. `[suite]` sets defaults
// (alpha, t_out, memory, n); `[system <name>]` declares a command template
// with {encoding}, {instance} and {query} placeholders; `[problem <name>]`
// declares type, category, encoding, repeated `instance =` lines, query
// and checker entries. Paths are resolved relative to the manifest file.

namespace aspc {

class ManifestError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SystemSpec {
    std::string name;
    std::string command;  // template with {encoding} {instance} {query}
};

struct ProblemSpec {
    std::string name;
    ProblemType type = ProblemType::Search;
    Category category = Category::NP;
    std::optional<std::string> encoding_path;
    std::vector<std::string> instance_paths;
    std::optional<std::string> query_path;
    std::optional<std::string> checker_command;  // invoked as `cmd <instance> <witness>`
};

struct SuiteManifest {
    ScoringConfig defaults;
    std::uint64_t memory_cap = std::uint64_t{3} << 30;  // 3 GiB
    std::vector<SystemSpec> systems;
    std::vector<ProblemSpec> problems;
};

/// Parses "4096", "256MiB", "3GiB", "16KiB".
std::optional<std::uint64_t> parse_memory_size(const std::string& text);

/// Loads and validates a manifest; throws ManifestError with a message
/// naming the offending line or file.
SuiteManifest load_manifest(const std::string& path);

/// Substitutes the placeholder paths into a command template.
std::string build_command(const std::string& command_template,
                          const std::string& encoding_path,
                          const std::string& instance_path,
                          const std::string& query_path);

/// Runs one solver process under the given limits, stdout to stdout_path.
RunRecord run_instance(const SystemSpec& system, const ProblemSpec& problem, int index,
                       double t_out, std::uint64_t memory_cap, const std::string& stdout_path);

struct RunSuiteOptions {
    std::string results_dir;
    bool resume = false;
    int jobs = 1;
    std::optional<double> t_out;           // overrides manifest default
    std::optional<std::uint64_t> memory;   // overrides manifest default
    bool cross_check = false;  // also run the stability check where possible
};

struct SuiteSummary {
    int executed = 0;
    int skipped = 0;
    int infrastructure_errors = 0;
    int cross_check_disagreements = 0;
};

SuiteSummary run_suite(const SuiteManifest& manifest, const RunSuiteOptions& options);

/// One persisted run: the raw record plus everything derived from it.
struct StoredRun {
    RunRecord record;
    SolverOutputKind output_kind = SolverOutputKind::Malformed;
    std::optional<long long> cost;          // checker-validated witness cost
    bool optimum_claimed = false;
    std::optional<bool> query_answer;
    std::optional<CheckerVerdict> verdict;
    std::string checker_error;
    bool cross_check_disagreement = false;
    OutcomeKind outcome = OutcomeKind::Crash;
};

struct StoredProblem {
    ProblemSpec spec;
};

struct ResultsStore {
    ScoringConfig defaults;
    std::uint64_t memory_cap = 0;
    std::vector<SystemSpec> systems;
    std::vector<ProblemSpec> problems;
    // (system, problem) -> runs ordered by instance index
    std::map<std::pair<std::string, std::string>, std::vector<StoredRun>> runs;
};

ResultsStore load_results(const std::string& results_dir);

/// Scores every (system, problem) pair of the store. Best costs per
/// optimization instance are the minima over all systems' validated
/// witnesses.
std::map<std::string, std::vector<ProblemScore>> score_store(const ResultsStore& store);

std::string render_ranking(const ResultsStore& store,
                           const std::map<std::string, std::vector<ProblemScore>>& scores);
std::string render_breakdown(const ResultsStore& store,
                             const std::map<std::string, std::vector<ProblemScore>>& scores);
std::string render_scores_csv(const ResultsStore& store,
                              const std::map<std::string, std::vector<ProblemScore>>& scores);
std::string render_cactus_csv(const ResultsStore& store);

/// Writes report.txt, scores.csv and cactus.csv into out_dir; re-emitting
/// from the same store yields byte-identical files.
std::vector<std::string> emit_report(const ResultsStore& store, const std::string& out_dir);

}  // namespace aspc

#endif
