#include "aspc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "aspc/parser.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace aspc {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

std::string format_seconds(double t) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", t);
    return buf;
}

const char* to_string(LimitViolation v) {
    switch (v) {
        case LimitViolation::None: return "none";
        case LimitViolation::Time: return "time";
        case LimitViolation::Memory: return "memory";
    }
    return "?";
}

LimitViolation violation_from_string(const std::string& s) {
    if (s == "time") return LimitViolation::Time;
    if (s == "memory") return LimitViolation::Memory;
    return LimitViolation::None;
}

const char* to_string(SolverOutputKind k) {
    switch (k) {
        case SolverOutputKind::Witness: return "witness";
        case SolverOutputKind::UnsatClaim: return "unsat-claim";
        case SolverOutputKind::QueryAnswer: return "query-answer";
        case SolverOutputKind::Malformed: return "malformed";
    }
    return "?";
}

SolverOutputKind output_kind_from_string(const std::string& s) {
    if (s == "witness") return SolverOutputKind::Witness;
    if (s == "unsat-claim") return SolverOutputKind::UnsatClaim;
    if (s == "query-answer") return SolverOutputKind::QueryAnswer;
    return SolverOutputKind::Malformed;
}

fs::path run_dir(const fs::path& results, const std::string& system, const std::string& problem) {
    return results / "runs" / system / problem;
}

fs::path run_json_path(const fs::path& results, const std::string& system, const std::string& problem,
                       int index) {
    return run_dir(results, system, problem) / ("run_" + std::to_string(index) + ".json");
}

json stored_run_to_json(const StoredRun& run) {
    json j;
    j["system"] = run.record.system;
    j["problem"] = run.record.problem;
    j["instance_index"] = run.record.instance_index;
    j["wall_time"] = run.record.wall_time;
    j["peak_memory"] = run.record.peak_memory;
    j["spawn_failed"] = run.record.spawn_failed;
    j["exit_code"] = run.record.exit_code;
    j["signaled"] = run.record.signaled;
    j["term_signal"] = run.record.term_signal;
    j["stdout_path"] = run.record.stdout_path;
    j["limit_violation"] = to_string(run.record.limit_violation);
    j["output_kind"] = to_string(run.output_kind);
    if (run.cost) j["cost"] = *run.cost;
    j["optimum_claimed"] = run.optimum_claimed;
    if (run.query_answer) j["query_answer"] = *run.query_answer;
    if (run.verdict) {
        j["verdict_valid"] = run.verdict->valid;
        if (run.verdict->cost) j["verdict_cost"] = *run.verdict->cost;
    }
    if (!run.checker_error.empty()) j["checker_error"] = run.checker_error;
    if (run.cross_check_disagreement) j["cross_check_disagreement"] = true;
    j["outcome"] = to_string(run.outcome);
    return j;
}

StoredRun stored_run_from_json(const json& j) {
    StoredRun run;
    run.record.system = j.at("system").get<std::string>();
    run.record.problem = j.at("problem").get<std::string>();
    run.record.instance_index = j.at("instance_index").get<int>();
    run.record.wall_time = j.at("wall_time").get<double>();
    run.record.peak_memory = j.at("peak_memory").get<std::uint64_t>();
    run.record.spawn_failed = j.at("spawn_failed").get<bool>();
    run.record.exit_code = j.at("exit_code").get<int>();
    run.record.signaled = j.at("signaled").get<bool>();
    run.record.term_signal = j.at("term_signal").get<int>();
    run.record.stdout_path = j.at("stdout_path").get<std::string>();
    run.record.limit_violation = violation_from_string(j.at("limit_violation").get<std::string>());
    run.output_kind = output_kind_from_string(j.at("output_kind").get<std::string>());
    if (j.contains("cost")) run.cost = j.at("cost").get<long long>();
    run.optimum_claimed = j.value("optimum_claimed", false);
    if (j.contains("query_answer")) run.query_answer = j.at("query_answer").get<bool>();
    if (j.contains("verdict_valid")) {
        CheckerVerdict verdict;
        verdict.valid = j.at("verdict_valid").get<bool>();
        if (j.contains("verdict_cost")) verdict.cost = j.at("verdict_cost").get<long long>();
        run.verdict = verdict;
    }
    run.checker_error = j.value("checker_error", std::string());
    run.cross_check_disagreement = j.value("cross_check_disagreement", false);
    if (auto outcome = outcome_from_string(j.at("outcome").get<std::string>())) run.outcome = *outcome;
    return run;
}

void save_stored_run(const fs::path& path, const StoredRun& run) {
    write_file(path.string(), stored_run_to_json(run).dump(2) + "\n");
}

std::optional<StoredRun> try_load_stored_run(const fs::path& path) {
    if (!fs::exists(path)) return std::nullopt;
    try {
        return stored_run_from_json(json::parse(read_file(path.string())));
    } catch (const json::exception&) {
        return std::nullopt;
    }
}

/// Parses encoding + instance as one program.
ParseResult parse_problem_program(const ProblemSpec& problem, const std::string& instance_path) {
    std::string source;
    if (problem.encoding_path) source += read_file(*problem.encoding_path) + "\n";
    source += read_file(instance_path);
    return parse_program(source);
}

struct AlignedTable {
    std::vector<std::vector<std::string>> rows;

    void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }

    std::string render() const {
        std::vector<std::size_t> widths;
        for (const auto& row : rows) {
            if (widths.size() < row.size()) widths.resize(row.size(), 0);
            for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
        }
        std::string out;
        for (const auto& row : rows) {
            std::string line;
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c > 0) line += "  ";
                line += row[c];
                if (c + 1 < row.size()) line.append(widths[c] - row[c].size(), ' ');
            }
            out += line;
            out.push_back('\n');
        }
        return out;
    }
};

}  // namespace

std::optional<std::uint64_t> parse_memory_size(const std::string& text) {
    std::string t = trim(text);
    std::uint64_t scale = 1;
    if (t.size() > 3 && t.compare(t.size() - 3, 3, "KiB") == 0) {
        scale = std::uint64_t{1} << 10;
        t = trim(t.substr(0, t.size() - 3));
    } else if (t.size() > 3 && t.compare(t.size() - 3, 3, "MiB") == 0) {
        scale = std::uint64_t{1} << 20;
        t = trim(t.substr(0, t.size() - 3));
    } else if (t.size() > 3 && t.compare(t.size() - 3, 3, "GiB") == 0) {
        scale = std::uint64_t{1} << 30;
        t = trim(t.substr(0, t.size() - 3));
    }
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
    return std::stoull(t) * scale;
}

SuiteManifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ManifestError("cannot open manifest: " + path);
    fs::path base = fs::absolute(fs::path(path)).parent_path();

    auto resolve = [&base](const std::string& p) {
        fs::path fp(p);
        return (fp.is_absolute() ? fp : base / fp).lexically_normal().string();
    };

    SuiteManifest manifest;
    enum class Section { None, Suite, System, Problem };
    Section section = Section::None;
    std::string line;
    int line_no = 0;

    auto fail = [&](const std::string& msg) {
        throw ManifestError(path + ":" + std::to_string(line_no) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        if (s.front() == '[') {
            if (s.back() != ']') fail("unterminated section header");
            std::string header = trim(s.substr(1, s.size() - 2));
            if (header == "suite") {
                section = Section::Suite;
            } else if (header.rfind("system ", 0) == 0) {
                section = Section::System;
                manifest.systems.push_back({trim(header.substr(7)), ""});
                if (manifest.systems.back().name.empty()) fail("system needs a name");
            } else if (header.rfind("problem ", 0) == 0) {
                section = Section::Problem;
                manifest.problems.push_back({});
                manifest.problems.back().name = trim(header.substr(8));
                if (manifest.problems.back().name.empty()) fail("problem needs a name");
            } else {
                fail("unknown section [" + header + "]");
            }
            continue;
        }
        std::size_t eq = s.find('=');
        if (eq == std::string::npos) fail("expected 'key = value'");
        std::string key = trim(s.substr(0, eq));
        std::string value = trim(s.substr(eq + 1));

        switch (section) {
            case Section::None:
                fail("entry before any section header");
                break;
            case Section::Suite:
                if (key == "alpha") {
                    manifest.defaults.alpha = std::stod(value);
                    if (manifest.defaults.alpha < 0 || manifest.defaults.alpha > 100) fail("alpha must be in [0,100]");
                } else if (key == "t_out") {
                    manifest.defaults.t_out = std::stod(value);
                    if (manifest.defaults.t_out <= 0) fail("t_out must be positive");
                } else if (key == "memory") {
                    auto bytes = parse_memory_size(value);
                    if (!bytes) fail("bad memory size '" + value + "'");
                    manifest.memory_cap = *bytes;
                } else if (key == "n") {
                    manifest.defaults.instances_per_problem = std::stoi(value);
                    if (manifest.defaults.instances_per_problem < 1) fail("n must be >= 1");
                } else {
                    fail("unknown suite key '" + key + "'");
                }
                break;
            case Section::System:
                if (key == "command") {
                    manifest.systems.back().command = value;
                } else {
                    fail("unknown system key '" + key + "'");
                }
                break;
            case Section::Problem: {
                ProblemSpec& p = manifest.problems.back();
                if (key == "type") {
                    auto t = problem_type_from_string(value);
                    if (!t) fail("unknown problem type '" + value + "'");
                    p.type = *t;
                } else if (key == "category") {
                    auto c = category_from_string(value);
                    if (!c) fail("unknown category '" + value + "'");
                    p.category = *c;
                } else if (key == "encoding") {
                    p.encoding_path = resolve(value);
                } else if (key == "instance") {
                    p.instance_paths.push_back(resolve(value));
                } else if (key == "query") {
                    p.query_path = resolve(value);
                } else if (key == "checker") {
                    p.checker_command = value;
                } else {
                    fail("unknown problem key '" + key + "'");
                }
                break;
            }
        }
    }

    if (manifest.systems.empty()) throw ManifestError(path + ": no [system] section");
    if (manifest.problems.empty()) throw ManifestError(path + ": no [problem] section");

    std::set<std::string> seen;
    for (const auto& sys : manifest.systems) {
        if (sys.command.empty()) throw ManifestError(path + ": system '" + sys.name + "' has no command");
        if (!seen.insert("sys:" + sys.name).second)
            throw ManifestError(path + ": duplicate system '" + sys.name + "'");
    }
    for (const auto& p : manifest.problems) {
        if (!seen.insert("prob:" + p.name).second)
            throw ManifestError(path + ": duplicate problem '" + p.name + "'");
        if (p.instance_paths.empty()) throw ManifestError(path + ": problem '" + p.name + "' has no instances");
        for (const auto& inst : p.instance_paths) {
            if (!fs::exists(inst))
                throw ManifestError(path + ": problem '" + p.name + "': missing instance " + inst);
        }
        if (p.encoding_path && !fs::exists(*p.encoding_path))
            throw ManifestError(path + ": problem '" + p.name + "': missing encoding " + *p.encoding_path);
        if (p.query_path && !fs::exists(*p.query_path))
            throw ManifestError(path + ": problem '" + p.name + "': missing query " + *p.query_path);
        if (p.type == ProblemType::Query && !p.query_path)
            throw ManifestError(path + ": query problem '" + p.name + "' needs a query file");
        if (!p.checker_command && !p.encoding_path)
            throw ManifestError(path + ": problem '" + p.name +
                                "' needs a checker or an encoding for witness verification");
    }
    return manifest;
}

std::string build_command(const std::string& command_template, const std::string& encoding_path,
                          const std::string& instance_path, const std::string& query_path) {
    std::string out = command_template;
    auto replace_all = [&out](const std::string& placeholder, const std::string& value) {
        std::size_t pos = 0;
        while ((pos = out.find(placeholder, pos)) != std::string::npos) {
            out.replace(pos, placeholder.size(), value);
            pos += value.size();
        }
    };
    replace_all("{encoding}", encoding_path);
    replace_all("{instance}", instance_path);
    replace_all("{query}", query_path);
    return out;
}

RunRecord run_instance(const SystemSpec& system, const ProblemSpec& problem, int index,
                       double t_out, std::uint64_t memory_cap, const std::string& stdout_path) {
    RunRecord record;
    record.system = system.name;
    record.problem = problem.name;
    record.instance_index = index;
    record.stdout_path = stdout_path;

    std::string command = build_command(system.command, problem.encoding_path.value_or(""),
                                        problem.instance_paths.at(index), problem.query_path.value_or(""));
    ProcessLimits limits;
    limits.wall_seconds = t_out;
    limits.memory_bytes = memory_cap;
    ProcessResult proc = run_process(command, stdout_path, limits);

    record.wall_time = proc.wall_seconds;
    record.peak_memory = proc.peak_rss_bytes;
    record.spawn_failed = proc.spawn_failed;
    record.exit_code = proc.exit_code;
    record.signaled = proc.signaled;
    record.term_signal = proc.term_signal;
    record.limit_violation = proc.violation;
    return record;
}

namespace {

struct RunContext {
    const SuiteManifest& manifest;
    const RunSuiteOptions& options;
    fs::path results;
    double t_out;
    std::uint64_t memory_cap;
};

/// Validates a witness or query answer and fills verdict/cost fields.
void verify_answer(const RunContext& ctx, const ProblemSpec& problem, const std::string& instance_path,
                   const fs::path& witness_path, const SolverOutput& output, StoredRun& stored) {
    bool want_cross_check = ctx.options.cross_check && problem.checker_command && problem.encoding_path &&
                            output.kind == SolverOutputKind::Witness;

    if (output.kind == SolverOutputKind::Witness) {
        write_file(witness_path.string(), "ANSWER\n" + output.witness.to_string() + "\n");
    } else {
        write_file(witness_path.string(), output.query_answer ? "true\n" : "false\n");
    }

    if (problem.checker_command) {
        try {
            stored.verdict = run_external_checker(*problem.checker_command, instance_path,
                                                  witness_path.string());
        } catch (const CheckerError& e) {
            stored.checker_error = e.what();
        }
    } else {
        // built-in reference: stability for witnesses, cautious entailment for queries
        try {
            ParseResult parsed = parse_problem_program(problem, instance_path);
            if (!parsed.ok()) throw std::runtime_error("encoding+instance does not parse");
            CheckerVerdict verdict;
            if (output.kind == SolverOutputKind::Witness) {
                verdict.valid = stability_check(*parsed.program, output.witness);
            } else {
                auto query = parse_query(read_file(*problem.query_path));
                if (!query.ok()) throw std::runtime_error("query file does not parse");
                bool reference = cautious_entails(*parsed.program, *query.query);
                verdict.valid = (output.query_answer == reference);
            }
            stored.verdict = verdict;
        } catch (const std::exception& e) {
            stored.checker_error = e.what();
        }
    }

    if (want_cross_check && stored.verdict) {
        try {
            ParseResult parsed = parse_problem_program(problem, instance_path);
            if (parsed.ok()) {
                bool stable = stability_check(*parsed.program, output.witness);
                stored.cross_check_disagreement = (stable != stored.verdict->valid);
            }
        } catch (const std::exception&) {
            // cross-check is best-effort; the checker verdict stands
        }
    }

    if (stored.verdict) stored.cost = stored.verdict->cost;
}

StoredRun execute_task(const RunContext& ctx, const SystemSpec& system, const ProblemSpec& problem,
                       int index) {
    fs::path dir = run_dir(ctx.results, system.name, problem.name);
    fs::create_directories(dir);
    fs::path out_path = dir / ("run_" + std::to_string(index) + ".out");
    fs::path witness_path = dir / ("run_" + std::to_string(index) + ".witness");

    StoredRun stored;
    stored.record = run_instance(system, problem, index, ctx.t_out, ctx.memory_cap, out_path.string());

    SolverOutput output = parse_solver_output(read_file(out_path.string()), problem.type);
    stored.output_kind = output.kind;
    stored.optimum_claimed = output.optimum_claimed;
    if (output.kind == SolverOutputKind::QueryAnswer) stored.query_answer = output.query_answer;

    std::optional<CheckerVerdict>& verdict = stored.verdict;
    bool answered = output.kind == SolverOutputKind::Witness || output.kind == SolverOutputKind::QueryAnswer;
    if (answered && stored.record.limit_violation == LimitViolation::None && !stored.record.spawn_failed) {
        verify_answer(ctx, problem, problem.instance_paths.at(index), witness_path, output, stored);
    }

    stored.outcome = classify_outcome(stored.record, output, verdict, std::nullopt);
    return stored;
}

}  // namespace

SuiteSummary run_suite(const SuiteManifest& manifest, const RunSuiteOptions& options) {
    if (options.results_dir.empty()) throw ManifestError("results directory must be given");
    RunContext ctx{manifest, options, fs::path(options.results_dir),
                   options.t_out.value_or(manifest.defaults.t_out),
                   options.memory.value_or(manifest.memory_cap)};
    fs::create_directories(ctx.results);

    json suite;
    suite["alpha"] = manifest.defaults.alpha;
    suite["t_out"] = ctx.t_out;
    suite["memory_cap"] = ctx.memory_cap;
    suite["n"] = manifest.defaults.instances_per_problem;
    suite["systems"] = json::array();
    for (const auto& sys : manifest.systems) {
        suite["systems"].push_back({{"name", sys.name}, {"command", sys.command}});
    }
    suite["problems"] = json::array();
    for (const auto& p : manifest.problems) {
        json jp;
        jp["name"] = p.name;
        jp["type"] = to_string(p.type);
        jp["category"] = to_string(p.category);
        if (p.encoding_path) jp["encoding"] = *p.encoding_path;
        if (p.query_path) jp["query"] = *p.query_path;
        if (p.checker_command) jp["checker"] = *p.checker_command;
        jp["instances"] = p.instance_paths;
        suite["problems"].push_back(jp);
    }
    write_file((ctx.results / "suite.json").string(), suite.dump(2) + "\n");

    struct Task {
        const SystemSpec* system;
        const ProblemSpec* problem;
        int index;
    };
    std::vector<Task> tasks;
    for (const auto& problem : manifest.problems) {
        for (std::size_t i = 0; i < problem.instance_paths.size(); ++i) {
            for (const auto& system : manifest.systems) {
                tasks.push_back({&system, &problem, static_cast<int>(i)});
            }
        }
    }

    SuiteSummary summary;
    std::mutex mutex;
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            const Task& task = tasks[i];
            fs::path jpath = run_json_path(ctx.results, task.system->name, task.problem->name, task.index);
            if (options.resume && try_load_stored_run(jpath).has_value()) {
                std::lock_guard<std::mutex> lock(mutex);
                ++summary.skipped;
                continue;
            }
            StoredRun stored = execute_task(ctx, *task.system, *task.problem, task.index);
            save_stored_run(jpath, stored);
            std::lock_guard<std::mutex> lock(mutex);
            ++summary.executed;
            if (!stored.checker_error.empty()) ++summary.infrastructure_errors;
            if (stored.cross_check_disagreement) ++summary.cross_check_disagreements;
        }
    };

    int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // peer-evidence pass: unsat claims are wrong exactly when some other
    // system produced a validated witness for the same instance
    ResultsStore store = load_results(options.results_dir);
    for (const auto& problem : store.problems) {
        for (std::size_t i = 0; i < problem.instance_paths.size(); ++i) {
            bool witness_found = false;
            for (const auto& system : store.systems) {
                const auto& runs = store.runs.at({system.name, problem.name});
                if (i < runs.size() && runs[i].output_kind == SolverOutputKind::Witness &&
                    runs[i].outcome == OutcomeKind::CorrectWitness) {
                    witness_found = true;
                    break;
                }
            }
            for (const auto& system : store.systems) {
                auto& runs = store.runs.at({system.name, problem.name});
                if (i >= runs.size() || runs[i].output_kind != SolverOutputKind::UnsatClaim) continue;
                if (runs[i].record.limit_violation != LimitViolation::None) continue;
                OutcomeKind outcome = witness_found ? OutcomeKind::WrongUnsat : OutcomeKind::CorrectUnsat;
                if (outcome != runs[i].outcome) {
                    runs[i].outcome = outcome;
                    save_stored_run(run_json_path(ctx.results, system.name, problem.name,
                                                  static_cast<int>(i)),
                                    runs[i]);
                }
            }
        }
    }
    return summary;
}

ResultsStore load_results(const std::string& results_dir) {
    fs::path results(results_dir);
    fs::path suite_path = results / "suite.json";
    if (!fs::exists(suite_path)) {
        throw std::runtime_error("no suite.json in " + results_dir + "; run the suite first");
    }
    json suite = json::parse(read_file(suite_path.string()));

    ResultsStore store;
    store.defaults.alpha = suite.at("alpha").get<double>();
    store.defaults.t_out = suite.at("t_out").get<double>();
    store.defaults.instances_per_problem = suite.at("n").get<int>();
    store.memory_cap = suite.at("memory_cap").get<std::uint64_t>();
    for (const auto& js : suite.at("systems")) {
        store.systems.push_back({js.at("name").get<std::string>(), js.at("command").get<std::string>()});
    }
    for (const auto& jp : suite.at("problems")) {
        ProblemSpec p;
        p.name = jp.at("name").get<std::string>();
        p.type = problem_type_from_string(jp.at("type").get<std::string>()).value_or(ProblemType::Search);
        p.category = category_from_string(jp.at("category").get<std::string>()).value_or(Category::NP);
        if (jp.contains("encoding")) p.encoding_path = jp.at("encoding").get<std::string>();
        if (jp.contains("query")) p.query_path = jp.at("query").get<std::string>();
        if (jp.contains("checker")) p.checker_command = jp.at("checker").get<std::string>();
        p.instance_paths = jp.at("instances").get<std::vector<std::string>>();
        store.problems.push_back(std::move(p));
    }

    std::vector<std::string> missing;
    for (const auto& system : store.systems) {
        for (const auto& problem : store.problems) {
            std::vector<StoredRun>& runs = store.runs[{system.name, problem.name}];
            for (std::size_t i = 0; i < problem.instance_paths.size(); ++i) {
                fs::path jpath = run_json_path(results, system.name, problem.name, static_cast<int>(i));
                auto run = try_load_stored_run(jpath);
                if (!run) {
                    missing.push_back(jpath.string());
                    runs.push_back({});
                    continue;
                }
                runs.push_back(std::move(*run));
            }
        }
    }
    if (!missing.empty()) {
        throw std::runtime_error("results store incomplete; missing " + std::to_string(missing.size()) +
                                 " run(s), first: " + missing.front());
    }
    return store;
}

std::map<std::string, std::vector<ProblemScore>> score_store(const ResultsStore& store) {
    std::map<std::string, std::vector<ProblemScore>> scores;
    for (const auto& problem : store.problems) {
        std::size_t n = problem.instance_paths.size();

        std::vector<std::optional<long long>> best_costs(n);
        if (problem.type == ProblemType::Optimization) {
            for (const auto& system : store.systems) {
                const auto& runs = store.runs.at({system.name, problem.name});
                for (std::size_t i = 0; i < n; ++i) {
                    if (runs[i].outcome != OutcomeKind::CorrectWitness || !runs[i].cost) continue;
                    if (!best_costs[i] || *runs[i].cost < *best_costs[i]) best_costs[i] = runs[i].cost;
                }
            }
        }

        for (const auto& system : store.systems) {
            const auto& runs = store.runs.at({system.name, problem.name});
            std::vector<InstanceResult> results;
            results.reserve(n);
            for (std::size_t i = 0; i < n; ++i) {
                InstanceResult r;
                r.outcome = runs[i].outcome;
                r.time_seconds = std::min(runs[i].record.wall_time, store.defaults.t_out);
                r.cost = runs[i].cost;
                r.optimum_claimed = runs[i].optimum_claimed;
                results.push_back(r);
            }
            ScoreBreakdown breakdown =
                score_problem(results, best_costs, problem.type,
                              ScoringConfig{store.defaults.alpha, store.defaults.t_out,
                                            static_cast<int>(n), store.defaults.best_quality});
            scores[system.name].push_back({problem.name, problem.category, breakdown});
        }
    }
    return scores;
}

std::string render_ranking(const ResultsStore&,
                           const std::map<std::string, std::vector<ProblemScore>>& scores) {
    std::vector<TrackRow> rows = aggregate_track(scores);
    AlignedTable table;
    table.add({"rank", "system", "P", "NP", "BeyondNP", "Optimization", "total"});
    int rank = 0;
    for (const auto& row : rows) {
        ++rank;
        auto cat = [&row](Category c) {
            auto it = row.category_totals.find(c);
            return std::to_string(it == row.category_totals.end() ? 0 : it->second);
        };
        table.add({std::to_string(rank), row.system, cat(Category::P), cat(Category::NP),
                   cat(Category::BeyondNP), cat(Category::Optimization), std::to_string(row.grand_total)});
    }
    return table.render();
}

std::string render_breakdown(const ResultsStore& store,
                             const std::map<std::string, std::vector<ProblemScore>>& scores) {
    std::vector<TrackRow> ranking = aggregate_track(scores);
    AlignedTable table;
    std::vector<std::string> header{"system", "quota"};
    for (const auto& problem : store.problems) header.push_back(problem.name);
    table.add(header);

    for (const auto& row : ranking) {
        const auto& problem_scores = scores.at(row.system);
        std::vector<std::string> score_row{row.system, "score"};
        std::vector<std::string> instance_row{"", "instance"};
        std::vector<std::string> time_row{"", "time"};
        for (const auto& ps : problem_scores) {
            // an asterisk marks disqualification on that problem
            if (ps.breakdown.disqualified) {
                score_row.push_back("*");
                instance_row.push_back("0");
                time_row.push_back("0");
            } else {
                score_row.push_back(std::to_string(ps.breakdown.total));
                instance_row.push_back(std::to_string(ps.breakdown.s_solve + ps.breakdown.s_opt));
                time_row.push_back(std::to_string(ps.breakdown.s_time));
            }
        }
        table.add(score_row);
        table.add(instance_row);
        table.add(time_row);
    }
    return table.render();
}

std::string render_scores_csv(const ResultsStore&,
                              const std::map<std::string, std::vector<ProblemScore>>& scores) {
    std::ostringstream out;
    out << "system,problem,category,s_solve,s_time,s_opt,total,disqualified\n";
    for (const auto& [system, problem_scores] : scores) {
        for (const auto& ps : problem_scores) {
            out << system << ',' << ps.problem << ',' << to_string(ps.category) << ','
                << ps.breakdown.s_solve << ',' << ps.breakdown.s_time << ',' << ps.breakdown.s_opt << ','
                << ps.breakdown.total << ',' << (ps.breakdown.disqualified ? "true" : "false") << "\n";
        }
    }
    return out.str();
}

std::string render_cactus_csv(const ResultsStore& store) {
    std::ostringstream out;
    out << "system,instance_rank,time\n";
    for (const auto& system : store.systems) {
        std::vector<double> times;
        for (const auto& problem : store.problems) {
            for (const auto& run : store.runs.at({system.name, problem.name})) {
                if (counts_as_solved(run.outcome)) times.push_back(run.record.wall_time);
            }
        }
        std::sort(times.begin(), times.end());
        for (std::size_t i = 0; i < times.size(); ++i) {
            out << system.name << ',' << (i + 1) << ',' << format_seconds(times[i]) << "\n";
        }
    }
    return out.str();
}

std::vector<std::string> emit_report(const ResultsStore& store, const std::string& out_dir) {
    auto scores = score_store(store);
    fs::path dir(out_dir);
    fs::create_directories(dir);

    std::string report;
    report += "== Ranking ==\n";
    report += render_ranking(store, scores);
    report += "\n== Problem breakdown ==\n";
    report += render_breakdown(store, scores);
    report += "\n(*) disqualified on that problem; times are wall-clock seconds\n";

    std::vector<std::string> written;
    auto emit = [&](const char* name, const std::string& content) {
        fs::path p = dir / name;
        write_file(p.string(), content);
        written.push_back(p.string());
    };
    emit("report.txt", report);
    emit("scores.csv", render_scores_csv(store, scores));
    emit("cactus.csv", render_cactus_csv(store));
    return written;
}

}  // namespace aspc
