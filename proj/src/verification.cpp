#include "aspc/verification.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "aspc/parser.hpp"

namespace aspc {

namespace {

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'') {
            out += "'\\''";
        } else {
            out.push_back(c);
        }
    }
    out.push_back('\'');
    return out;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::optional<long long> parse_cost_line(const std::string& line) {
    if (line.rfind("COST ", 0) != 0) return std::nullopt;
    std::string_view digits = std::string_view(line).substr(5);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || value < 0) return std::nullopt;
    return value;
}

}  // namespace

bool stability_check(const Program& p, const Interpretation& witness, const GroundingOptions& options) {
    return is_answer_set(p, witness, options);
}

std::optional<CheckerVerdict> parse_checker_output(const std::string& text) {
    std::vector<std::string> lines = split_lines(text);
    std::size_t i = 0;
    while (i < lines.size() && lines[i].empty()) ++i;
    if (i >= lines.size()) return std::nullopt;

    CheckerVerdict verdict;
    verdict.raw_output = text;
    if (lines[i] == "OK") {
        verdict.valid = true;
    } else if (lines[i] == "FAIL") {
        verdict.valid = false;
    } else {
        return std::nullopt;
    }
    ++i;
    if (i < lines.size() && !lines[i].empty()) {
        auto cost = parse_cost_line(lines[i]);
        if (!cost) return std::nullopt;
        verdict.cost = cost;
    }
    return verdict;
}

CheckerVerdict run_external_checker(const std::string& checker_command,
                                    const std::string& instance_path,
                                    const std::string& witness_path) {
    std::string out_path = witness_path + ".checker_out";
    std::string command = checker_command + " " + shell_quote(instance_path) + " " + shell_quote(witness_path);
    ProcessResult proc = run_process(command, out_path);
    if (proc.spawn_failed) throw CheckerError("failed to spawn checker: " + checker_command);
    std::string output = read_file(out_path);
    std::remove(out_path.c_str());
    auto verdict = parse_checker_output(output);
    if (!verdict) {
        std::ostringstream msg;
        msg << "checker produced no verdict (exit " << proc.exit_code;
        if (proc.signaled) msg << ", signal " << proc.term_signal;
        msg << "): " << checker_command;
        throw CheckerError(msg.str());
    }
    return *verdict;
}

SolverOutput parse_solver_output(const std::string& text, ProblemType type) {
    SolverOutput out;
    std::vector<std::string> lines = split_lines(text);

    if (type == ProblemType::Query) {
        // a single true/false answer; last one wins
        bool seen = false;
        for (const auto& line : lines) {
            if (line == "true" || line == "false") {
                out.query_answer = (line == "true");
                seen = true;
            } else if (!line.empty()) {
                return SolverOutput{};  // malformed
            }
        }
        if (seen) out.kind = SolverOutputKind::QueryAnswer;
        return out;
    }

    SolverOutput last;  // last complete block wins
    bool have_answer = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        if (line == "INCONSISTENT") {
            last = SolverOutput{};
            last.kind = SolverOutputKind::UnsatClaim;
            have_answer = true;
        } else if (line == "ANSWER") {
            if (i + 1 >= lines.size()) break;  // incomplete block; keep previous
            auto literals = parse_ground_literal_list(lines[++i]);
            if (!literals) return SolverOutput{};  // garbage witness is malformed output
            Interpretation witness;
            for (const auto& lit : *literals) {
                if (!witness.insert(lit)) return SolverOutput{};  // inconsistent witness
            }
            last = SolverOutput{};
            last.kind = SolverOutputKind::Witness;
            last.witness = std::move(witness);
            have_answer = true;
        } else if (line.rfind("COST ", 0) == 0 && have_answer && last.kind == SolverOutputKind::Witness) {
            auto cost = parse_cost_line(line);
            if (!cost) return SolverOutput{};
            last.cost = cost;
        } else if (line == "OPTIMUM" && have_answer && last.kind == SolverOutputKind::Witness) {
            last.optimum_claimed = true;
        } else if (!line.empty()) {
            return SolverOutput{};  // unknown line
        }
    }
    if (!have_answer) return SolverOutput{};
    return last;
}

OutcomeKind classify_outcome(const RunRecord& run, const SolverOutput& output,
                             const std::optional<CheckerVerdict>& verdict,
                             std::optional<bool> peer_found_witness) {
    if (run.limit_violation == LimitViolation::Time) return OutcomeKind::Timeout;
    if (run.limit_violation == LimitViolation::Memory) return OutcomeKind::MemOut;
    if (run.spawn_failed) return OutcomeKind::Crash;

    switch (output.kind) {
        case SolverOutputKind::Witness:
        case SolverOutputKind::QueryAnswer:
            if (!verdict) return OutcomeKind::Crash;  // checker infrastructure failure
            return verdict->valid ? OutcomeKind::CorrectWitness : OutcomeKind::WrongWitness;
        case SolverOutputKind::UnsatClaim:
            if (peer_found_witness.value_or(false)) return OutcomeKind::WrongUnsat;
            return OutcomeKind::CorrectUnsat;
        case SolverOutputKind::Malformed:
            break;
    }
    // no parseable answer: distinguish a crash from plain garbage
    if (run.signaled || run.exit_code != 0) return OutcomeKind::Crash;
    return OutcomeKind::MalformedOutput;
}

}  // namespace aspc
