#ifndef ASPC_RUN_TYPES_HPP
#define ASPC_RUN_TYPES_HPP

#include <optional>
#include <string>

#include "aspc/ast.hpp"
#include "aspc/process.hpp"
#include "aspc/scoring.hpp"

namespace aspc {

/// One solver-process execution.
struct RunRecord {
    std::string system;
    std::string problem;
    int instance_index = 0;  // 0-based
    double wall_time = 0.0;  // seconds, spawn to exit
    std::uint64_t peak_memory = 0;
    bool spawn_failed = false;
    int exit_code = 0;
    bool signaled = false;
    int term_signal = 0;
    std::string stdout_path;
    LimitViolation limit_violation = LimitViolation::None;
};

enum class SolverOutputKind {
    Witness,
    UnsatClaim,
    QueryAnswer,
    Malformed,
};

/// The last complete answer block of a solver's stdout. Solvers may print
/// improved answers at any time; the final block wins.
struct SolverOutput {
    SolverOutputKind kind = SolverOutputKind::Malformed;
    Interpretation witness;
    std::optional<long long> cost;
    bool optimum_claimed = false;
    bool query_answer = false;  // for kind == QueryAnswer
};

/// Parses the solver wire format: `ANSWER` followed by one line of
/// space-separated ground literals, or `INCONSISTENT`; optimization runs
/// may add `COST <n>` and `OPTIMUM` lines. Query problems answer with a
/// single `true` or `false` line.
SolverOutput parse_solver_output(const std::string& text, ProblemType type);

}  // namespace aspc

#endif
