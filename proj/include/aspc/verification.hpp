#ifndef ASPC_VERIFICATION_HPP
#define ASPC_VERIFICATION_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "aspc/run_types.hpp"
#include "aspc/semantics.hpp"

// Witness checking. The built-in stability check validates a witness as an
// answer set of the (fixed) encoding plus instance; external per-benchmark
// checkers speak a two-line protocol:
//
//     checker <instance-file> <witness-file>
//
// stdout line 1 is `OK` or `FAIL`, an optional line 2 is `COST <n>`, and a
// completed check exits 0 regardless of verdict.

namespace aspc {

struct CheckerVerdict {
    bool valid = false;
    std::optional<long long> cost;
    std::string raw_output;
};

/// Checker produced no usable verdict; an infrastructure failure, never a
/// participant disqualification.
class CheckerError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// True iff the witness is an answer set of the program.
bool stability_check(const Program& p, const Interpretation& witness,
                     const GroundingOptions& options = {});

/// Invokes `checker_command <instance> <witness>` and parses the protocol.
/// Throws CheckerError when no verdict can be obtained.
CheckerVerdict run_external_checker(const std::string& checker_command,
                                    const std::string& instance_path,
                                    const std::string& witness_path);

/// Parses protocol text into a verdict (exposed for testing); nullopt when
/// the text does not follow the protocol.
std::optional<CheckerVerdict> parse_checker_output(const std::string& text);

/// Pure outcome classification, replayable from persisted runs.
/// `peer_found_witness` reports whether any other system produced a
/// checker-validated witness for the same instance (the second
/// incorrect-answer scenario); pass nullopt while peers are pending.
OutcomeKind classify_outcome(const RunRecord& run, const SolverOutput& output,
                             const std::optional<CheckerVerdict>& verdict,
                             std::optional<bool> peer_found_witness);

}  // namespace aspc

#endif
