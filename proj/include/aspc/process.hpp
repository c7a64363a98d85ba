#ifndef ASPC_PROCESS_HPP
#define ASPC_PROCESS_HPP

#include <cstdint>
#include <optional>
#include <string>

// Spawns a shell command in its own process group, captures stdout to a
// file, and enforces wall-clock and memory limits. Memory is the summed
// RSS of the process group, sampled every 100 ms; spikes shorter than the
// sampling period go undetected.

namespace aspc {

enum class LimitViolation { None, Time, Memory };

struct ProcessLimits {
    std::optional<double> wall_seconds;
    std::optional<std::uint64_t> memory_bytes;
};

struct ProcessResult {
    bool spawn_failed = false;
    int exit_code = 0;
    bool signaled = false;
    int term_signal = 0;
    double wall_seconds = 0.0;
    std::uint64_t peak_rss_bytes = 0;
    LimitViolation violation = LimitViolation::None;

    bool exited_normally() const { return !spawn_failed && !signaled && exit_code == 0; }
};

/// Runs `command` via the shell, writing its stdout to stdout_path
/// (stderr is inherited). Kills the whole process group on a limit breach.
ProcessResult run_process(const std::string& command, const std::string& stdout_path,
                          const ProcessLimits& limits = {});

}  // namespace aspc

#endif
