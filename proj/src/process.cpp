#include "aspc/process.hpp"

#include <fcntl.h>
#include <signal.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cctype>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <dirent.h>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace aspc {

namespace {

constexpr auto kPollPeriod = std::chrono::milliseconds(100);

/// Summed RSS of every process in the given process group, from /proc.
std::uint64_t process_group_rss(pid_t pgid) {
    static const long page_size = sysconf(_SC_PAGESIZE);
    std::uint64_t total = 0;
    DIR* dir = opendir("/proc");
    if (!dir) return 0;
    while (dirent* ent = readdir(dir)) {
        if (!std::isdigit(static_cast<unsigned char>(ent->d_name[0]))) continue;
        std::string path = std::string("/proc/") + ent->d_name + "/stat";
        std::ifstream stat(path);
        if (!stat) continue;
        std::string line;
        std::getline(stat, line);
        // comm may contain spaces; fields resume after the closing paren
        std::size_t close = line.rfind(')');
        if (close == std::string::npos) continue;
        std::istringstream rest(line.substr(close + 1));
        std::string field;
        // after comm: state(1) ppid(2) pgrp(3) ... vsize(21) rss(22)
        long long pgrp = -1, rss = 0;
        for (int idx = 1; idx <= 22 && (rest >> field); ++idx) {
            if (idx == 3) pgrp = std::atoll(field.c_str());
            if (idx == 22) rss = std::atoll(field.c_str());
        }
        if (pgrp == pgid) total += static_cast<std::uint64_t>(rss) * static_cast<std::uint64_t>(page_size);
    }
    closedir(dir);
    return total;
}

}  // namespace

ProcessResult run_process(const std::string& command, const std::string& stdout_path,
                          const ProcessLimits& limits) {
    ProcessResult result;

    int out_fd = ::open(stdout_path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
    if (out_fd < 0) {
        result.spawn_failed = true;
        return result;
    }

    auto start = std::chrono::steady_clock::now();
    pid_t child = ::fork();
    if (child < 0) {
        ::close(out_fd);
        result.spawn_failed = true;
        return result;
    }
    if (child == 0) {
        ::setpgid(0, 0);
        ::dup2(out_fd, STDOUT_FILENO);
        ::close(out_fd);
        ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
        _exit(127);
    }
    ::close(out_fd);
    ::setpgid(child, child);  // either parent or child wins; both set the same group

    int status = 0;
    auto last_sample = start - kPollPeriod;  // sample memory on the first pass
    while (true) {
        pid_t waited = ::waitpid(child, &status, WNOHANG);
        if (waited == child) break;
        auto now = std::chrono::steady_clock::now();
        double elapsed = std::chrono::duration<double>(now - start).count();
        if (result.violation == LimitViolation::None && limits.wall_seconds &&
            elapsed > *limits.wall_seconds) {
            result.violation = LimitViolation::Time;
            ::kill(-child, SIGKILL);
        }
        if (now - last_sample >= kPollPeriod) {
            last_sample = now;
            std::uint64_t rss = process_group_rss(child);
            if (rss > result.peak_rss_bytes) result.peak_rss_bytes = rss;
            if (result.violation == LimitViolation::None && limits.memory_bytes &&
                rss > *limits.memory_bytes) {
                result.violation = LimitViolation::Memory;
                ::kill(-child, SIGKILL);
            }
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(2));
    }
    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    // reap any stragglers in the group
    ::kill(-child, SIGKILL);
    while (::waitpid(-child, nullptr, WNOHANG) > 0) {
    }

    if (WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    } else if (WIFSIGNALED(status)) {
        result.signaled = true;
        result.term_signal = WTERMSIG(status);
    }
    return result;
}

}  // namespace aspc
