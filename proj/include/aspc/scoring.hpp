#ifndef ASPC_SCORING_HPP
#define ASPC_SCORING_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aspc/outcome.hpp"

// Competition scoring. Each problem is worth up to 100 points, split by the
// percentage factor alpha between an instance quota (s_solve, or s_opt for
// optimization problems) and a logarithmically weighted time quota.
// A single wrong answer disqualifies the system from the whole problem.

namespace aspc {

struct ScoringConfig {
    double alpha = 50.0;       // percentage factor balancing the two quotas
    double t_out = 600.0;      // seconds
    int instances_per_problem = 10;
    double best_quality = 100.0;  // M: quality of the best answer, by convention
};

struct InstanceResult {
    OutcomeKind outcome = OutcomeKind::Crash;
    double time_seconds = 0.0;
    std::optional<long long> cost;  // checker-reported witness cost
    bool optimum_claimed = false;
};

struct ScoreBreakdown {
    long long s_solve = 0;
    long long s_time = 0;
    long long s_opt = 0;
    long long total = 0;
    bool disqualified = false;
};

enum class ProblemType { Search, Query, Optimization };
enum class Category { P, NP, BeyondNP, Optimization };

const char* to_string(ProblemType t);
const char* to_string(Category c);
std::optional<ProblemType> problem_type_from_string(const std::string& s);
std::optional<Category> category_from_string(const std::string& s);

bool counts_as_solved(OutcomeKind outcome);

// Raw (pre-rounding) quota values; the integer versions round to the
// nearest integer, ties away from zero.
double s_solve_raw(const std::vector<InstanceResult>& results, const ScoringConfig& cfg);
long long s_solve(const std::vector<InstanceResult>& results, const ScoringConfig& cfg);

/// Unsolved instances contribute t_i = t_out (zero time credit); solved
/// times are clamped into [0, t_out].
double s_time_raw(const std::vector<InstanceResult>& results, const ScoringConfig& cfg);
long long s_time(const std::vector<InstanceResult>& results, const ScoringConfig& cfg);

/// Q = M * sys_cost / best_cost for minimized costs (Q >= M). A best cost
/// of zero yields Q = M when matched and +infinity otherwise.
double normalize_quality(long long sys_cost, long long best_cost, const ScoringConfig& cfg);

/// e^(M - Q): the exponentially weighted quality factor in [0, 1].
double quality_reward_fraction(double quality, const ScoringConfig& cfg);

double s_opt_raw(const std::vector<InstanceResult>& results,
                 const std::vector<std::optional<long long>>& best_costs, const ScoringConfig& cfg);
long long s_opt(const std::vector<InstanceResult>& results,
                const std::vector<std::optional<long long>>& best_costs, const ScoringConfig& cfg);

ScoreBreakdown score_problem(const std::vector<InstanceResult>& results,
                             const std::vector<std::optional<long long>>& best_costs,
                             ProblemType type, const ScoringConfig& cfg);

struct ProblemScore {
    std::string problem;
    Category category = Category::P;
    ScoreBreakdown breakdown;
};

struct TrackRow {
    std::string system;
    std::map<Category, long long> category_totals;
    long long grand_total = 0;
    long long solve_sum = 0;  // tie-break key: sum of s_solve
};

/// Ranks systems by grand total (descending), ties broken by higher
/// s_solve sum, then by name.
std::vector<TrackRow> aggregate_track(const std::map<std::string, std::vector<ProblemScore>>& per_system);

}  // namespace aspc

#endif
