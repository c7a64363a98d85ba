#include "aspc/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace aspc {

const char* to_string(OutcomeKind k) {
    switch (k) {
        case OutcomeKind::CorrectWitness: return "correct-witness";
        case OutcomeKind::CorrectUnsat: return "correct-unsat";
        case OutcomeKind::WrongWitness: return "wrong-witness";
        case OutcomeKind::WrongUnsat: return "wrong-unsat";
        case OutcomeKind::Timeout: return "timeout";
        case OutcomeKind::MemOut: return "memout";
        case OutcomeKind::Crash: return "crash";
        case OutcomeKind::MalformedOutput: return "malformed-output";
    }
    return "?";
}

std::optional<OutcomeKind> outcome_from_string(const std::string& s) {
    for (OutcomeKind k : {OutcomeKind::CorrectWitness, OutcomeKind::CorrectUnsat, OutcomeKind::WrongWitness,
                          OutcomeKind::WrongUnsat, OutcomeKind::Timeout, OutcomeKind::MemOut, OutcomeKind::Crash,
                          OutcomeKind::MalformedOutput}) {
        if (s == to_string(k)) return k;
    }
    return std::nullopt;
}

const char* to_string(ProblemType t) {
    switch (t) {
        case ProblemType::Search: return "search";
        case ProblemType::Query: return "query";
        case ProblemType::Optimization: return "optimization";
    }
    return "?";
}

const char* to_string(Category c) {
    switch (c) {
        case Category::P: return "P";
        case Category::NP: return "NP";
        case Category::BeyondNP: return "BeyondNP";
        case Category::Optimization: return "Optimization";
    }
    return "?";
}

std::optional<ProblemType> problem_type_from_string(const std::string& s) {
    for (ProblemType t : {ProblemType::Search, ProblemType::Query, ProblemType::Optimization}) {
        if (s == to_string(t)) return t;
    }
    return std::nullopt;
}

std::optional<Category> category_from_string(const std::string& s) {
    for (Category c : {Category::P, Category::NP, Category::BeyondNP, Category::Optimization}) {
        if (s == to_string(c)) return c;
    }
    return std::nullopt;
}

bool counts_as_solved(OutcomeKind outcome) {
    return outcome == OutcomeKind::CorrectWitness || outcome == OutcomeKind::CorrectUnsat;
}

namespace {

long long round_nearest(double x) {
    return std::llround(x);  // ties away from zero
}

}  // namespace

double s_solve_raw(const std::vector<InstanceResult>& results, const ScoringConfig& cfg) {
    if (results.empty()) return 0.0;
    std::size_t solved = std::count_if(results.begin(), results.end(),
                                       [](const InstanceResult& r) { return counts_as_solved(r.outcome); });
    return cfg.alpha * static_cast<double>(solved) / static_cast<double>(results.size());
}

long long s_solve(const std::vector<InstanceResult>& results, const ScoringConfig& cfg) {
    return round_nearest(s_solve_raw(results, cfg));
}

double s_time_raw(const std::vector<InstanceResult>& results, const ScoringConfig& cfg) {
    if (results.empty()) return 0.0;
    const double n = static_cast<double>(results.size());
    const double denom = std::log(cfg.t_out + 1.0);
    double sum = 0.0;
    for (const auto& r : results) {
        double t = counts_as_solved(r.outcome) ? std::clamp(r.time_seconds, 0.0, cfg.t_out) : cfg.t_out;
        sum += 1.0 - std::log(t + 1.0) / denom;
    }
    return (100.0 - cfg.alpha) / n * sum;
}

long long s_time(const std::vector<InstanceResult>& results, const ScoringConfig& cfg) {
    return round_nearest(s_time_raw(results, cfg));
}

double normalize_quality(long long sys_cost, long long best_cost, const ScoringConfig& cfg) {
    if (best_cost == 0) {
        return sys_cost == 0 ? cfg.best_quality : std::numeric_limits<double>::infinity();
    }
    return cfg.best_quality * static_cast<double>(sys_cost) / static_cast<double>(best_cost);
}

double quality_reward_fraction(double quality, const ScoringConfig& cfg) {
    if (std::isinf(quality)) return 0.0;
    return std::exp(cfg.best_quality - quality);
}

double s_opt_raw(const std::vector<InstanceResult>& results,
                 const std::vector<std::optional<long long>>& best_costs, const ScoringConfig& cfg) {
    if (results.empty()) return 0.0;
    const double n = static_cast<double>(results.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const InstanceResult& r = results[i];
        if (r.outcome == OutcomeKind::CorrectUnsat) {
            sum += 1.0 / n;  // exclusive of the witness rewards
            continue;
        }
        if (r.outcome != OutcomeKind::CorrectWitness) continue;
        sum += 1.0 / (4.0 * n);  // correct witness
        std::optional<long long> best = i < best_costs.size() ? best_costs[i] : std::nullopt;
        if (r.cost && best) {
            if (r.optimum_claimed && *r.cost == *best) sum += 1.0 / (4.0 * n);  // recognized optimum
            double q = normalize_quality(*r.cost, *best, cfg);
            sum += quality_reward_fraction(q, cfg) / (2.0 * n);
        }
    }
    return cfg.alpha * sum;
}

long long s_opt(const std::vector<InstanceResult>& results,
                const std::vector<std::optional<long long>>& best_costs, const ScoringConfig& cfg) {
    return round_nearest(s_opt_raw(results, best_costs, cfg));
}

ScoreBreakdown score_problem(const std::vector<InstanceResult>& results,
                             const std::vector<std::optional<long long>>& best_costs,
                             ProblemType type, const ScoringConfig& cfg) {
    ScoreBreakdown b;
    for (const auto& r : results) {
        if (disqualifies(r.outcome)) {
            b.disqualified = true;
            return b;  // all quotas invalidated
        }
    }
    b.s_time = s_time(results, cfg);
    if (type == ProblemType::Optimization) {
        b.s_opt = s_opt(results, best_costs, cfg);
        b.total = b.s_opt + b.s_time;
    } else {
        b.s_solve = s_solve(results, cfg);
        b.total = b.s_solve + b.s_time;
    }
    return b;
}

std::vector<TrackRow> aggregate_track(const std::map<std::string, std::vector<ProblemScore>>& per_system) {
    std::vector<TrackRow> rows;
    rows.reserve(per_system.size());
    for (const auto& [system, scores] : per_system) {
        TrackRow row;
        row.system = system;
        for (const auto& s : scores) {
            row.category_totals[s.category] += s.breakdown.total;
            row.grand_total += s.breakdown.total;
            row.solve_sum += s.breakdown.s_solve;
        }
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const TrackRow& a, const TrackRow& b) {
        if (a.grand_total != b.grand_total) return a.grand_total > b.grand_total;
        if (a.solve_sum != b.solve_sum) return a.solve_sum > b.solve_sum;
        return a.system < b.system;
    });
    return rows;
}

}  // namespace aspc
