#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "aspc/scoring.hpp"

using namespace aspc;

namespace {

ScoringConfig cfg(double alpha, double t_out, int n) {
    ScoringConfig c;
    c.alpha = alpha;
    c.t_out = t_out;
    c.instances_per_problem = n;
    return c;
}

InstanceResult solved(double t) { return {OutcomeKind::CorrectWitness, t, std::nullopt, false}; }
InstanceResult unsolved() { return {OutcomeKind::Timeout, 0.0, std::nullopt, false}; }

std::vector<InstanceResult> solved_n(int n_solved, int n_total, double t = 0.0) {
    std::vector<InstanceResult> out;
    for (int i = 0; i < n_total; ++i) out.push_back(i < n_solved ? solved(t) : unsolved());
    return out;
}

}  // namespace

TEST_CASE("s_solve is the solved fraction of the alpha quota") {
    ScoringConfig c = cfg(50, 600, 10);
    CHECK(s_solve(solved_n(10, 10), c) == 50);
    CHECK(s_solve(solved_n(0, 10), c) == 0);
    CHECK(s_solve(solved_n(7, 10), c) == 35);
    CHECK(s_solve(solved_n(1, 3), cfg(50, 600, 3)) == 17);  // 16.67 rounds up
}

TEST_CASE("correct unsat counts as solved") {
    ScoringConfig c = cfg(50, 600, 2);
    std::vector<InstanceResult> results{{OutcomeKind::CorrectUnsat, 1.0, std::nullopt, false},
                                        {OutcomeKind::WrongWitness, 1.0, std::nullopt, false}};
    CHECK(s_solve(results, c) == 25);  // wrong answers do not count (disqualification is upstream)
}

TEST_CASE("time quota endpoints are exact") {
    ScoringConfig c = cfg(0, 600, 1);
    CHECK(s_time_raw({solved(0.0)}, c) == 100.0);
    CHECK(s_time_raw({solved(600.0)}, c) == 0.0);
    CHECK(s_time({solved(0.0)}, c) == 100);
    CHECK(s_time({solved(600.0)}, c) == 0);
}

TEST_CASE("half the time quota sits near 23.5 seconds of 600") {
    double v = s_time_raw({solved(23.5)}, cfg(0, 600, 1));
    CHECK(v > 49.0);
    CHECK(v < 51.0);
}

TEST_CASE("unsolved instances contribute t_out to the time quota") {
    ScoringConfig c = cfg(0, 600, 2);
    double with_unsolved = s_time_raw({solved(0.0), unsolved()}, c);
    CHECK(with_unsolved == doctest::Approx(50.0));
    // an unsolved instance's recorded time is irrelevant
    std::vector<InstanceResult> r{solved(0.0), {OutcomeKind::Crash, 0.0, std::nullopt, false}};
    CHECK(s_time_raw(r, c) == doctest::Approx(50.0));
}

TEST_CASE("log base does not matter") {
    ScoringConfig c = cfg(50, 600, 3);
    std::vector<InstanceResult> results{solved(1.5), solved(42.0), unsolved()};
    double via_log10 = 0.0;
    for (const auto& r : results) {
        double t = counts_as_solved(r.outcome) ? r.time_seconds : c.t_out;
        via_log10 += 1.0 - std::log10(t + 1.0) / std::log10(c.t_out + 1.0);
    }
    via_log10 *= (100.0 - c.alpha) / 3.0;
    CHECK(s_time_raw(results, c) == doctest::Approx(via_log10).epsilon(1e-12));
}

TEST_CASE("quality normalization") {
    ScoringConfig c = cfg(100, 600, 1);
    CHECK(normalize_quality(40, 40, c) == 100.0);
    CHECK(normalize_quality(101, 100, c) == doctest::Approx(101.0));
    CHECK(std::isinf(normalize_quality(5, 0, c)));
    CHECK(quality_reward_fraction(normalize_quality(5, 0, c), c) == 0.0);
    CHECK(normalize_quality(0, 0, c) == 100.0);
}

TEST_CASE("quality curve anchors") {
    ScoringConfig c = cfg(100, 600, 1);
    double at_1_percent = 100.0 * quality_reward_fraction(normalize_quality(101, 100, c), c);
    CHECK(at_1_percent == doctest::Approx(36.79).epsilon(0.01));
    double at_4_percent = 100.0 * quality_reward_fraction(normalize_quality(104, 100, c), c);
    CHECK(at_4_percent < 2.0);
}

TEST_CASE("s_opt rewards") {
    ScoringConfig c = cfg(100, 600, 1);

    // a correctly recognized unsatisfiable instance earns the full 1/N
    std::vector<InstanceResult> unsat{{OutcomeKind::CorrectUnsat, 1.0, std::nullopt, false}};
    CHECK(s_opt(unsat, {std::nullopt}, c) == 100);

    // witness at the best cost without an optimum claim: 1/4 + 1/2 e^0
    std::vector<InstanceResult> at_best{{OutcomeKind::CorrectWitness, 1.0, 40, false}};
    CHECK(s_opt(at_best, {{40}}, c) == 75);

    // claiming the optimum at the best cost adds the remaining 1/4
    std::vector<InstanceResult> claimed{{OutcomeKind::CorrectWitness, 1.0, 40, true}};
    CHECK(s_opt(claimed, {{40}}, c) == 100);

    // an optimum claim at a worse cost earns no recognition reward
    std::vector<InstanceResult> wrong_claim{{OutcomeKind::CorrectWitness, 1.0, 44, true}};
    double expected = 100.0 * (0.25 + 0.5 * std::exp(100.0 - 110.0));
    CHECK(s_opt_raw(wrong_claim, {{40}}, c) == doctest::Approx(expected));

    // no cost information: only the witness reward
    std::vector<InstanceResult> costless{{OutcomeKind::CorrectWitness, 1.0, std::nullopt, false}};
    CHECK(s_opt(costless, {{40}}, c) == 25);
}

TEST_CASE("score_problem composes quotas and disqualification") {
    ScoringConfig c = cfg(50, 600, 10);

    ScoreBreakdown perfect = score_problem(solved_n(10, 10), {}, ProblemType::Search, c);
    CHECK(perfect.total == 100);
    CHECK(perfect.s_solve == 50);
    CHECK(perfect.s_time == 50);
    CHECK_FALSE(perfect.disqualified);

    auto results = solved_n(9, 10);
    results[9] = {OutcomeKind::WrongWitness, 1.0, std::nullopt, false};
    ScoreBreakdown dq = score_problem(results, {}, ProblemType::Search, c);
    CHECK(dq.disqualified);
    CHECK(dq.total == 0);
    CHECK(dq.s_solve == 0);
    CHECK(dq.s_time == 0);

    ScoreBreakdown slow = score_problem(solved_n(10, 10, 599.999), {}, ProblemType::Search, c);
    CHECK(slow.total == 50);
    CHECK(slow.s_solve == 50);
    CHECK(slow.s_time == 0);

    ScoreBreakdown wrong_unsat = score_problem(
        {{OutcomeKind::WrongUnsat, 1.0, std::nullopt, false}}, {}, ProblemType::Search, cfg(50, 600, 1));
    CHECK(wrong_unsat.disqualified);

    // timeouts and crashes never disqualify
    ScoreBreakdown failures = score_problem(
        {{OutcomeKind::Timeout, 600.0, std::nullopt, false},
         {OutcomeKind::MemOut, 1.0, std::nullopt, false},
         {OutcomeKind::Crash, 1.0, std::nullopt, false},
         {OutcomeKind::MalformedOutput, 1.0, std::nullopt, false}},
        {}, ProblemType::Search, cfg(50, 600, 4));
    CHECK_FALSE(failures.disqualified);
    CHECK(failures.total == 0);
}

TEST_CASE("optimization problems use s_opt for the instance quota") {
    ScoringConfig c = cfg(50, 600, 1);
    std::vector<InstanceResult> results{{OutcomeKind::CorrectWitness, 0.0, 40, true}};
    ScoreBreakdown b = score_problem(results, {{40}}, ProblemType::Optimization, c);
    CHECK(b.s_opt == 50);
    CHECK(b.s_time == 50);
    CHECK(b.total == 100);
    CHECK(b.s_solve == 0);
}

TEST_CASE("aggregate_track ranks by grand total with tie-breaks") {
    std::map<std::string, std::vector<ProblemScore>> scores;
    scores["alpha"] = {{"p1", Category::P, {50, 50, 0, 100, false}},
                       {"p2", Category::NP, {0, 0, 0, 0, true}}};
    scores["beta"] = {{"p1", Category::P, {20, 30, 0, 50, false}},
                      {"p2", Category::NP, {10, 15, 0, 25, false}}};
    scores["gamma"] = {{"p1", Category::P, {45, 5, 0, 50, false}},
                       {"p2", Category::NP, {20, 5, 0, 25, false}}};

    auto rows = aggregate_track(scores);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].system == "alpha");
    CHECK(rows[0].grand_total == 100);
    CHECK(rows[0].category_totals[Category::P] == 100);
    CHECK(rows[0].category_totals[Category::NP] == 0);
    // beta and gamma tie at 75; gamma has the higher s_solve sum
    CHECK(rows[1].system == "gamma");
    CHECK(rows[2].system == "beta");

    for (const auto& row : rows) {
        long long sum = 0;
        for (const auto& [cat, total] : row.category_totals) sum += total;
        CHECK(sum == row.grand_total);
    }
}

TEST_CASE("aggregate_track breaks full ties by name") {
    std::map<std::string, std::vector<ProblemScore>> scores;
    scores["zeta"] = {{"p1", Category::P, {10, 10, 0, 20, false}}};
    scores["eta"] = {{"p1", Category::P, {10, 10, 0, 20, false}}};
    auto rows = aggregate_track(scores);
    CHECK(rows[0].system == "eta");
    CHECK(rows[1].system == "zeta");
}

TEST_CASE("randomized scoring properties") {
    std::mt19937_64 rng(5150);
    auto pick = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

    for (int trial = 0; trial < 1000; ++trial) {
        double alpha = static_cast<double>(pick(101));
        double t_out = 1.0 + static_cast<double>(pick(600));
        int n = 1 + static_cast<int>(pick(12));
        ScoringConfig c = cfg(alpha, t_out, n);

        std::vector<InstanceResult> results;
        std::vector<std::optional<long long>> best_costs;
        for (int i = 0; i < n; ++i) {
            InstanceResult r;
            OutcomeKind kinds[] = {OutcomeKind::CorrectWitness, OutcomeKind::CorrectUnsat,
                                   OutcomeKind::Timeout,        OutcomeKind::MemOut,
                                   OutcomeKind::Crash,          OutcomeKind::MalformedOutput};
            r.outcome = kinds[pick(6)];
            r.time_seconds = static_cast<double>(pick(1000)) / 999.0 * t_out;
            long long best = static_cast<long long>(pick(50));
            r.cost = best + static_cast<long long>(pick(20));
            r.optimum_claimed = pick(2) == 0;
            best_costs.push_back(best);
            results.push_back(r);
        }

        // bounds before and after rounding
        CHECK(s_solve_raw(results, c) >= 0.0);
        CHECK(s_solve_raw(results, c) <= alpha + 1e-9);
        CHECK(s_time_raw(results, c) >= -1e-9);
        CHECK(s_time_raw(results, c) <= 100.0 - alpha + 1e-9);
        CHECK(s_opt_raw(results, best_costs, c) >= 0.0);
        CHECK(s_opt_raw(results, best_costs, c) <= alpha + 1e-9);
        for (ProblemType type : {ProblemType::Search, ProblemType::Query, ProblemType::Optimization}) {
            ScoreBreakdown b = score_problem(results, best_costs, type, c);
            CHECK(b.total >= 0);
            CHECK(b.total <= 100);
            // solved-score recovery: the instance quota is total minus time
            CHECK(b.total - b.s_time == (type == ProblemType::Optimization ? b.s_opt : b.s_solve));
            // determinism
            ScoreBreakdown again = score_problem(results, best_costs, type, c);
            CHECK(b.total == again.total);
            CHECK(b.s_solve == again.s_solve);
            CHECK(b.s_time == again.s_time);
            CHECK(b.s_opt == again.s_opt);
        }

        // monotonicity: raising one time never raises s_time
        std::size_t victim = pick(results.size());
        auto slower = results;
        slower[victim].time_seconds = std::min(t_out, slower[victim].time_seconds + t_out / 4.0);
        CHECK(s_time_raw(slower, c) <= s_time_raw(results, c) + 1e-9);

        // monotonicity: solving one more instance never lowers s_solve
        auto more_solved = results;
        more_solved[victim].outcome = OutcomeKind::CorrectWitness;
        CHECK(s_solve_raw(more_solved, c) >= s_solve_raw(results, c) - 1e-9);

        // monotonicity: moving a cost toward the best never lowers s_opt
        auto better = results;
        if (better[victim].cost && best_costs[victim] && *better[victim].cost > *best_costs[victim]) {
            better[victim].cost = *better[victim].cost - 1;
            CHECK(s_opt_raw(better, best_costs, c) >= s_opt_raw(results, best_costs, c) - 1e-9);
        }
    }
}
