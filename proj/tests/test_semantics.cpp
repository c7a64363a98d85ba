#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "aspc/parser.hpp"
#include "aspc/semantics.hpp"
#include "support/random_programs.hpp"

using namespace aspc;

namespace {

Program prog(const std::string& text) {
    auto result = parse_program(text);
    REQUIRE(result.ok());
    return *result.program;
}

Interpretation interp(const std::string& literals) {
    auto parsed = parse_ground_literal_list(literals);
    REQUIRE(parsed.has_value());
    auto i = Interpretation::from_literals(*parsed);
    REQUIRE(i.has_value());
    return *i;
}

NafLiteral naf(const std::string& text) {
    bool negated = text.rfind("not ", 0) == 0;
    auto lit = parse_ground_literal(negated ? text.substr(4) : text);
    REQUIRE(lit.has_value());
    return NafLiteral{*lit, negated};
}

std::vector<Interpretation> answer_sets(const std::string& text) {
    return enumerate_answer_sets(prog(text)).answer_sets;
}

std::vector<Interpretation> sets(std::initializer_list<const char*> list) {
    std::vector<Interpretation> out;
    for (const char* s : list) out.push_back(interp(s));
    return out;
}

/// Deliberately naive minimality: every strict subset, no shortcuts.
bool minimal_by_subset_scan(const GroundProgram& g, const Interpretation& m) {
    std::vector<ClassicalLiteral> literals(m.begin(), m.end());
    REQUIRE(literals.size() <= 20);
    for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << literals.size()); ++mask) {
        Interpretation n;
        for (std::size_t v = 0; v < literals.size(); ++v) {
            if (mask & (std::uint64_t{1} << v)) n.insert(literals[v]);
        }
        if (is_model(g, n)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("naf literal truth") {
    CHECK(naf_literal_true(naf("p"), interp("p")));
    CHECK_FALSE(naf_literal_true(naf("not p"), interp("p")));
    CHECK(naf_literal_true(naf("not -q"), Interpretation{}));
    CHECK_FALSE(naf_literal_true(naf("-q"), interp("q")));
}

TEST_CASE("rule satisfaction") {
    GroundProgram g = ground_program(prog("a :- b."));
    CHECK_FALSE(rule_satisfied(g.rules[0], interp("b")));

    g = ground_program(prog("a | b :- c."));
    CHECK(rule_satisfied(g.rules[0], interp("c b")));

    g = ground_program(prog(":- a."));
    CHECK(rule_satisfied(g.rules[0], Interpretation{}));
}

TEST_CASE("is_model") {
    CHECK(is_model(ground_program(prog("a.")), interp("a")));
    CHECK_FALSE(is_model(ground_program(prog("a.")), Interpretation{}));
    CHECK(is_model(ground_program(prog("a | b. :- a.")), interp("b")));
}

TEST_CASE("is_minimal_model") {
    GroundProgram g = ground_program(prog("a | b."));
    CHECK_FALSE(is_minimal_model(g, interp("a b")));
    CHECK(is_minimal_model(g, interp("a")));
    CHECK(is_minimal_model(ground_program(prog("a.")), interp("a")));
}

TEST_CASE("reduct follows the two deletion steps") {
    GroundProgram g = ground_program(prog("a :- not b. b :- not a."));
    GroundProgram r = reduct(g, interp("a"));
    REQUIRE(r.rules.size() == 1);
    CHECK(r.rules[0].to_string() == "a.");

    // NAF-free programs are untouched
    GroundProgram positive = ground_program(prog("a :- b. b."));
    CHECK(reduct(positive, interp("a")).rules == positive.rules);
    CHECK(reduct(positive, Interpretation{}).rules == positive.rules);

    GroundProgram self = ground_program(prog("a :- not a."));
    GroundProgram rs = reduct(self, Interpretation{});
    REQUIRE(rs.rules.size() == 1);
    CHECK(rs.rules[0].to_string() == "a.");
}

TEST_CASE("is_answer_set") {
    CHECK(is_answer_set(prog("a :- not b. b :- not a."), interp("a")));
    CHECK_FALSE(is_answer_set(prog("a :- not a."), interp("a")));
    CHECK_FALSE(is_answer_set(prog("a | b. a :- b."), interp("b")));
    CHECK(is_answer_set(prog("a | b. a :- b."), interp("a")));

    // literals outside the Herbrand base are never part of an answer set
    CHECK_FALSE(is_answer_set(prog("a."), interp("a z")));
}

TEST_CASE("textbook answer sets") {
    CHECK(answer_sets("a | b.") == sets({"a", "b"}));
    CHECK(answer_sets("a :- not b. b :- not a.") == sets({"a", "b"}));
    CHECK(answer_sets("a :- not a.").empty());
    CHECK(answer_sets("a | b. :- a.") == sets({"b"}));
    CHECK(answer_sets("p. -p.").empty());
    CHECK(enumerate_answer_sets(prog("p. -p.")).status == SolveStatus::Inconsistent);
}

TEST_CASE("negative literals appear explicitly in answer sets") {
    CHECK(answer_sets("-p. q :- -p.") == sets({"-p q"}));
}

TEST_CASE("enumeration limit truncates after canonical ordering") {
    AnswerSetResult r = enumerate_answer_sets(prog("a | b."), 1);
    CHECK(r.truncated);
    CHECK(r.status == SolveStatus::ConsistentWithWitness);
    REQUIRE(r.answer_sets.size() == 1);
    CHECK(r.answer_sets[0] == interp("a"));
}

TEST_CASE("brute force oracle on the spec fixtures") {
    CHECK(brute_force_answer_sets(ground_program(prog("a."))) == sets({"a"}));
    CHECK(brute_force_answer_sets(ground_program(prog("a :- not b. b :- not a."))) == sets({"a", "b"}));
    CHECK(brute_force_answer_sets(ground_program(prog("a :- not a."))).empty());
}

TEST_CASE("oracle cap") {
    Program p = prog("r(a,a). r(b,b). r(c,c). p(a).");  // 12 atoms, 24 literals
    CHECK_THROWS_AS(brute_force_answer_sets(ground_program(p), 20), OracleCapError);
    CHECK_NOTHROW(brute_force_answer_sets(ground_program(p), 24));
}

TEST_CASE("cautious entailment") {
    Program p = prog("a | b. c :- a. c :- b.");
    CHECK(cautious_entails(p, Query{naf("c")}));
    CHECK_FALSE(cautious_entails(p, Query{naf("a")}));

    // vacuously true under inconsistency
    CHECK(cautious_entails(prog("a :- not a."), Query{naf("a")}));
    CHECK(cautious_entails(prog("a :- not a."), Query{naf("not a")}));

    // NAF-negated queries hold when the literal is absent from every answer set
    CHECK(cautious_entails(p, Query{naf("not d")}));
    CHECK_FALSE(cautious_entails(p, Query{naf("not a")}));
}

TEST_CASE("horn programs have exactly their least model") {
    Program p = prog("p(a). p(b). q(X) :- p(X). s :- q(a), q(b).");
    auto result = enumerate_answer_sets(p);
    REQUIRE(result.answer_sets.size() == 1);
    CHECK(result.answer_sets[0] == interp("p(a) p(b) q(a) q(b) s"));
}

TEST_CASE("oracle equivalence on random programs") {
    std::mt19937_64 rng(2024);
    aspc_test::FeatureCounts features;
    for (int trial = 0; trial < 150; ++trial) {
        Program p = aspc_test::random_program(rng);
        features.observe(p);
        GroundProgram g = ground_program(p);
        CAPTURE(print_program(p));
        auto fast = enumerate_answer_sets_ground(g, kNoLimit).answer_sets;
        auto slow = brute_force_answer_sets(g, 24);
        CHECK(fast == slow);
    }
    CHECK(features.all_sampled());
}

TEST_CASE("semantic properties on the oracle family") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        Program p = aspc_test::random_program(rng);
        GroundProgram g = ground_program(p);
        CAPTURE(print_program(p));
        auto result = enumerate_answer_sets_ground(g, kNoLimit);
        for (const auto& a : result.answer_sets) {
            // stability self-check and model property
            CHECK(is_answer_set_ground(g, a));
            CHECK(is_model(g, a));
            // the two minimality routes agree on the reduct
            GroundProgram r = reduct(g, a);
            CHECK(is_minimal_model(r, a));
            CHECK(minimal_by_subset_scan(r, a));
        }
        // pairwise incomparability
        for (std::size_t i = 0; i < result.answer_sets.size(); ++i) {
            for (std::size_t j = 0; j < result.answer_sets.size(); ++j) {
                if (i == j) continue;
                CHECK_FALSE(result.answer_sets[i].is_subset_of(result.answer_sets[j]));
            }
        }
    }
}

TEST_CASE("NAF-free programs: answer sets are the minimal models") {
    std::mt19937_64 rng(99);
    int checked = 0;
    for (int trial = 0; trial < 300 && checked < 25; ++trial) {
        Program p = aspc_test::random_program(rng);
        bool has_naf = false;
        for (const auto& rule : p.rules) {
            for (const auto& l : rule.body) has_naf = has_naf || l.naf_negated;
        }
        if (has_naf) continue;
        GroundProgram g = ground_program(p);
        std::vector<ClassicalLiteral> literals(g.base.begin(), g.base.end());
        if (literals.size() > 12) continue;  // keep the 2^|base| model scan fast
        ++checked;
        CAPTURE(print_program(p));
        std::vector<Interpretation> models;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << literals.size()); ++mask) {
            Interpretation i;
            bool consistent = true;
            for (std::size_t v = 0; v < literals.size() && consistent; ++v) {
                if (mask & (std::uint64_t{1} << v)) consistent = i.insert(literals[v]);
            }
            if (consistent && is_model(g, i)) models.push_back(std::move(i));
        }
        std::vector<Interpretation> minimal;
        for (const auto& m : models) {
            bool is_min = true;
            for (const auto& other : models) {
                if (other != m && other.is_subset_of(m)) {
                    is_min = false;
                    break;
                }
            }
            if (is_min) minimal.push_back(m);
        }
        std::sort(minimal.begin(), minimal.end(), [](const Interpretation& a, const Interpretation& b) {
            return a.to_string() < b.to_string();
        });

        CHECK(enumerate_answer_sets_ground(g, kNoLimit).answer_sets == minimal);
    }
    CHECK(checked >= 15);
}
