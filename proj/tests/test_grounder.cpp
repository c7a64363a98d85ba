#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aspc/grounder.hpp"
#include "aspc/parser.hpp"

using namespace aspc;

namespace {

Program prog(const std::string& text) {
    auto result = parse_program(text);
    REQUIRE(result.ok());
    return *result.program;
}

}  // namespace

TEST_CASE("herbrand universe collects exactly the occurring constants") {
    HerbrandUniverse u = herbrand_universe(prog("p(1). q(a,\"b\")."));
    CHECK(u.constants == std::set<Term>{Term::integer(1), Term::symbol("a"), Term::string("b")});

    CHECK(herbrand_universe(prog("p :- q.")).constants.empty());
    CHECK(herbrand_universe(prog("p(X) :- q(X). q(c).")).constants == std::set<Term>{Term::symbol("c")});
}

TEST_CASE("herbrand base holds both polarities of every constructible atom") {
    auto base = herbrand_base(prog("p(1)."));
    CHECK(base.size() == 2);
    CHECK(base.count(*parse_ground_literal("p(1)")) == 1);
    CHECK(base.count(*parse_ground_literal("-p(1)")) == 1);

    // 2 polarities x (2 p-atoms + 4 r-atoms) over U = {a,b}
    auto bigger = herbrand_base(prog("p(a). r(X,Y) :- p(X), p(Y). p(b)."));
    CHECK(bigger.size() == 12);

    // no constants: an arity-1 predicate yields no ground atoms
    auto none = herbrand_base(prog("p(X) :- q(X), p(X)."));
    CHECK(none.empty());

    // arity-0 predicates need no constants
    auto zero = herbrand_base(prog("p :- q."));
    CHECK(zero.size() == 4);
}

TEST_CASE("ground_rule substitutes every combination") {
    Program p = prog("p(X) :- q(X). q(1). q(2).");
    HerbrandUniverse u = herbrand_universe(p);
    auto ground = ground_rule(p.rules[0], u);
    CHECK(ground.size() == 2);
    CHECK(ground.count(prog("p(1) :- q(1).").rules[0]) == 1);
    CHECK(ground.count(prog("p(2) :- q(2).").rules[0]) == 1);

    // ground rules pass through
    Rule fact = prog("a :- b.").rules[0];
    CHECK(ground_rule(fact, u) == std::set<Rule>{fact});

    // no substitutions over an empty universe
    HerbrandUniverse empty;
    CHECK(ground_rule(p.rules[0], empty).empty());
}

TEST_CASE("|ground_rule| matches |U|^variables") {
    Program p = prog("r(X,Y) :- e(X,Y), e(Y,X). e(1,2). e(2,3).");
    HerbrandUniverse u = herbrand_universe(p);
    REQUIRE(u.size() == 3);
    CHECK(ground_rule(p.rules[0], u).size() == 9);  // 3^2
}

TEST_CASE("ground_program counts") {
    CHECK(ground_program(prog("p(1). p(2). q(X) :- p(X).")).rules.size() == 4);

    // 2 facts + 9 + 27 over U = {1,2,3}
    Program transitive = prog("e(1,2). e(2,3). r(X,Y) :- e(X,Y). r(X,Z) :- r(X,Y), e(Y,Z).");
    CHECK(ground_program(transitive).rules.size() == 38);

    // fact-only programs ground to themselves
    Program facts = prog("p(1). q(a,b).");
    GroundProgram g = ground_program(facts);
    CHECK(g.rules.size() == 2);
    CHECK(same_program(Program{g.rules, facts.predicate_signature}, facts));
}

TEST_CASE("grounding is idempotent") {
    Program p = prog("e(1,2). e(2,3). r(X,Y) :- e(X,Y). r(X,Z) :- r(X,Y), e(Y,Z).");
    GroundProgram once = ground_program(p);
    Program as_program{once.rules, p.predicate_signature};
    GroundProgram twice = ground_program(as_program);
    CHECK(once.rules == twice.rules);
}

TEST_CASE("every ground instance of a safe rule is variable-free") {
    Program p = prog("r(X,Z) :- e(X,Y), e(Y,Z). e(1,2). e(2,2).");
    for (const auto& r : ground_program(p).rules) CHECK(r.is_ground());
}

TEST_CASE("the rule cap guards runaway instantiation") {
    // 10 constants, 3 variables -> 10^3 instantiations
    Program p = prog(
        "c(0). c(1). c(2). c(3). c(4). c(5). c(6). c(7). c(8). c(9). "
        "big(A,B,C) :- c(A), c(B), c(C).");
    CHECK_THROWS_AS(ground_program(p, {100}), ResourceLimitError);
    CHECK(ground_program(p, {2000}).rules.size() == 1010);

    // the predicted size saturates instead of overflowing
    Program huge = prog(
        "c(0). c(1). c(2). c(3). c(4). c(5). c(6). c(7). c(8). c(9). "
        "big(A,B,C,D,E,F,G,H,I,J,K,L) :- c(A), c(B), c(C), c(D), c(E), c(F), c(G), c(H), c(I), c(J), "
        "c(K), c(L).");
    CHECK_THROWS_AS(ground_program(huge), ResourceLimitError);
}

TEST_CASE("ground program literals are drawn from the base") {
    Program p = prog("p(a). q(X) :- p(X), not r(X).");
    GroundProgram g = ground_program(p);
    for (const auto& rule : g.rules) {
        for (const auto& h : rule.head) CHECK(g.base.count(h) == 1);
        for (const auto& b : rule.body) CHECK(g.base.count(b.literal) == 1);
    }
}
