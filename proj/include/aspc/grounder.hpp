#ifndef ASPC_GROUNDER_HPP
#define ASPC_GROUNDER_HPP

#include <set>
#include <stdexcept>
#include <vector>

#include "aspc/ast.hpp"

// Naive full Herbrand instantiation. Every variable is replaced by every
// constant of the universe; no simplification is attempted. A rule cap
// guards against runaway instantiations.

namespace aspc {

class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct HerbrandUniverse {
    std::set<Term> constants;

    std::size_t size() const { return constants.size(); }
};

struct GroundProgram {
    std::vector<Rule> rules;  // ground, deduplicated, canonically ordered
    std::set<ClassicalLiteral> base;
};

struct GroundingOptions {
    std::size_t max_rules = 1'000'000;
};

/// All constants syntactically occurring in the program.
HerbrandUniverse herbrand_universe(const Program& p);

/// Both polarities of every ground atom constructible from the program's
/// predicates over its Herbrand universe.
std::set<ClassicalLiteral> herbrand_base(const Program& p);

/// Every total substitution of the rule's variables by universe constants.
/// Ground rules pass through unchanged; an empty universe grounds a
/// variable rule to nothing.
std::set<Rule> ground_rule(const Rule& rule, const HerbrandUniverse& u);

/// grnd(P): the union of ground_rule over all rules, with the Herbrand base.
/// Throws ResourceLimitError if the instantiation exceeds options.max_rules.
GroundProgram ground_program(const Program& p, const GroundingOptions& options = {});

}  // namespace aspc

#endif
