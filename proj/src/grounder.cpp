#include "aspc/grounder.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace aspc {

namespace {

void collect_constants(const Atom& atom, std::set<Term>& into) {
    for (const auto& t : atom.terms) {
        if (t.is_constant()) into.insert(t);
    }
}

std::vector<std::string> rule_variables(const Rule& rule) {
    std::vector<std::string> vars;
    auto note = [&vars](const Atom& atom) {
        for (const auto& t : atom.terms) {
            if (t.is_variable() && std::find(vars.begin(), vars.end(), t.name()) == vars.end()) {
                vars.push_back(t.name());
            }
        }
    };
    for (const auto& l : rule.head) note(l.atom);
    for (const auto& l : rule.body) note(l.literal.atom);
    return vars;
}

Rule substitute(const Rule& rule, const std::map<std::string, Term>& binding) {
    auto subst_atom = [&binding](const Atom& atom) {
        Atom a;
        a.predicate = atom.predicate;
        a.terms.reserve(atom.terms.size());
        for (const auto& t : atom.terms) {
            a.terms.push_back(t.is_variable() ? binding.at(t.name()) : t);
        }
        return a;
    };
    Rule out;
    out.head.reserve(rule.head.size());
    out.body.reserve(rule.body.size());
    for (const auto& l : rule.head) out.head.push_back({subst_atom(l.atom), l.strongly_negated});
    for (const auto& l : rule.body)
        out.body.push_back({{subst_atom(l.literal.atom), l.literal.strongly_negated}, l.naf_negated});
    return out;
}

/// Advances a mixed-radix counter; false once every digit has wrapped.
bool advance_odometer(std::vector<std::size_t>& index, std::size_t radix) {
    for (std::size_t pos = index.size(); pos > 0;) {
        --pos;
        if (++index[pos] < radix) return true;
        index[pos] = 0;
    }
    return false;
}

// |U|^v with saturation, to size the instantiation before materializing it
std::size_t instantiation_count(std::size_t universe, std::size_t vars, std::size_t cap) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < vars; ++i) {
        if (universe != 0 && n > cap / universe + 1) return cap + 1;
        n *= universe;
    }
    return n;
}

}  // namespace

HerbrandUniverse herbrand_universe(const Program& p) {
    HerbrandUniverse u;
    for (const auto& rule : p.rules) {
        for (const auto& l : rule.head) collect_constants(l.atom, u.constants);
        for (const auto& l : rule.body) collect_constants(l.literal.atom, u.constants);
    }
    return u;
}

std::set<ClassicalLiteral> herbrand_base(const Program& p) {
    HerbrandUniverse u = herbrand_universe(p);
    std::vector<Term> constants(u.constants.begin(), u.constants.end());
    std::set<ClassicalLiteral> base;
    for (const auto& [predicate, arity] : p.predicate_signature) {
        if (arity > 0 && constants.empty()) continue;
        std::vector<std::size_t> index(arity, 0);
        do {
            Atom atom;
            atom.predicate = predicate;
            atom.terms.reserve(arity);
            for (std::size_t i = 0; i < arity; ++i) atom.terms.push_back(constants[index[i]]);
            base.insert({atom, false});
            base.insert({atom, true});
        } while (advance_odometer(index, constants.size()));
    }
    return base;
}

std::set<Rule> ground_rule(const Rule& rule, const HerbrandUniverse& u) {
    std::vector<std::string> vars = rule_variables(rule);
    std::set<Rule> out;
    if (vars.empty()) {
        out.insert(rule);
        return out;
    }
    if (u.constants.empty()) return out;
    std::vector<Term> constants(u.constants.begin(), u.constants.end());
    std::vector<std::size_t> index(vars.size(), 0);
    std::map<std::string, Term> binding;
    do {
        for (std::size_t i = 0; i < vars.size(); ++i) binding[vars[i]] = constants[index[i]];
        out.insert(substitute(rule, binding));
    } while (advance_odometer(index, constants.size()));
    return out;
}

GroundProgram ground_program(const Program& p, const GroundingOptions& options) {
    HerbrandUniverse u = herbrand_universe(p);

    std::size_t predicted = 0;
    for (const auto& rule : p.rules) {
        predicted += instantiation_count(u.size(), rule_variables(rule).size(), options.max_rules);
        if (predicted > options.max_rules) {
            throw ResourceLimitError("grounding would exceed the rule cap (" +
                                     std::to_string(options.max_rules) + " rules)");
        }
    }

    std::set<Rule> rules;
    for (const auto& rule : p.rules) {
        auto ground = ground_rule(rule, u);
        rules.insert(ground.begin(), ground.end());
    }

    GroundProgram g;
    g.rules.assign(rules.begin(), rules.end());
    g.base = herbrand_base(p);
    return g;
}

}  // namespace aspc
