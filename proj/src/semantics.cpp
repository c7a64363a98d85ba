#include "aspc/semantics.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

namespace aspc {

bool naf_literal_true(const NafLiteral& l, const Interpretation& i) {
    bool member = i.contains(l.literal);
    return l.naf_negated ? !member : member;
}

bool rule_satisfied(const Rule& r, const Interpretation& i) {
    for (const auto& h : r.head) {
        if (i.contains(h)) return true;
    }
    for (const auto& b : r.body) {
        if (!naf_literal_true(b, i)) return true;
    }
    return false;
}

bool is_model(const GroundProgram& g, const Interpretation& i) {
    for (const auto& r : g.rules) {
        if (!rule_satisfied(r, i)) return false;
    }
    return true;
}

GroundProgram reduct(const GroundProgram& g, const Interpretation& i) {
    GroundProgram out;
    out.base = g.base;
    for (const auto& r : g.rules) {
        bool drop = false;
        for (const auto& b : r.body) {
            if (b.naf_negated && i.contains(b.literal)) {  // negative naf-literal false w.r.t. i
                drop = true;
                break;
            }
        }
        if (drop) continue;
        Rule kept;
        kept.head = r.head;
        for (const auto& b : r.body) {
            if (!b.naf_negated) kept.body.push_back(b);
        }
        out.rules.push_back(std::move(kept));
    }
    return out;
}

namespace {

// ---------------------------------------------------------------------
// Clause machinery shared by the model enumerator and the proper-submodel
// search. Variables are indices into a literal table; clause entries are
// v+1 (literal in I) or -(v+1) (literal not in I).
// ---------------------------------------------------------------------

enum : std::int8_t { kFalse = 0, kTrue = 1, kUnassigned = 2 };

struct ClauseSet {
    std::size_t num_vars = 0;
    std::vector<std::vector<int>> clauses;
    bool trivially_unsat = false;

    void add(std::vector<int> clause) {
        if (clause.empty()) trivially_unsat = true;
        clauses.push_back(std::move(clause));
    }
};

// Repeatedly assigns forced literals; false on conflict.
bool propagate(const ClauseSet& cs, std::vector<std::int8_t>& assign) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& clause : cs.clauses) {
            int unassigned_lit = 0;
            std::size_t unassigned_count = 0;
            bool satisfied = false;
            for (int lit : clause) {
                std::size_t v = static_cast<std::size_t>(std::abs(lit)) - 1;
                if (assign[v] == kUnassigned) {
                    ++unassigned_count;
                    unassigned_lit = lit;
                } else if ((assign[v] == kTrue) == (lit > 0)) {
                    satisfied = true;
                    break;
                }
            }
            if (satisfied) continue;
            if (unassigned_count == 0) return false;
            if (unassigned_count == 1) {
                std::size_t v = static_cast<std::size_t>(std::abs(unassigned_lit)) - 1;
                assign[v] = unassigned_lit > 0 ? kTrue : kFalse;
                changed = true;
            }
        }
    }
    return true;
}

// Depth-first enumeration of every satisfying total assignment. The
// callback returns false to abort early.
bool enumerate_models(const ClauseSet& cs, std::vector<std::int8_t> assign,
                      const std::function<bool(const std::vector<std::int8_t>&)>& on_model) {
    if (!propagate(cs, assign)) return true;
    auto it = std::find(assign.begin(), assign.end(), kUnassigned);
    if (it == assign.end()) return on_model(assign);
    std::size_t v = static_cast<std::size_t>(it - assign.begin());
    for (std::int8_t value : {kFalse, kTrue}) {
        auto branch = assign;
        branch[v] = value;
        if (!enumerate_models(cs, std::move(branch), on_model)) return false;
    }
    return true;
}

bool satisfiable(const ClauseSet& cs) {
    if (cs.trivially_unsat) return false;
    bool found = false;
    enumerate_models(cs, std::vector<std::int8_t>(cs.num_vars, kUnassigned),
                     [&found](const std::vector<std::int8_t>&) {
                         found = true;
                         return false;
                     });
    return found;
}

// ---------------------------------------------------------------------
// Proper-submodel search: is there a model N of g with N a strict subset
// of m? Atoms outside m are false under every candidate, so rules reduce
// to clauses over the literals of m. Horn instances are decided by least
// fixpoint; the rest fall back to the clause search.
// ---------------------------------------------------------------------

struct SubmodelInstance {
    std::vector<ClassicalLiteral> literals;  // the literals of m, indexed
    ClauseSet clauses;                       // rule satisfaction over subsets of m
    bool horn = true;
};

SubmodelInstance build_submodel_instance(const GroundProgram& g, const Interpretation& m) {
    SubmodelInstance inst;
    inst.literals.assign(m.begin(), m.end());
    std::map<ClassicalLiteral, std::size_t> index;
    for (std::size_t i = 0; i < inst.literals.size(); ++i) index.emplace(inst.literals[i], i);
    inst.clauses.num_vars = inst.literals.size();

    for (const auto& r : g.rules) {
        std::vector<int> clause;
        bool always_satisfied = false;
        std::size_t positives = 0;
        for (const auto& h : r.head) {
            auto it = index.find(h);
            if (it != index.end()) {
                clause.push_back(static_cast<int>(it->second) + 1);
                ++positives;
            }
        }
        for (const auto& b : r.body) {
            auto it = index.find(b.literal);
            if (!b.naf_negated) {
                if (it == index.end()) {
                    always_satisfied = true;  // body literal false under every N ⊆ m
                    break;
                }
                clause.push_back(-(static_cast<int>(it->second) + 1));
            } else {
                if (it == index.end()) {
                    always_satisfied = true;  // naf-literal true under every N ⊆ m
                    break;
                }
                clause.push_back(static_cast<int>(it->second) + 1);
                ++positives;
            }
        }
        if (always_satisfied) continue;
        if (positives > 1) inst.horn = false;
        inst.clauses.add(std::move(clause));
    }
    return inst;
}

bool has_proper_submodel(const GroundProgram& g, const Interpretation& m) {
    if (m.empty()) return false;
    SubmodelInstance inst = build_submodel_instance(g, m);
    if (inst.clauses.trivially_unsat) return false;  // m was not a model to begin with

    if (inst.horn) {
        // least model of the definite clauses; m is minimal iff it equals m
        std::vector<std::int8_t> in(inst.literals.size(), kFalse);
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& clause : inst.clauses.clauses) {
                int head = 0;
                bool body_holds = true;
                for (int lit : clause) {
                    if (lit > 0) {
                        head = lit;
                    } else if (in[static_cast<std::size_t>(-lit) - 1] == kFalse) {
                        body_holds = false;
                        break;
                    }
                }
                if (!body_holds || head == 0) continue;
                auto& cell = in[static_cast<std::size_t>(head) - 1];
                if (cell == kFalse) {
                    cell = kTrue;
                    changed = true;
                }
            }
        }
        // goal clauses (no positive literal) cannot fail here when m is a
        // model; check anyway and fall through to the search if one does
        bool goals_hold = true;
        for (const auto& clause : inst.clauses.clauses) {
            bool satisfied = false;
            for (int lit : clause) {
                std::size_t v = static_cast<std::size_t>(std::abs(lit)) - 1;
                if ((lit > 0) == (in[v] == kTrue)) {
                    satisfied = true;
                    break;
                }
            }
            if (!satisfied) {
                goals_hold = false;
                break;
            }
        }
        if (goals_hold) return std::find(in.begin(), in.end(), kFalse) != in.end();
    }

    // disjunctive case: search for any model missing at least one literal
    std::vector<int> at_least_one_out;
    at_least_one_out.reserve(inst.literals.size());
    for (std::size_t v = 0; v < inst.literals.size(); ++v) at_least_one_out.push_back(-(static_cast<int>(v) + 1));
    inst.clauses.add(std::move(at_least_one_out));
    return satisfiable(inst.clauses);
}

std::vector<Interpretation> sort_canonically(std::vector<Interpretation> sets) {
    std::sort(sets.begin(), sets.end(), [](const Interpretation& a, const Interpretation& b) {
        return a.to_string() < b.to_string();
    });
    return sets;
}

}  // namespace

bool is_minimal_model(const GroundProgram& g, const Interpretation& i) {
    return !has_proper_submodel(g, i);
}

bool is_answer_set_ground(const GroundProgram& g, const Interpretation& i) {
    for (const auto& lit : i) {
        if (g.base.count(lit) == 0) return false;
    }
    GroundProgram r = reduct(g, i);
    return is_model(r, i) && !has_proper_submodel(r, i);
}

bool is_answer_set(const Program& p, const Interpretation& i, const GroundingOptions& options) {
    return is_answer_set_ground(ground_program(p, options), i);
}

AnswerSetResult enumerate_answer_sets_ground(const GroundProgram& g, std::size_t limit) {
    // Candidate literals: any literal of an answer set is derivable through
    // rule heads whose positive bodies are themselves derivable (NAF
    // ignored, an over-approximation). Everything else is fixed to "out".
    std::set<ClassicalLiteral> derivable;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& r : g.rules) {
            bool body_possible = true;
            for (const auto& b : r.body) {
                if (!b.naf_negated && derivable.count(b.literal) == 0) {
                    body_possible = false;
                    break;
                }
            }
            if (!body_possible) continue;
            for (const auto& h : r.head) {
                if (derivable.insert(h).second) grew = true;
            }
        }
    }

    std::vector<ClassicalLiteral> candidates;
    std::map<ClassicalLiteral, std::size_t> index;
    for (const auto& r : g.rules) {
        for (const auto& h : r.head) {
            if (derivable.count(h) == 0) continue;
            if (index.emplace(h, candidates.size()).second) candidates.push_back(h);
        }
    }

    ClauseSet cs;
    cs.num_vars = candidates.size();
    for (const auto& r : g.rules) {
        std::vector<int> clause;
        bool always_satisfied = false;
        for (const auto& h : r.head) {
            auto it = index.find(h);  // non-derivable head literals stay out
            if (it != index.end()) clause.push_back(static_cast<int>(it->second) + 1);
        }
        for (const auto& b : r.body) {
            auto it = index.find(b.literal);
            if (!b.naf_negated) {
                if (it == index.end()) {
                    always_satisfied = true;  // positive body literal can never be derived
                    break;
                }
                clause.push_back(-(static_cast<int>(it->second) + 1));
            } else if (it != index.end()) {
                clause.push_back(static_cast<int>(it->second) + 1);
            }
            // a naf-literal over a non-derivable literal is simply true
        }
        if (!always_satisfied) cs.add(std::move(clause));
    }
    // consistency: never both a and -a
    for (std::size_t v = 0; v < candidates.size(); ++v) {
        auto it = index.find(complement(candidates[v]));
        if (it != index.end() && it->second > v) {
            cs.add({-(static_cast<int>(v) + 1), -(static_cast<int>(it->second) + 1)});
        }
    }

    AnswerSetResult result;
    if (cs.trivially_unsat) {
        result.status = SolveStatus::Inconsistent;
        return result;
    }

    std::vector<Interpretation> found;
    enumerate_models(cs, std::vector<std::int8_t>(cs.num_vars, kUnassigned),
                     [&](const std::vector<std::int8_t>& assign) {
                         Interpretation candidate;
                         for (std::size_t v = 0; v < candidates.size(); ++v) {
                             if (assign[v] == kTrue) candidate.insert(candidates[v]);
                         }
                         GroundProgram r = reduct(g, candidate);
                         if (is_model(r, candidate) && !has_proper_submodel(r, candidate)) {
                             found.push_back(std::move(candidate));
                         }
                         return true;
                     });

    found = sort_canonically(std::move(found));
    if (found.size() > limit) {
        found.resize(limit);
        result.truncated = true;
    }
    result.answer_sets = std::move(found);
    result.status = result.answer_sets.empty() && !result.truncated ? SolveStatus::Inconsistent
                                                                    : SolveStatus::ConsistentWithWitness;
    return result;
}

AnswerSetResult enumerate_answer_sets(const Program& p, std::size_t limit, const GroundingOptions& options) {
    return enumerate_answer_sets_ground(ground_program(p, options), limit);
}

std::vector<Interpretation> brute_force_answer_sets(const GroundProgram& g, std::size_t cap) {
    std::vector<ClassicalLiteral> literals(g.base.begin(), g.base.end());
    if (literals.size() > cap) {
        throw OracleCapError("oracle cap exceeded: base has " + std::to_string(literals.size()) +
                             " literals, cap is " + std::to_string(cap));
    }
    const std::size_t n = literals.size();

    // complement pairs for the consistency pre-filter
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::map<ClassicalLiteral, std::size_t> index;
    for (std::size_t v = 0; v < n; ++v) index.emplace(literals[v], v);
    for (std::size_t v = 0; v < n; ++v) {
        auto it = index.find(complement(literals[v]));
        if (it != index.end() && it->second > v) pairs.emplace_back(v, it->second);
    }

    auto subset_of = [&literals, n](std::uint64_t mask) {
        Interpretation i;
        for (std::size_t v = 0; v < n; ++v) {
            if (mask & (std::uint64_t{1} << v)) i.insert(literals[v]);
        }
        return i;
    };

    std::vector<Interpretation> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (const auto& [a, b] : pairs) {
            if ((mask >> a & 1) && (mask >> b & 1)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        Interpretation candidate = subset_of(mask);
        GroundProgram r = reduct(g, candidate);
        if (!is_model(r, candidate)) continue;
        // minimality the dumb way: try every strict subset
        bool minimal = true;
        if (mask != 0) {
            for (std::uint64_t sub = (mask - 1) & mask;; sub = (sub - 1) & mask) {
                if (is_model(r, subset_of(sub))) {
                    minimal = false;
                    break;
                }
                if (sub == 0) break;
            }
        }
        if (minimal) out.push_back(std::move(candidate));
    }
    return sort_canonically(std::move(out));
}

bool cautious_entails(const Program& p, const Query& q, const GroundingOptions& options) {
    AnswerSetResult result = enumerate_answer_sets(p, kNoLimit, options);
    for (const auto& a : result.answer_sets) {
        if (!naf_literal_true(q.literal, a)) return false;
    }
    return true;  // vacuously true when AS(P) is empty
}

}  // namespace aspc
