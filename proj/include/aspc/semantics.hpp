#ifndef ASPC_SEMANTICS_HPP
#define ASPC_SEMANTICS_HPP

#include <cstddef>
#include <limits>
#include <vector>

#include "aspc/ast.hpp"
#include "aspc/grounder.hpp"

// Stable-model semantics: satisfaction, models, minimality, the
// Gelfond-Lifschitz reduct, answer-set enumeration and cautious queries.
//
// Two fully separate code paths compute answer sets. The main enumerator
// backtracks over candidate literals with unit propagation and verifies
// each total model by reduct minimality; brute_force_answer_sets scans
// every consistent subset of the base. The two are cross-checked in tests.

namespace aspc {

class OracleCapError : public ResourceLimitError {
public:
    using ResourceLimitError::ResourceLimitError;
};

/// A positive naf-literal is true iff its classical literal is in I;
/// a negative one iff it is not.
bool naf_literal_true(const NafLiteral& l, const Interpretation& i);

/// A ground rule is satisfied iff some head literal is true or some body
/// naf-literal is false.
bool rule_satisfied(const Rule& r, const Interpretation& i);

bool is_model(const GroundProgram& g, const Interpretation& i);

/// True iff no strict subset of i is a model of g. i must be a model.
bool is_minimal_model(const GroundProgram& g, const Interpretation& i);

/// The Gelfond-Lifschitz reduct: drops rules whose body has a negative
/// naf-literal false w.r.t. i, strips negative naf-literals from the rest.
GroundProgram reduct(const GroundProgram& g, const Interpretation& i);

/// I is an answer set of P iff I is a minimal model of grnd(P)^I.
/// Interpretations outside the Herbrand base are never answer sets.
bool is_answer_set(const Program& p, const Interpretation& i, const GroundingOptions& options = {});
bool is_answer_set_ground(const GroundProgram& g, const Interpretation& i);

enum class SolveStatus {
    ConsistentWithWitness,
    Inconsistent,
};

struct AnswerSetResult {
    SolveStatus status = SolveStatus::Inconsistent;
    std::vector<Interpretation> answer_sets;  // canonical (string-lexicographic) order
    bool truncated = false;
};

inline constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

/// All answer sets up to `limit`, in lexicographic order of their
/// canonical witness strings.
AnswerSetResult enumerate_answer_sets(const Program& p, std::size_t limit = kNoLimit,
                                      const GroundingOptions& options = {});
AnswerSetResult enumerate_answer_sets_ground(const GroundProgram& g, std::size_t limit = kNoLimit);

/// Ground-truth oracle: scans every consistent subset of the base and keeps
/// the ones passing the answer-set definition. Throws OracleCapError when
/// the base exceeds `cap` literals.
std::vector<Interpretation> brute_force_answer_sets(const GroundProgram& g, std::size_t cap = 20);

/// Cautious entailment: true iff the query literal holds in every answer
/// set. Vacuously true when there are none.
bool cautious_entails(const Program& p, const Query& q, const GroundingOptions& options = {});

}  // namespace aspc

#endif
