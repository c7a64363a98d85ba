#ifndef ASPC_AST_HPP
#define ASPC_AST_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

// Core model of the ASP-Core language: terms, atoms, literals, rules,
// programs, queries and interpretations. All types are immutable value
// types once built; sharing across threads is safe.

namespace aspc {

enum class TermKind {
    SymbolicConstant,
    StringConstant,
    IntegerConstant,
    Variable,
    Anonymous,
};

class Term {
public:
    Term() : kind_(TermKind::SymbolicConstant) {}

    static Term symbol(std::string name);
    static Term string(std::string text);
    static Term integer(long long value);
    static Term variable(std::string name);
    static Term anonymous();

    TermKind kind() const { return kind_; }
    /// Identifier of a symbolic constant or variable.
    const std::string& name() const { return text_; }
    /// Unquoted character data of a string constant.
    const std::string& text() const { return text_; }
    long long value() const { return value_; }

    bool is_constant() const;
    bool is_variable() const;

    std::string to_string() const;

    std::strong_ordering operator<=>(const Term& other) const;
    bool operator==(const Term& other) const = default;

private:
    TermKind kind_;
    std::string text_;
    long long value_ = 0;
};

struct Atom {
    std::string predicate;
    std::vector<Term> terms;

    std::size_t arity() const { return terms.size(); }
    bool is_ground() const;
    std::string to_string() const;

    auto operator<=>(const Atom&) const = default;
};

struct ClassicalLiteral {
    Atom atom;
    bool strongly_negated = false;

    bool is_ground() const { return atom.is_ground(); }
    std::string to_string() const;

    auto operator<=>(const ClassicalLiteral&) const = default;
};

/// Flips strong negation; an involution on ground literals.
ClassicalLiteral complement(const ClassicalLiteral& lit);

struct NafLiteral {
    ClassicalLiteral literal;
    bool naf_negated = false;

    bool is_ground() const { return literal.is_ground(); }
    std::string to_string() const;

    auto operator<=>(const NafLiteral&) const = default;
};

struct Rule {
    std::vector<ClassicalLiteral> head;
    std::vector<NafLiteral> body;

    bool is_fact() const { return head.size() == 1 && body.empty(); }
    bool is_constraint() const { return head.empty(); }
    bool is_ground() const;
    std::string to_string() const;

    auto operator<=>(const Rule&) const = default;
};

struct Program {
    std::vector<Rule> rules;
    // predicate name -> arity; one arity per predicate within a program
    std::map<std::string, std::size_t> predicate_signature;

    std::string to_string() const;
};

/// Rule-order-insensitive structural equality (head/body order still counts).
bool same_program(const Program& a, const Program& b);

struct Query {
    NafLiteral literal;  // ground by construction

    std::string to_string() const;
};

/// A consistent set of ground classical literals. Insertion that would
/// introduce both a and -a is rejected.
class Interpretation {
public:
    using Set = std::set<ClassicalLiteral>;
    using const_iterator = Set::const_iterator;

    Interpretation() = default;

    /// Builds an interpretation, or nullopt if the literals are inconsistent.
    static std::optional<Interpretation> from_literals(std::vector<ClassicalLiteral> literals);

    bool insert(const ClassicalLiteral& lit);
    bool contains(const ClassicalLiteral& lit) const { return literals_.count(lit) > 0; }
    bool empty() const { return literals_.empty(); }
    std::size_t size() const { return literals_.size(); }

    const_iterator begin() const { return literals_.begin(); }
    const_iterator end() const { return literals_.end(); }
    const Set& literals() const { return literals_; }

    bool is_subset_of(const Interpretation& other) const;

    /// Space-separated literals in lexicographic order of their canonical text.
    std::string to_string() const;

    auto operator<=>(const Interpretation&) const = default;

private:
    Set literals_;
};

bool consistent(const std::set<ClassicalLiteral>& literals);

}  // namespace aspc

#endif
