#include "aspc/ast.hpp"

#include <algorithm>
#include <sstream>

namespace aspc {

Term Term::symbol(std::string name) {
    Term t;
    t.kind_ = TermKind::SymbolicConstant;
    t.text_ = std::move(name);
    return t;
}

Term Term::string(std::string text) {
    Term t;
    t.kind_ = TermKind::StringConstant;
    t.text_ = std::move(text);
    return t;
}

Term Term::integer(long long value) {
    Term t;
    t.kind_ = TermKind::IntegerConstant;
    t.value_ = value;
    return t;
}

Term Term::variable(std::string name) {
    Term t;
    t.kind_ = TermKind::Variable;
    t.text_ = std::move(name);
    return t;
}

Term Term::anonymous() {
    Term t;
    t.kind_ = TermKind::Anonymous;
    return t;
}

bool Term::is_constant() const {
    return kind_ == TermKind::SymbolicConstant || kind_ == TermKind::StringConstant ||
           kind_ == TermKind::IntegerConstant;
}

bool Term::is_variable() const {
    return kind_ == TermKind::Variable || kind_ == TermKind::Anonymous;
}

std::string Term::to_string() const {
    switch (kind_) {
        case TermKind::SymbolicConstant:
            return text_;
        case TermKind::Variable:
            // parser-generated placeholders print back as the placeholder;
            // each occurs exactly once per rule, so reparsing is faithful
            return text_.rfind("_ANON", 0) == 0 ? "_" : text_;
        case TermKind::StringConstant: {
            std::string out = "\"";
            for (char c : text_) {
                if (c == '"' || c == '\\') out.push_back('\\');
                out.push_back(c);
            }
            out.push_back('"');
            return out;
        }
        case TermKind::IntegerConstant:
            return std::to_string(value_);
        case TermKind::Anonymous:
            return "_";
    }
    return {};
}

std::strong_ordering Term::operator<=>(const Term& other) const {
    if (auto c = kind_ <=> other.kind_; c != 0) return c;
    if (auto c = text_ <=> other.text_; c != 0) return c;
    return value_ <=> other.value_;
}

bool Atom::is_ground() const {
    return std::all_of(terms.begin(), terms.end(), [](const Term& t) { return t.is_constant(); });
}

std::string Atom::to_string() const {
    // arity-0 atoms print bare: "p", never "p()"
    if (terms.empty()) return predicate;
    std::string out = predicate;
    out.push_back('(');
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i > 0) out.push_back(',');
        out += terms[i].to_string();
    }
    out.push_back(')');
    return out;
}

std::string ClassicalLiteral::to_string() const {
    return strongly_negated ? "-" + atom.to_string() : atom.to_string();
}

ClassicalLiteral complement(const ClassicalLiteral& lit) {
    return ClassicalLiteral{lit.atom, !lit.strongly_negated};
}

std::string NafLiteral::to_string() const {
    return naf_negated ? "not " + literal.to_string() : literal.to_string();
}

bool Rule::is_ground() const {
    for (const auto& l : head)
        if (!l.is_ground()) return false;
    for (const auto& l : body)
        if (!l.is_ground()) return false;
    return true;
}

std::string Rule::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < head.size(); ++i) {
        if (i > 0) out += " | ";
        out += head[i].to_string();
    }
    if (!body.empty()) {
        if (!head.empty()) out.push_back(' ');
        out += ":- ";
        for (std::size_t i = 0; i < body.size(); ++i) {
            if (i > 0) out += ", ";
            out += body[i].to_string();
        }
    }
    out.push_back('.');
    return out;
}

std::string Program::to_string() const {
    std::string out;
    for (const auto& r : rules) {
        out += r.to_string();
        out.push_back('\n');
    }
    return out;
}

bool same_program(const Program& a, const Program& b) {
    if (a.predicate_signature != b.predicate_signature) return false;
    std::multiset<Rule> ra(a.rules.begin(), a.rules.end());
    std::multiset<Rule> rb(b.rules.begin(), b.rules.end());
    return ra == rb;
}

std::string Query::to_string() const {
    return literal.to_string() + "?";
}

std::optional<Interpretation> Interpretation::from_literals(std::vector<ClassicalLiteral> literals) {
    Interpretation i;
    for (auto& l : literals) {
        if (i.contains(complement(l))) return std::nullopt;
        i.literals_.insert(std::move(l));
    }
    return i;
}

bool Interpretation::insert(const ClassicalLiteral& lit) {
    if (contains(complement(lit))) return false;
    literals_.insert(lit);
    return true;
}

bool Interpretation::is_subset_of(const Interpretation& other) const {
    return std::includes(other.literals_.begin(), other.literals_.end(),
                         literals_.begin(), literals_.end());
}

std::string Interpretation::to_string() const {
    std::vector<std::string> parts;
    parts.reserve(literals_.size());
    for (const auto& l : literals_) parts.push_back(l.to_string());
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out.push_back(' ');
        out += parts[i];
    }
    return out;
}

bool consistent(const std::set<ClassicalLiteral>& literals) {
    for (const auto& l : literals) {
        if (literals.count(complement(l)) > 0) return false;
    }
    return true;
}

}  // namespace aspc
