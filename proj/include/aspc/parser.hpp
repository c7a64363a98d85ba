#ifndef ASPC_PARSER_HPP
#define ASPC_PARSER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aspc/ast.hpp"

// Concrete ASP-Core syntax. Rules are period-terminated, head disjunction
// uses `|`, the rule operator is `:-`, body literals are comma-separated,
// `not` is the NAF keyword, `-` (no space) is strong negation, `%` starts
// a line comment. Strings are double-quoted with \" and \\ escapes.
// Anonymous `_` occurrences are rewritten to fresh `_ANONk` variables,
// unique within their rule.

namespace aspc {

enum class DiagnosticKind {
    SyntaxError,
    ArityConflict,
    UnsafeRule,
    IntegerOverflow,
    NonGroundQuery,
};

struct ParseDiagnostic {
    DiagnosticKind kind = DiagnosticKind::SyntaxError;
    int line = 0;    // 1-based
    int column = 0;  // 1-based
    std::string message;
    std::vector<std::string> offending_variables;

    std::string to_string() const;
};

struct ParseResult {
    std::optional<Program> program;
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const { return program.has_value(); }
};

ParseResult parse_program(std::string_view source);

struct QueryParseResult {
    std::optional<Query> query;
    std::optional<ParseDiagnostic> diagnostic;

    bool ok() const { return query.has_value(); }
};

QueryParseResult parse_query(std::string_view source);

/// Parses a single ground classical literal, e.g. "-p(1,\"x\")".
std::optional<ClassicalLiteral> parse_ground_literal(std::string_view source);

/// Parses a whitespace-separated sequence of ground classical literals
/// (a witness line). Returns nullopt on any lexical error or variable.
std::optional<std::vector<ClassicalLiteral>> parse_ground_literal_list(std::string_view source);

struct SafetyResult {
    bool safe = true;
    std::vector<std::string> offending_variables;  // sorted, distinct
};

/// A rule is safe when every variable occurs in at least one positive
/// naf-literal of the body.
SafetyResult check_safety(const Rule& rule);

/// Canonical concrete syntax, one rule per line.
/// parse_program(print_program(p)) is structurally equal to p.
std::string print_program(const Program& p);

struct ScrambleMap {
    std::map<std::string, std::string> predicate_renaming;  // original -> opaque
    std::uint64_t seed = 0;

    /// Renames the predicates of a ground interpretation forward.
    Interpretation apply(const Interpretation& i) const;
    /// Maps a scrambled interpretation back to original predicate names.
    Interpretation map_back(const Interpretation& i) const;
};

/// Renames predicates globally to opaque names and variables per rule;
/// constants are untouched. Deterministic for a given seed.
std::pair<Program, ScrambleMap> scramble(const Program& p, std::uint64_t seed);

}  // namespace aspc

#endif
