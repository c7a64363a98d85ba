#include "aspc/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <random>
#include <set>
#include <sstream>

namespace aspc {

namespace {

enum class TokKind {
    Identifier,  // lowercase-leading
    Variable,    // uppercase-leading
    Integer,
    String,
    Underscore,
    LParen,
    RParen,
    Comma,
    Period,
    Pipe,
    If,     // :-
    Minus,
    Not,    // keyword
    Query,  // ?
    End,
    Error,
};

struct Token {
    TokKind kind = TokKind::End;
    std::string text;
    unsigned long long number = 0;
    bool number_overflow = false;
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_ws_and_comments();
        Token t;
        t.line = line_;
        t.column = column_;
        if (pos_ >= src_.size()) {
            t.kind = TokKind::End;
            return t;
        }
        char c = src_[pos_];
        if (c == '(') return single(t, TokKind::LParen);
        if (c == ')') return single(t, TokKind::RParen);
        if (c == ',') return single(t, TokKind::Comma);
        if (c == '.') return single(t, TokKind::Period);
        if (c == '|') return single(t, TokKind::Pipe);
        if (c == '-') return single(t, TokKind::Minus);
        if (c == '?') return single(t, TokKind::Query);
        if (c == ':') {
            if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '-') {
                advance();
                advance();
                t.kind = TokKind::If;
                return t;
            }
            t.kind = TokKind::Error;
            t.text = "':' not followed by '-'";
            return t;
        }
        if (c == '"') return lex_string(t);
        if (std::isdigit(static_cast<unsigned char>(c))) return lex_integer(t);
        if (c == '_') {
            advance();
            // a bare placeholder only; `_foo` is not a legal token
            if (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                t.kind = TokKind::Error;
                t.text = "identifiers may not start with '_'";
                return t;
            }
            t.kind = TokKind::Underscore;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return lex_word(t);
        t.kind = TokKind::Error;
        t.text = std::string("unexpected character '") + c + "'";
        advance();
        return t;
    }

private:
    Token& single(Token& t, TokKind k) {
        t.kind = k;
        advance();
        return t;
    }

    void advance() {
        if (pos_ < src_.size()) {
            if (src_[pos_] == '\n') {
                ++line_;
                column_ = 1;
            } else {
                ++column_;
            }
            ++pos_;
        }
    }

    void skip_ws_and_comments() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '%') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    Token& lex_word(Token& t) {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
            advance();
        }
        t.text = std::string(src_.substr(start, pos_ - start));
        if (t.text == "not") {
            t.kind = TokKind::Not;
        } else if (std::isupper(static_cast<unsigned char>(t.text[0]))) {
            t.kind = TokKind::Variable;
        } else {
            t.kind = TokKind::Identifier;
        }
        return t;
    }

    Token& lex_integer(Token& t) {
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
        std::string digits(src_.substr(start, pos_ - start));
        t.kind = TokKind::Integer;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), t.number);
        if (ec != std::errc() || ptr != digits.data() + digits.size()) t.number_overflow = true;
        return t;
    }

    Token& lex_string(Token& t) {
        advance();  // opening quote
        std::string out;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '\\') {
                advance();
                if (pos_ >= src_.size()) break;
                char esc = src_[pos_];
                if (esc == '"' || esc == '\\') {
                    out.push_back(esc);
                    advance();
                } else {
                    t.kind = TokKind::Error;
                    t.text = std::string("unknown escape '\\") + esc + "' in string";
                    return t;
                }
            } else if (c == '"') {
                advance();
                t.kind = TokKind::String;
                t.text = std::move(out);
                return t;
            } else if (c == '\n') {
                break;
            } else {
                out.push_back(c);
                advance();
            }
        }
        t.kind = TokKind::Error;
        t.text = "unterminated string";
        return t;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

constexpr unsigned long long kMaxMagnitude =
    static_cast<unsigned long long>(std::numeric_limits<long long>::max());

class Parser {
public:
    explicit Parser(std::string_view src) : lexer_(src) { bump(); }

    ParseResult parse_program_source() {
        Program prog;
        while (tok_.kind != TokKind::End) {
            if (tok_.kind == TokKind::Error) {
                error(DiagnosticKind::SyntaxError, tok_.text);
                break;
            }
            anon_counter_ = 0;
            auto rule = parse_rule();
            if (!rule) {
                if (!recover_to_period()) break;
                continue;
            }
            finish_rule(prog, *rule);
        }
        ParseResult res;
        res.diagnostics = std::move(diagnostics_);
        if (res.diagnostics.empty()) {
            prog.predicate_signature = std::move(signature_);
            res.program = std::move(prog);
        }
        return res;
    }

    QueryParseResult parse_query_source() {
        QueryParseResult res;
        auto lit = parse_naf_literal();
        if (!lit) {
            res.diagnostic = diagnostics_.empty() ? ParseDiagnostic{} : diagnostics_.front();
            return res;
        }
        if (tok_.kind != TokKind::Query) {
            res.diagnostic = make_diag(DiagnosticKind::SyntaxError, "expected '?' after query literal");
            return res;
        }
        bump();
        if (tok_.kind != TokKind::End) {
            res.diagnostic = make_diag(DiagnosticKind::SyntaxError, "trailing input after query");
            return res;
        }
        if (!lit->is_ground()) {
            ParseDiagnostic d = make_diag(DiagnosticKind::NonGroundQuery, "query must be ground");
            for (const auto& v : collect_variables(*lit)) d.offending_variables.push_back(v);
            res.diagnostic = std::move(d);
            return res;
        }
        res.query = Query{*lit};
        return res;
    }

    std::optional<ClassicalLiteral> parse_literal_source() {
        auto lit = parse_classical_literal();
        if (!lit || !diagnostics_.empty()) return std::nullopt;
        if (tok_.kind != TokKind::End) return std::nullopt;
        if (!lit->is_ground()) return std::nullopt;
        return lit;
    }

    std::optional<std::vector<ClassicalLiteral>> parse_literal_list_source() {
        std::vector<ClassicalLiteral> out;
        while (tok_.kind != TokKind::End) {
            auto lit = parse_classical_literal();
            if (!lit || !diagnostics_.empty() || !lit->is_ground()) return std::nullopt;
            out.push_back(std::move(*lit));
        }
        return out;
    }

private:
    void bump() { tok_ = lexer_.next(); }

    ParseDiagnostic make_diag(DiagnosticKind kind, std::string msg) const {
        ParseDiagnostic d;
        d.kind = kind;
        d.line = tok_.line;
        d.column = tok_.column;
        d.message = std::move(msg);
        return d;
    }

    void error(DiagnosticKind kind, std::string msg) { diagnostics_.push_back(make_diag(kind, std::move(msg))); }

    bool recover_to_period() {
        while (tok_.kind != TokKind::End && tok_.kind != TokKind::Error) {
            if (tok_.kind == TokKind::Period) {
                bump();
                return true;
            }
            bump();
        }
        return false;
    }

    std::optional<Term> parse_term() {
        switch (tok_.kind) {
            case TokKind::Identifier: {
                Term t = Term::symbol(tok_.text);
                bump();
                return t;
            }
            case TokKind::Variable: {
                Term t = Term::variable(tok_.text);
                bump();
                return t;
            }
            case TokKind::Underscore: {
                Term t = Term::variable("_ANON" + std::to_string(++anon_counter_));
                bump();
                return t;
            }
            case TokKind::String: {
                Term t = Term::string(tok_.text);
                bump();
                return t;
            }
            case TokKind::Integer:
                return parse_integer(false);
            case TokKind::Minus: {
                bump();
                if (tok_.kind != TokKind::Integer) {
                    error(DiagnosticKind::SyntaxError, "expected integer after '-' in term position");
                    return std::nullopt;
                }
                return parse_integer(true);
            }
            default:
                error(DiagnosticKind::SyntaxError, "expected term");
                return std::nullopt;
        }
    }

    std::optional<Term> parse_integer(bool negative) {
        unsigned long long mag = tok_.number;
        // -(2^63) is representable, 2^63 is not
        bool over = tok_.number_overflow || mag > (negative ? kMaxMagnitude + 1 : kMaxMagnitude);
        if (over) {
            error(DiagnosticKind::IntegerOverflow, "integer constant out of range");
            bump();
            return std::nullopt;
        }
        long long v;
        if (negative) {
            v = (mag == kMaxMagnitude + 1) ? std::numeric_limits<long long>::min()
                                           : -static_cast<long long>(mag);
        } else {
            v = static_cast<long long>(mag);
        }
        bump();
        return Term::integer(v);
    }

    std::optional<Atom> parse_atom() {
        if (tok_.kind != TokKind::Identifier) {
            error(DiagnosticKind::SyntaxError, "expected predicate name");
            return std::nullopt;
        }
        Atom atom;
        atom.predicate = tok_.text;
        bump();
        if (tok_.kind == TokKind::LParen) {
            bump();
            if (tok_.kind == TokKind::RParen) {
                bump();  // "p()" is the arity-0 atom p
                return atom;
            }
            while (true) {
                auto t = parse_term();
                if (!t) return std::nullopt;
                atom.terms.push_back(*t);
                if (tok_.kind == TokKind::Comma) {
                    bump();
                    continue;
                }
                if (tok_.kind == TokKind::RParen) {
                    bump();
                    break;
                }
                error(DiagnosticKind::SyntaxError, "expected ',' or ')' in term list");
                return std::nullopt;
            }
        }
        return atom;
    }

    std::optional<ClassicalLiteral> parse_classical_literal() {
        bool neg = false;
        if (tok_.kind == TokKind::Minus) {
            neg = true;
            bump();
        }
        auto atom = parse_atom();
        if (!atom) return std::nullopt;
        return ClassicalLiteral{std::move(*atom), neg};
    }

    std::optional<NafLiteral> parse_naf_literal() {
        bool naf = false;
        if (tok_.kind == TokKind::Not) {
            naf = true;
            bump();
        }
        auto lit = parse_classical_literal();
        if (!lit) return std::nullopt;
        return NafLiteral{std::move(*lit), naf};
    }

    std::optional<Rule> parse_rule() {
        Rule rule;
        int line = tok_.line, column = tok_.column;
        if (tok_.kind != TokKind::If) {
            while (true) {
                auto lit = parse_classical_literal();
                if (!lit) return std::nullopt;
                rule.head.push_back(std::move(*lit));
                if (tok_.kind == TokKind::Pipe) {
                    bump();
                    continue;
                }
                break;
            }
        }
        if (tok_.kind == TokKind::If) {
            bump();
            while (true) {
                auto lit = parse_naf_literal();
                if (!lit) return std::nullopt;
                rule.body.push_back(std::move(*lit));
                if (tok_.kind == TokKind::Comma) {
                    bump();
                    continue;
                }
                break;
            }
        }
        if (tok_.kind != TokKind::Period) {
            error(DiagnosticKind::SyntaxError, "expected '.' at end of rule");
            return std::nullopt;
        }
        bump();
        if (rule.head.empty() && rule.body.empty()) {
            ParseDiagnostic d;
            d.kind = DiagnosticKind::SyntaxError;
            d.line = line;
            d.column = column;
            d.message = "rule must have a nonempty head or body";
            diagnostics_.push_back(std::move(d));
            return std::nullopt;
        }
        rule_line_ = line;
        rule_column_ = column;
        return rule;
    }

    void finish_rule(Program& prog, Rule& rule) {
        for (const auto& l : rule.head) register_predicate(l.atom);
        for (const auto& l : rule.body) register_predicate(l.literal.atom);

        auto safety = check_safety(rule);
        if (!safety.safe) {
            ParseDiagnostic d;
            d.kind = DiagnosticKind::UnsafeRule;
            d.line = rule_line_;
            d.column = rule_column_;
            d.message = "variable(s) do not occur in a positive body literal";
            d.offending_variables = safety.offending_variables;
            diagnostics_.push_back(std::move(d));
            return;
        }
        prog.rules.push_back(std::move(rule));
    }

    void register_predicate(const Atom& atom) {
        auto it = signature_.find(atom.predicate);
        if (it == signature_.end()) {
            signature_.emplace(atom.predicate, atom.arity());
            return;
        }
        if (it->second != atom.arity()) {
            std::ostringstream msg;
            msg << "predicate '" << atom.predicate << "' used with arity " << atom.arity()
                << " but previously with arity " << it->second;
            error(DiagnosticKind::ArityConflict, msg.str());
        }
    }

    static std::set<std::string> collect_variables(const NafLiteral& lit) {
        std::set<std::string> vars;
        for (const auto& t : lit.literal.atom.terms)
            if (t.is_variable()) vars.insert(t.name());
        return vars;
    }

    Lexer lexer_;
    Token tok_;
    std::vector<ParseDiagnostic> diagnostics_;
    std::map<std::string, std::size_t> signature_;
    int anon_counter_ = 0;
    int rule_line_ = 1;
    int rule_column_ = 1;
};

const char* kind_name(DiagnosticKind k) {
    switch (k) {
        case DiagnosticKind::SyntaxError: return "syntax error";
        case DiagnosticKind::ArityConflict: return "arity conflict";
        case DiagnosticKind::UnsafeRule: return "unsafe rule";
        case DiagnosticKind::IntegerOverflow: return "integer overflow";
        case DiagnosticKind::NonGroundQuery: return "non-ground query";
    }
    return "error";
}

}  // namespace

std::string ParseDiagnostic::to_string() const {
    std::ostringstream out;
    out << line << ":" << column << ": " << kind_name(kind) << ": " << message;
    if (!offending_variables.empty()) {
        out << " [";
        for (std::size_t i = 0; i < offending_variables.size(); ++i) {
            if (i > 0) out << ", ";
            out << offending_variables[i];
        }
        out << "]";
    }
    return out.str();
}

ParseResult parse_program(std::string_view source) {
    Parser p(source);
    return p.parse_program_source();
}

QueryParseResult parse_query(std::string_view source) {
    Parser p(source);
    return p.parse_query_source();
}

std::optional<ClassicalLiteral> parse_ground_literal(std::string_view source) {
    Parser p(source);
    return p.parse_literal_source();
}

std::optional<std::vector<ClassicalLiteral>> parse_ground_literal_list(std::string_view source) {
    Parser p(source);
    return p.parse_literal_list_source();
}

SafetyResult check_safety(const Rule& rule) {
    std::set<std::string> all_vars;
    std::set<std::string> positive_vars;
    auto collect = [](const Atom& atom, std::set<std::string>& into) {
        for (const auto& t : atom.terms)
            if (t.is_variable()) into.insert(t.name());
    };
    for (const auto& l : rule.head) collect(l.atom, all_vars);
    for (const auto& l : rule.body) {
        collect(l.literal.atom, all_vars);
        if (!l.naf_negated) collect(l.literal.atom, positive_vars);
    }
    SafetyResult res;
    for (const auto& v : all_vars) {
        if (positive_vars.count(v) == 0) res.offending_variables.push_back(v);
    }
    res.safe = res.offending_variables.empty();
    return res;
}

std::string print_program(const Program& p) {
    return p.to_string();
}

Interpretation ScrambleMap::apply(const Interpretation& i) const {
    Interpretation out;
    for (const auto& lit : i) {
        ClassicalLiteral renamed = lit;
        auto it = predicate_renaming.find(lit.atom.predicate);
        if (it != predicate_renaming.end()) renamed.atom.predicate = it->second;
        out.insert(renamed);
    }
    return out;
}

Interpretation ScrambleMap::map_back(const Interpretation& i) const {
    std::map<std::string, std::string> inverse;
    for (const auto& [from, to] : predicate_renaming) inverse.emplace(to, from);
    Interpretation out;
    for (const auto& lit : i) {
        ClassicalLiteral renamed = lit;
        auto it = inverse.find(lit.atom.predicate);
        if (it != inverse.end()) renamed.atom.predicate = it->second;
        out.insert(renamed);
    }
    return out;
}

std::pair<Program, ScrambleMap> scramble(const Program& p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);

    ScrambleMap map;
    map.seed = seed;
    std::vector<std::string> originals;
    originals.reserve(p.predicate_signature.size());
    for (const auto& [name, arity] : p.predicate_signature) originals.push_back(name);
    std::vector<std::size_t> slot(originals.size());
    for (std::size_t i = 0; i < slot.size(); ++i) slot[i] = i;
    std::shuffle(slot.begin(), slot.end(), rng);
    for (std::size_t i = 0; i < originals.size(); ++i) {
        map.predicate_renaming[originals[i]] = "x" + std::to_string(slot[i] + 1);
    }

    Program out;
    for (const auto& [name, arity] : p.predicate_signature) {
        out.predicate_signature.emplace(map.predicate_renaming.at(name), arity);
    }

    for (const auto& rule : p.rules) {
        // variables renamed per rule, in first-occurrence order, shuffled
        std::vector<std::string> vars;
        auto note_vars = [&vars](const Atom& atom) {
            for (const auto& t : atom.terms) {
                if (t.is_variable() && std::find(vars.begin(), vars.end(), t.name()) == vars.end()) {
                    vars.push_back(t.name());
                }
            }
        };
        for (const auto& l : rule.head) note_vars(l.atom);
        for (const auto& l : rule.body) note_vars(l.literal.atom);
        std::vector<std::size_t> vslot(vars.size());
        for (std::size_t i = 0; i < vslot.size(); ++i) vslot[i] = i;
        std::shuffle(vslot.begin(), vslot.end(), rng);
        std::map<std::string, std::string> var_map;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            var_map[vars[i]] = "V" + std::to_string(vslot[i] + 1);
        }

        auto rename_atom = [&](const Atom& atom) {
            Atom a;
            a.predicate = map.predicate_renaming.at(atom.predicate);
            a.terms.reserve(atom.terms.size());
            for (const auto& t : atom.terms) {
                a.terms.push_back(t.is_variable() ? Term::variable(var_map.at(t.name())) : t);
            }
            return a;
        };

        Rule r;
        for (const auto& l : rule.head) r.head.push_back({rename_atom(l.atom), l.strongly_negated});
        for (const auto& l : rule.body)
            r.body.push_back({{rename_atom(l.literal.atom), l.literal.strongly_negated}, l.naf_negated});
        out.rules.push_back(std::move(r));
    }
    return {std::move(out), std::move(map)};
}

}  // namespace aspc
