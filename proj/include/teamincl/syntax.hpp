/*
Copyright (c) 2026 The teamincl authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace teamincl {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, int line, int col)
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          line(line), col(col) {}
    int line;
    int col;
};

struct ArityError : Error { using Error::Error; };
struct DialectError : Error { using Error::Error; };
struct MissingQueryError : Error { using Error::Error; };
struct DuplicateQueryError : Error { using Error::Error; };
struct UnknownVariableError : Error { using Error::Error; };
struct PreconditionError : Error { using Error::Error; };
struct CapExceededError : Error { using Error::Error; };
struct WitnessVerificationError : Error { using Error::Error; };
struct CoverageCompleteError : Error { using Error::Error; };
struct CatalogueGapError : Error { using Error::Error; };

// ---------------------------------------------------------------------------
// Symbols and sequences
// ---------------------------------------------------------------------------

enum class SymbolKind : uint8_t { Var, Top, Bot };

// A sequence entry: a propositional variable or one of the constants.
// Top always evaluates to 1 and Bot to 0 under every assignment.
class Symbol {
public:
    Symbol() : kind_(SymbolKind::Bot) {}

    static Symbol var(std::string name) {
        Symbol s;
        s.kind_ = SymbolKind::Var;
        s.name_ = std::move(name);
        return s;
    }
    static Symbol top() { Symbol s; s.kind_ = SymbolKind::Top; return s; }
    static Symbol bot() { Symbol s; s.kind_ = SymbolKind::Bot; return s; }

    SymbolKind kind() const { return kind_; }
    bool is_var() const { return kind_ == SymbolKind::Var; }
    bool is_const() const { return kind_ != SymbolKind::Var; }
    // Fixed truth value; only meaningful for constants.
    bool const_value() const { return kind_ == SymbolKind::Top; }
    const std::string& name() const { return name_; }

    std::string text() const {
        switch (kind_) {
            case SymbolKind::Var: return name_;
            case SymbolKind::Top: return "#T";
            case SymbolKind::Bot: return "#F";
        }
        return "";
    }

    bool operator==(const Symbol& o) const { return kind_ == o.kind_ && name_ == o.name_; }
    bool operator!=(const Symbol& o) const { return !(*this == o); }
    // Constants order before variables, Bot before Top; variables by name.
    bool operator<(const Symbol& o) const {
        if (kind_ != o.kind_) return rank() < o.rank();
        return name_ < o.name_;
    }

private:
    int rank() const {
        switch (kind_) {
            case SymbolKind::Bot: return 0;
            case SymbolKind::Top: return 1;
            case SymbolKind::Var: return 2;
        }
        return 3;
    }

    SymbolKind kind_;
    std::string name_;
};

using Sequence = std::vector<Symbol>;

std::string render_sequence(const Sequence& seq);
std::vector<std::string> sequence_vars(const Sequence& seq);
bool sequence_has_const(const Sequence& seq);
bool sequence_repetition_free(const Sequence& seq);

// ---------------------------------------------------------------------------
// Atoms
// ---------------------------------------------------------------------------

// lhs included-in rhs; both sides always have equal length (the arity).
struct Atom {
    Sequence lhs;
    Sequence rhs;

    Atom() = default;
    Atom(Sequence l, Sequence r) : lhs(std::move(l)), rhs(std::move(r)) {
        if (lhs.size() != rhs.size())
            throw ArityError("atom sides have lengths " + std::to_string(lhs.size()) +
                             " and " + std::to_string(rhs.size()));
    }

    size_t arity() const { return lhs.size(); }

    bool operator==(const Atom& o) const { return lhs == o.lhs && rhs == o.rhs; }
    bool operator!=(const Atom& o) const { return !(*this == o); }
    bool operator<(const Atom& o) const {
        if (lhs != o.lhs) return std::lexicographical_compare(lhs.begin(), lhs.end(), o.lhs.begin(), o.lhs.end());
        return std::lexicographical_compare(rhs.begin(), rhs.end(), o.rhs.begin(), o.rhs.end());
    }
};

std::string render_atom(const Atom& a);
Atom parse_atom(const std::string& text);  // convenience, same grammar as problem files

// ---------------------------------------------------------------------------
// Dialects and problems
// ---------------------------------------------------------------------------

enum class Dialect : uint8_t { RepetitionFree, WithRepetitions, BooleanConstants };

const char* dialect_name(Dialect d);

bool atom_valid_for(Dialect d, const Atom& a);

// True when no symbol repeats within lhs, none within rhs, and no constants
// occur on either side.
bool is_repetition_free(const Atom& a);

struct Problem {
    Dialect dialect = Dialect::BooleanConstants;
    std::vector<Atom> assumptions;
    Atom query;

    // Union of variable names over all atoms, sorted.
    std::vector<std::string> variables() const;
    void validate() const;  // throws DialectError on an atom outside the dialect
};

Problem parse_problem(const std::string& text);
std::string render_problem(const Problem& p);

}  // namespace teamincl

template <>
struct std::hash<teamincl::Symbol> {
    size_t operator()(const teamincl::Symbol& s) const {
        return std::hash<std::string>()(s.text());
    }
};
