/*
Copyright (c) 2026 The teamincl authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "teamincl/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace teamincl {

std::string render_sequence(const Sequence& seq) {
    std::string out;
    for (size_t i = 0; i < seq.size(); ++i) {
        if (i) out += ' ';
        out += seq[i].text();
    }
    return out;
}

std::vector<std::string> sequence_vars(const Sequence& seq) {
    std::set<std::string> names;
    for (const auto& s : seq)
        if (s.is_var()) names.insert(s.name());
    return {names.begin(), names.end()};
}

bool sequence_has_const(const Sequence& seq) {
    return std::any_of(seq.begin(), seq.end(), [](const Symbol& s) { return s.is_const(); });
}

bool sequence_repetition_free(const Sequence& seq) {
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] == seq[j]) return false;
    return true;
}

std::string render_atom(const Atom& a) {
    return render_sequence(a.lhs) + " <= " + render_sequence(a.rhs);
}

const char* dialect_name(Dialect d) {
    switch (d) {
        case Dialect::RepetitionFree: return "repetition-free";
        case Dialect::WithRepetitions: return "repetitions";
        case Dialect::BooleanConstants: return "boolean-constants";
    }
    return "?";
}

bool is_repetition_free(const Atom& a) {
    if (sequence_has_const(a.lhs) || sequence_has_const(a.rhs)) return false;
    return sequence_repetition_free(a.lhs) && sequence_repetition_free(a.rhs);
}

bool atom_valid_for(Dialect d, const Atom& a) {
    switch (d) {
        case Dialect::RepetitionFree:
            return is_repetition_free(a);
        case Dialect::WithRepetitions:
            return !sequence_has_const(a.lhs) && !sequence_has_const(a.rhs);
        case Dialect::BooleanConstants:
            return true;
    }
    return false;
}

std::vector<std::string> Problem::variables() const {
    std::set<std::string> names;
    auto add = [&](const Sequence& seq) {
        for (const auto& s : seq)
            if (s.is_var()) names.insert(s.name());
    };
    for (const auto& a : assumptions) {
        add(a.lhs);
        add(a.rhs);
    }
    add(query.lhs);
    add(query.rhs);
    return {names.begin(), names.end()};
}

void Problem::validate() const {
    for (const auto& a : assumptions)
        if (!atom_valid_for(dialect, a))
            throw DialectError("atom '" + render_atom(a) + "' is not valid in dialect " +
                               dialect_name(dialect));
    if (!atom_valid_for(dialect, query))
        throw DialectError("atom '" + render_atom(query) + "' is not valid in dialect " +
                           dialect_name(dialect));
}

// ---------------------------------------------------------------------------
// Problem-file parsing. Line oriented:
//   dialect: repetition-free | repetitions | boolean-constants
//   assume: <seq> <= <seq>
//   query:  <seq> <= <seq>
// A '#' at the start of a line begins a comment; blank lines are skipped.
// ---------------------------------------------------------------------------

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;
    int line;

    explicit Cursor(const std::string& t, int line) : text(t), line(line) {}

    int col() const { return static_cast<int>(pos) + 1; }
    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void skip_ws() {
        while (!done() && (peek() == ' ' || peek() == '\t')) ++pos;
    }
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

Symbol lex_symbol(Cursor& cur) {
    if (cur.peek() == '#') {
        if (cur.pos + 1 < cur.text.size()) {
            char c = cur.text[cur.pos + 1];
            if (c == 'T' || c == 'F') {
                cur.pos += 2;
                return c == 'T' ? Symbol::top() : Symbol::bot();
            }
        }
        throw ParseError("expected #T or #F", cur.line, cur.col());
    }
    if (!ident_start(cur.peek()))
        throw ParseError(std::string("unexpected character '") + cur.peek() + "'", cur.line, cur.col());
    size_t start = cur.pos;
    while (!cur.done() && ident_char(cur.peek())) ++cur.pos;
    return Symbol::var(cur.text.substr(start, cur.pos - start));
}

Sequence lex_sequence(Cursor& cur) {
    Sequence seq;
    cur.skip_ws();
    while (!cur.done() && cur.peek() != '<') {
        seq.push_back(lex_symbol(cur));
        cur.skip_ws();
    }
    if (seq.empty())
        throw ParseError("expected a nonempty symbol sequence", cur.line, cur.col());
    return seq;
}

Atom lex_atom(Cursor& cur, int line) {
    Sequence lhs = lex_sequence(cur);
    if (cur.done() || cur.peek() != '<' || cur.pos + 1 >= cur.text.size() || cur.text[cur.pos + 1] != '=')
        throw ParseError("expected '<='", cur.line, cur.col());
    cur.pos += 2;
    Sequence rhs = lex_sequence(cur);
    cur.skip_ws();
    if (!cur.done())
        throw ParseError("trailing input after atom", cur.line, cur.col());
    if (lhs.size() != rhs.size())
        throw ArityError("line " + std::to_string(line) + ": sides have lengths " +
                         std::to_string(lhs.size()) + " and " + std::to_string(rhs.size()));
    Atom a;
    a.lhs = std::move(lhs);
    a.rhs = std::move(rhs);
    return a;
}

}  // namespace

Atom parse_atom(const std::string& text) {
    Cursor cur(text, 1);
    return lex_atom(cur, 1);
}

Problem parse_problem(const std::string& text) {
    Problem p;
    bool saw_dialect = false;
    bool saw_query = false;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        Cursor cur(raw, lineno);
        cur.skip_ws();
        if (cur.done() || cur.peek() == '#') continue;  // blank or comment

        auto take_keyword = [&](const char* kw) {
            size_t n = std::string(kw).size();
            if (raw.compare(cur.pos, n, kw) == 0) {
                cur.pos += n;
                return true;
            }
            return false;
        };

        if (take_keyword("dialect:")) {
            if (saw_dialect)
                throw ParseError("duplicate dialect line", lineno, cur.col());
            saw_dialect = true;
            cur.skip_ws();
            std::string rest = raw.substr(cur.pos);
            while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t')) rest.pop_back();
            if (rest == "repetition-free")
                p.dialect = Dialect::RepetitionFree;
            else if (rest == "repetitions")
                p.dialect = Dialect::WithRepetitions;
            else if (rest == "boolean-constants")
                p.dialect = Dialect::BooleanConstants;
            else
                throw ParseError("unknown dialect '" + rest + "'", lineno, cur.col());
        } else if (take_keyword("assume:")) {
            p.assumptions.push_back(lex_atom(cur, lineno));
        } else if (take_keyword("query:")) {
            if (saw_query)
                throw DuplicateQueryError("line " + std::to_string(lineno) + ": second query line");
            saw_query = true;
            p.query = lex_atom(cur, lineno);
        } else {
            throw ParseError("expected 'dialect:', 'assume:' or 'query:'", lineno, cur.col());
        }
    }
    if (!saw_query) throw MissingQueryError("problem file has no query line");
    p.validate();
    return p;
}

std::string render_problem(const Problem& p) {
    std::string out = "dialect: " + std::string(dialect_name(p.dialect)) + "\n";
    for (const auto& a : p.assumptions) out += "assume: " + render_atom(a) + "\n";
    out += "query: " + render_atom(p.query) + "\n";
    return out;
}

}  // namespace teamincl
