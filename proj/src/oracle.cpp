/*
Copyright (c) 2026 The teamincl authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "teamincl/oracle.hpp"

#include <sstream>

namespace teamincl {

OracleReport oracle_report(const Problem& p, size_t cap) {
    p.validate();
    std::vector<std::string> universe = p.variables();
    if (universe.size() > cap)
        throw CapExceededError("oracle over " + std::to_string(universe.size()) +
                               " variables exceeds cap " + std::to_string(cap));
    OracleReport rep;
    rep.entailed = true;
    uint64_t index = 0;
    for_each_team(universe, cap, [&](const Team& t) {
        if (satisfies_all(t, p.assumptions) && !satisfies(t, p.query)) {
            rep.entailed = false;
            rep.separating_index = index;
            rep.separating_team = t;
            return false;
        }
        ++index;
        return true;
    });
    return rep;
}

bool oracle_entails(const Problem& p, size_t cap) { return oracle_report(p, cap).entailed; }

CnfFormula parse_dimacs(const std::string& text) {
    CnfFormula f;
    std::istringstream in(text);
    std::string line;
    int declared_clauses = -1;
    bool saw_header = false;
    std::vector<int> pending;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c" || tok[0] == 'c') continue;
        if (tok == "p") {
            std::string kind;
            if (!(ls >> kind >> f.num_vars >> declared_clauses) || kind != "cnf")
                throw ParseError("malformed DIMACS header", lineno, 1);
            saw_header = true;
            continue;
        }
        if (!saw_header) throw ParseError("clause before DIMACS header", lineno, 1);
        ls.clear();
        ls.str(line);
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (pending.size() != 3)
                    throw ParseError("clause with " + std::to_string(pending.size()) +
                                         " literals; exactly 3 required",
                                     lineno, 1);
                std::array<Literal, 3> cl;
                for (int i = 0; i < 3; ++i) {
                    int v = pending[i];
                    if (v == 0 || std::abs(v) > f.num_vars)
                        throw ParseError("literal out of range", lineno, 1);
                    cl[i] = Literal{std::abs(v), v < 0};
                }
                f.clauses.push_back(cl);
                pending.clear();
            } else {
                pending.push_back(lit);
            }
        }
    }
    if (!saw_header) throw ParseError("missing DIMACS header", 1, 1);
    if (!pending.empty()) throw ParseError("unterminated clause", lineno, 1);
    if (declared_clauses >= 0 && static_cast<size_t>(declared_clauses) != f.clauses.size())
        throw ParseError("clause count differs from header", lineno, 1);
    return f;
}

bool sat_bruteforce(const CnfFormula& f, size_t var_cap) {
    if (static_cast<size_t>(f.num_vars) > var_cap)
        throw CapExceededError("sat search over " + std::to_string(f.num_vars) + " variables");
    uint64_t total = 1ull << f.num_vars;
    for (uint64_t bits = 0; bits < total; ++bits) {
        bool ok = true;
        for (const auto& cl : f.clauses) {
            bool sat = false;
            for (const auto& lit : cl) {
                bool v = (bits >> (lit.var - 1)) & 1ull;
                if (v != lit.negated) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

Reduction reduce_3sat(const CnfFormula& f) {
    if (f.clauses.empty()) throw PreconditionError("reduction needs at least one clause");
    size_t n = 3 * f.clauses.size();
    Sequence p, r;
    for (size_t i = 0; i < f.clauses.size(); ++i)
        for (int j = 0; j < 3; ++j)
            p.push_back(Symbol::var("p" + std::to_string(f.clauses[i][j].var)));
    for (size_t i = 1; i <= n; ++i) r.push_back(Symbol::var("r" + std::to_string(i)));

    Reduction red;
    red.target = Atom(p, r);
    for (size_t i = 0; i < f.clauses.size(); ++i) {
        Sequence b = p;
        for (int j = 0; j < 3; ++j)
            b[3 * i + j] = f.clauses[i][j].negated ? Symbol::top() : Symbol::bot();
        red.candidates.push_back(Atom(std::move(b), r));
    }
    return red;
}

}  // namespace teamincl
