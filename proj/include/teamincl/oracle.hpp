/*
Copyright (c) 2026 The teamincl authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "teamincl/semantics.hpp"
#include "teamincl/syntax.hpp"

namespace teamincl {

// ---------------------------------------------------------------------------
// Semantic ground truth by exhaustive team enumeration.
// ---------------------------------------------------------------------------

struct OracleReport {
    bool entailed;
    // Enumeration index and team of the first separating team, when any.
    std::optional<uint64_t> separating_index;
    std::optional<Team> separating_team;
};

OracleReport oracle_report(const Problem& p, size_t cap = 4);
bool oracle_entails(const Problem& p, size_t cap = 4);

// ---------------------------------------------------------------------------
// 3-CNF formulas and the candidate-coverage reduction.
// ---------------------------------------------------------------------------

struct Literal {
    int var;       // 1-based
    bool negated;
};

struct CnfFormula {
    int num_vars = 0;
    std::vector<std::array<Literal, 3>> clauses;
};

// Standard DIMACS cnf input; clauses must have exactly three literals.
CnfFormula parse_dimacs(const std::string& text);

bool sat_bruteforce(const CnfFormula& f, size_t var_cap = 24);

struct Reduction {
    std::vector<Atom> candidates;  // the set A, one atom per clause
    Atom target;                   // p <= r over fresh rhs symbols
};

// Maps a formula to a coverage instance: the target lhs strings the clause
// literals' variables in order; each candidate replaces one clause block by
// the block of constants that falsifies it (Bot for a positive literal, Top
// for a negated one) and keeps the target lhs elsewhere. Coverage of the
// candidate set then says exactly that every assignment falsifies some
// clause.
Reduction reduce_3sat(const CnfFormula& f);

}  // namespace teamincl
