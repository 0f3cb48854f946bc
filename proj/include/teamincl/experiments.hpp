/*
Copyright (c) 2026 The teamincl authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <string>
#include <vector>

#include "teamincl/calculus.hpp"
#include "teamincl/decide.hpp"
#include "teamincl/semantics.hpp"

namespace teamincl {

// ---------------------------------------------------------------------------
// Armstrong-relation gap: over {p1,p2,p3} with the single assumption
// p1 <= p2, every satisfying team also satisfies p3 <= p2 or p2 <= p1, yet
// neither is entailed. No team can then satisfy exactly the entailed atoms.
// ---------------------------------------------------------------------------

struct ArmstrongReport {
    size_t teams_checked = 0;
    size_t sigma_satisfying = 0;
    size_t first_only = 0;   // satisfy p3 <= p2 but not p2 <= p1
    size_t second_only = 0;  // satisfy p2 <= p1 but not p3 <= p2
    size_t both = 0;
    size_t neither = 0;      // must stay 0
    bool oracle_refutes_first = false;
    bool oracle_refutes_second = false;
    bool gap_confirmed = false;
};

ArmstrongReport check_armstrong_gap();

// ---------------------------------------------------------------------------
// The coverage rule with n+1 premises: from Bot^n <= q and, for each i, the
// premise that replaces p_i by Top, conclude p <= q.
// ---------------------------------------------------------------------------

struct RuleStarInstance {
    std::vector<Atom> premises;  // n+1 atoms, all with rhs q
    Atom conclusion;             // p <= q
};

RuleStarInstance rule_star_instance(size_t n);

// Parameterized refutation teams over p1..pn, q1..qn and `fresh` extra
// variables r1..; every catalogue team satisfies the full premise set.
std::vector<std::pair<std::string, Team>> catalogue_teams(size_t n, size_t fresh = 1);

// ---------------------------------------------------------------------------
// Tightness of the premise count, checked at small n:
//   (1) dropping any premise loses both that premise and the conclusion;
//   (2) sweeping every candidate u <= q over the problem's symbols plus one
//       fresh variable, each candidate is an assumption, trivial, the
//       conclusion, refuted by a catalogue team, or — at n = 2 only — one of
//       the duplicated-lhs consequences that genuinely follow.
// ---------------------------------------------------------------------------

struct IndependenceWitness {
    Atom dropped;
    Team team;      // satisfies the remaining premises, refutes the dropped one
    bool verified;  // and refutes the conclusion
};

struct SweepEntry {
    Atom candidate;
    std::string team_id;  // empty for entailed candidates
    bool verified;
};

struct NoKaryReport {
    size_t n = 0;
    std::vector<Atom> premises;
    Atom conclusion;
    size_t concluding_premises = 0;  // premise count of the final coverage step
    std::vector<IndependenceWitness> independence;
    bool proper_subsets_all_refuted = false;
    std::vector<Atom> allowed_consequences;  // premises + conclusion + trivial
    std::vector<SweepEntry> refutations;
    std::vector<Atom> entailed_allowed;
    std::vector<Atom> entailed_extra;        // entailed beyond the allowed set
    size_t candidates_total = 0;
};

// Throws CatalogueGapError when a candidate is neither refutable by the
// catalogue nor derivable.
NoKaryReport check_no_kary(size_t n);

}  // namespace teamincl
