/*
Copyright (c) 2026 The teamincl authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "teamincl/semantics.hpp"
#include "teamincl/syntax.hpp"

namespace teamincl {

// ---------------------------------------------------------------------------
// Equality classes. A disjoint-set partition over the symbols of a problem
// (variables plus the constants). Two symbols land in one class when every
// team satisfying the assumptions must give them equal values. The partition
// is contradictory when Top and Bot collapse into one class.
//
// Representatives prefer constants over variables and otherwise take the
// lexicographically least variable name.
// ---------------------------------------------------------------------------

class EqualityClasses {
public:
    EqualityClasses();

    void add(const Symbol& s);
    void merge(const Symbol& a, const Symbol& b);
    bool same(const Symbol& a, const Symbol& b) const;
    bool contains(const Symbol& s) const;
    Symbol representative(const Symbol& s) const;  // s itself when unknown
    bool contradiction() const;

    // Nontrivial classes (size >= 2), members sorted, classes sorted by rep.
    std::vector<std::vector<Symbol>> nontrivial_classes() const;

private:
    int index_of(const Symbol& s) const;  // -1 when absent
    int find(int i) const;

    std::vector<Symbol> symbols_;
    std::map<Symbol, int> index_;
    mutable std::vector<int> parent_;
};

// Least fixed point of the equality scan over the assumptions:
//   - a constant at rhs position i merges with the lhs symbol at i;
//   - two rhs positions whose symbols already share a class merge the
//     corresponding lhs symbols.
EqualityClasses derivable_equalities(const std::vector<Atom>& assumptions);

// ---------------------------------------------------------------------------
// Rules and rule steps
// ---------------------------------------------------------------------------

enum class Rule : uint8_t { I1, I2, I3, I4, I5, I6, B1, B2, B3 };

const char* rule_name(Rule r);

struct I3Detail { size_t prefix; size_t block; };  // leading block, first swapped block
struct I4Detail { size_t prefix; };                // kept prefix length
struct I5Detail { size_t suffix; };                // duplicated suffix length
struct I6Detail { size_t rhs_pos; };               // substituted rhs position
struct B2Detail { bool top; };                     // appended constant

using StepDetail = std::variant<std::monostate, I3Detail, I4Detail, I5Detail, I6Detail, B2Detail>;

struct RuleStep {
    Rule rule;
    std::vector<Atom> premises;
    Atom conclusion;
    StepDetail detail;
};

// True iff the step is exactly what its rule yields from the premises with
// the given detail. For B3 the premises must be a covering candidate set for
// the conclusion; minimality is not required.
bool validate_step(const RuleStep& s);

// ---------------------------------------------------------------------------
// Derivation traces. Premises refer to assumptions (by index) or to earlier
// steps. A trace replays when every step validates in order and the last
// conclusion equals the target.
// ---------------------------------------------------------------------------

struct PremiseRef {
    bool is_assumption;
    size_t index;
};

struct TraceStep {
    Rule rule;
    std::vector<PremiseRef> premises;
    Atom conclusion;
    StepDetail detail;
};

struct DerivationTrace {
    std::vector<TraceStep> steps;
};

bool replay_trace(const DerivationTrace& trace, const std::vector<Atom>& assumptions,
                  const Atom& target);

// One step per line: "<idx>: <rule> [<premise refs>] |- <atom>"; premise refs
// are step indices or A#k for assumptions; B3 steps render their covering set
// inline.
std::string serialize_trace(const DerivationTrace& trace, const std::vector<Atom>& assumptions);

// ---------------------------------------------------------------------------
// Normal forms
// ---------------------------------------------------------------------------

struct Decomposition {
    Atom core;                    // no repeated symbol on the rhs
    std::vector<Atom> equalities; // arity-2 atoms  u_i u_j <= y y
};

// Split an atom into a core whose rhs keeps the first occurrence of each
// symbol, plus one equality obligation per duplicate rhs position. The core
// together with the equalities is inter-derivable with the input.
Decomposition decompose_rhs_repetitions(const Atom& a);

struct NormalizedProblem {
    Problem problem;                    // symbols rewritten, rhs repetition-free
    EqualityClasses classes;
    std::vector<Atom> query_equalities; // obligations split off the query whose
                                        // two lhs symbols are in distinct classes
};

NormalizedProblem normalize(const Problem& p);

// ---------------------------------------------------------------------------
// Consistency and B3 coverage
// ---------------------------------------------------------------------------

// For an atom with an all-constant lhs: constants on the rhs must match the
// lhs positionally, and repeated rhs symbols must carry equal lhs constants.
bool consistent(const Atom& a);

// consistent() on a constant tuple against a sequence, without building the
// constant atom.
bool consistent_bits(const BitTuple& x, const Sequence& rhs);

Sequence tuple_to_constants(const BitTuple& x);

struct CoverageResult {
    bool covered;
    std::optional<Sequence> uncovered;  // lexicographically least, Bot < Top
};

// Whether every all-constant tuple consistent with target.lhs is consistent
// with some candidate lhs. Candidates must share the target rhs and draw each
// position from {target.lhs[i], Top, Bot}.
CoverageResult b3_coverage(const std::vector<Atom>& candidates, const Atom& target);

}  // namespace teamincl
