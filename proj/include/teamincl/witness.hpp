/*
Copyright (c) 2026 The teamincl authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <optional>
#include <vector>

#include "teamincl/calculus.hpp"
#include "teamincl/saturate.hpp"
#include "teamincl/semantics.hpp"

namespace teamincl {

// ---------------------------------------------------------------------------
// Counterexample teams. When the query is not derivable, the refuting team
// consists of every assignment over the problem's variables that
//   (1) respects the derivable-equality classes, and, unless the stop branch
//       applies,
//   (2) evaluates no derivable lhs of the query rhs to the forbidden tuple.
// The stop branch applies when two query rhs positions are forced equal while
// the matching lhs positions are not; the class-respecting team alone then
// refutes the query.
// ---------------------------------------------------------------------------

struct WitnessPlan {
    EqualityClasses classes;
    std::optional<BitTuple> forbidden_tuple;  // absent on the stop branch
    std::vector<Sequence> forbidden_sequences;
    bool stop_branch = false;
};

// The forbidden tuple for the Boolean dialect: the evaluation of the least
// all-constant tuple consistent with the query lhs that is inconsistent with
// every derivable positional candidate (entries from {p_i, Top, Bot}).
// Throws CoverageCompleteError when every consistent tuple is covered.
BitTuple choose_c(const Problem& p, const std::vector<Sequence>& derivables);

// Materializes the plan's team over exactly the problem's variables.
// Refuses universes above 16 variables.
Team build_counterexample(const Problem& p, const WitnessPlan& plan);

// The team satisfies every assumption and refutes the query.
bool verify_counterexample(const Problem& p, const Team& t);

// Plan construction from a finished saturation (query not derived): classes
// come from the derived pair atoms, the forbidden set from the derived atoms
// with the query's rhs.
WitnessPlan witness_plan(const Problem& p, const SaturationResult& sat);

// All candidate forbidden tuples, most preferred first: the stated choice
// (all-zero, or choose_c in the Boolean dialect), then every remaining tuple
// in ascending order. The construction tries them until one verifies.
std::vector<BitTuple> forbidden_tuple_candidates(const Problem& p, const WitnessPlan& plan);

std::string serialize_plan_constraints(const WitnessPlan& plan);

}  // namespace teamincl
