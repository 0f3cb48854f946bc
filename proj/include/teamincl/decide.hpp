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
#include "teamincl/witness.hpp"

namespace teamincl {

enum class VerdictKind : uint8_t { Entailed, NotEntailed };

// Entailed verdicts carry a trace that replays from the problem's assumptions
// to the query. NotEntailed verdicts carry the witness plan and, when the
// variable universe is small enough to materialize, a team that satisfies
// every assumption and refutes the query (verified before returning).
struct Verdict {
    VerdictKind kind;
    DerivationTrace trace;
    WitnessPlan plan;
    std::optional<Team> witness;

    bool entailed() const { return kind == VerdictKind::Entailed; }
};

struct DecideOptions {
    SaturateLimits limits{};
    size_t materialize_vars = 16;  // witness teams above this stay in plan form
};

Verdict decide(const Problem& p, const DecideOptions& opts = {});

// ---------------------------------------------------------------------------
// Reachability fast path. States are sequences of the query's arity; an
// assumption u <= v rewrites a state s to v∘f for any position map f with
// s = u∘f. The map may repeat positions (duplication) and drop them
// (projection). In the Boolean dialect every normalized atom and the query
// are padded with a trailing Top Bot on both sides first, so constants can
// take part in positional matching.
// ---------------------------------------------------------------------------

struct SequenceMap {
    std::vector<size_t> src;  // target position i takes source position src[i]

    Sequence apply(const Sequence& source) const {
        Sequence out;
        out.reserve(src.size());
        for (size_t i : src) out.push_back(source[i]);
        return out;
    }
};

bool reach_entails(const Problem& p, size_t state_cap = 1'000'000);

// Derivable lhs sequences for a fixed rhs of the query's arity, over the
// problem's saturation universe.
std::vector<Sequence> derivable_set(const Problem& p, const Sequence& rhs,
                                    SaturateLimits limits = {});

}  // namespace teamincl
