/*
Copyright (c) 2026 The teamincl authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "teamincl/decide.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace teamincl {

Verdict decide(const Problem& p, const DecideOptions& opts) {
    p.validate();

    if (is_trivial(p.query)) {
        Verdict v;
        v.kind = VerdictKind::Entailed;
        TraceStep step;
        step.rule = Rule::I1;
        step.conclusion = p.query;
        v.trace.steps.push_back(step);
        return v;
    }

    size_t bound = saturation_bound(p);
    auto engine = std::make_shared<SaturationEngine>(p.dialect, saturation_symbols(p), bound,
                                                     opts.limits);
    for (size_t i = 0; i < p.assumptions.size(); ++i) engine->add_assumption(p.assumptions[i], i);
    AtomId qid = *engine->atom_id(p.query);
    engine->run(qid);

    if (engine->derived(qid)) {
        Verdict v;
        v.kind = VerdictKind::Entailed;
        v.trace = engine->trace(qid);
        return v;
    }

    SaturationResult sat(engine, p.assumptions);
    Verdict v;
    v.kind = VerdictKind::NotEntailed;
    v.plan = witness_plan(p, sat);

    if (p.variables().size() > opts.materialize_vars) {
        // Too large to materialize: emit the plan with the stated tuple choice.
        if (!v.plan.stop_branch) {
            auto cands = forbidden_tuple_candidates(p, v.plan);
            if (!cands.empty()) v.plan.forbidden_tuple = cands.front();
        }
        return v;
    }

    if (v.plan.stop_branch) {
        Team t = build_counterexample(p, v.plan);
        if (!verify_counterexample(p, t))
            throw WitnessVerificationError("class-respecting team failed verification for '" +
                                           render_atom(p.query) + "'");
        v.witness = std::move(t);
        return v;
    }

    // Try forbidden tuples until the built team verifies. The stated choice
    // comes first; later candidates only matter when a derivable lhs over the
    // query's own variables aliases the preferred tuple.
    for (const BitTuple& c : forbidden_tuple_candidates(p, v.plan)) {
        v.plan.forbidden_tuple = c;
        Team t = build_counterexample(p, v.plan);
        if (verify_counterexample(p, t)) {
            v.witness = std::move(t);
            return v;
        }
    }
    throw WitnessVerificationError("no forbidden tuple yields a verified counterexample for '" +
                                   render_atom(p.query) + "'");
}

// ---------------------------------------------------------------------------
// Reachability
// ---------------------------------------------------------------------------

namespace {

Sequence pad_top_bot(const Sequence& s) {
    Sequence out = s;
    out.push_back(Symbol::top());
    out.push_back(Symbol::bot());
    return out;
}

// All states v∘f over maps f with state = u∘f, appended to `out`.
void matches_into(const Sequence& state, const Atom& rule, std::set<Sequence>& out) {
    size_t n = state.size();
    std::vector<std::vector<size_t>> occ(n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < rule.lhs.size(); ++j)
            if (rule.lhs[j] == state[i]) occ[i].push_back(j);
        if (occ[i].empty()) return;
    }
    SequenceMap f;
    f.src.assign(n, 0);
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == n) {
            out.insert(f.apply(rule.rhs));
            return;
        }
        for (size_t j : occ[i]) {
            f.src[i] = j;
            rec(i + 1);
        }
    };
    rec(0);
}

}  // namespace

bool reach_entails(const Problem& p, size_t state_cap) {
    p.validate();
    NormalizedProblem norm = normalize(p);
    if (norm.classes.contradiction()) return true;
    // Equality obligations split off the query must already hold; with both
    // symbols in distinct classes the query cannot follow.
    if (!norm.query_equalities.empty()) return false;

    bool boolean = p.dialect == Dialect::BooleanConstants;
    std::vector<Atom> rules;
    for (const auto& a : norm.problem.assumptions)
        rules.push_back(boolean ? Atom(pad_top_bot(a.lhs), pad_top_bot(a.rhs)) : a);
    Sequence start = norm.problem.query.lhs;
    Sequence goal = norm.problem.query.rhs;
    if (boolean) {
        start = pad_top_bot(start);
        goal = pad_top_bot(goal);
    }
    if (start == goal) return true;

    std::set<Sequence> visited{start};
    std::deque<Sequence> queue{start};
    while (!queue.empty()) {
        Sequence s = std::move(queue.front());
        queue.pop_front();
        std::set<Sequence> next;
        for (const auto& r : rules) matches_into(s, r, next);
        for (auto& t : next) {
            if (t == goal) return true;
            if (visited.insert(t).second) {
                if (visited.size() > state_cap)
                    throw CapExceededError("reachability state budget exceeded");
                queue.push_back(t);
            }
        }
    }
    return false;
}

std::vector<Sequence> derivable_set(const Problem& p, const Sequence& rhs, SaturateLimits limits) {
    if (rhs.size() != p.query.arity())
        throw PreconditionError("derivable_set rhs arity differs from the query arity");
    SaturationResult sat = saturate(p, saturation_bound(p), limits);
    std::vector<Sequence> out;
    for (const auto& a : sat.derived_atoms_with_rhs(rhs)) out.push_back(a.lhs);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace teamincl
