/*
Copyright (c) 2026 The teamincl authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "teamincl/experiments.hpp"

#include <algorithm>
#include <map>

#include "teamincl/oracle.hpp"

namespace teamincl {

ArmstrongReport check_armstrong_gap() {
    std::vector<std::string> universe = {"p1", "p2", "p3"};
    Atom sigma = parse_atom("p1 <= p2");
    Atom first = parse_atom("p3 <= p2");
    Atom second = parse_atom("p2 <= p1");

    ArmstrongReport rep;
    for_each_team(universe, 4, [&](const Team& t) {
        ++rep.teams_checked;
        if (!satisfies(t, sigma)) return true;
        ++rep.sigma_satisfying;
        bool a = satisfies(t, first);
        bool b = satisfies(t, second);
        if (a && b) ++rep.both;
        else if (a) ++rep.first_only;
        else if (b) ++rep.second_only;
        else ++rep.neither;
        return true;
    });

    Problem q1;
    q1.dialect = Dialect::RepetitionFree;
    q1.assumptions = {sigma};
    q1.query = first;
    Problem q2 = q1;
    q2.query = second;
    // Keep p3 in the universe of the second check as well.
    q2.assumptions.push_back(parse_atom("p3 <= p3"));
    rep.oracle_refutes_first = !oracle_entails(q1);
    rep.oracle_refutes_second = !oracle_entails(q2);
    rep.gap_confirmed = rep.neither == 0 && rep.oracle_refutes_first && rep.oracle_refutes_second;
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

Sequence var_seq(const std::string& stem, size_t n) {
    Sequence s;
    for (size_t i = 1; i <= n; ++i) s.push_back(Symbol::var(stem + std::to_string(i)));
    return s;
}

}  // namespace

RuleStarInstance rule_star_instance(size_t n) {
    if (n < 1) throw PreconditionError("rule instance needs arity >= 1");
    Sequence p = var_seq("p", n);
    Sequence q = var_seq("q", n);
    RuleStarInstance inst;
    inst.conclusion = Atom(p, q);
    inst.premises.push_back(Atom(Sequence(n, Symbol::bot()), q));
    for (size_t i = 0; i < n; ++i) {
        Sequence r = p;
        r[i] = Symbol::top();
        inst.premises.push_back(Atom(std::move(r), q));
    }
    return inst;
}

namespace {

struct TeamBuilder {
    std::vector<std::string> universe;  // sorted
    std::vector<uint32_t> rows;

    explicit TeamBuilder(std::vector<std::string> u) : universe(std::move(u)) {
        std::sort(universe.begin(), universe.end());
    }

    void add_row(const std::map<std::string, bool>& values) {
        uint32_t row = 0;
        for (const auto& v : universe) row = (row << 1) | (values.at(v) ? 1u : 0u);
        rows.push_back(row);
    }

    Team team() const { return Team(universe, rows); }
};

std::map<std::string, bool> base_values(size_t n, size_t fresh, bool pval, bool rval) {
    std::map<std::string, bool> m;
    for (size_t i = 1; i <= n; ++i) {
        m["p" + std::to_string(i)] = pval;
        m["q" + std::to_string(i)] = false;
    }
    for (size_t i = 1; i <= fresh; ++i) m["r" + std::to_string(i)] = rval;
    return m;
}

void set_q(std::map<std::string, bool>& m, size_t n, uint32_t pattern) {
    for (size_t i = 1; i <= n; ++i)
        m["q" + std::to_string(i)] = (pattern >> (n - i)) & 1u;
}

}  // namespace

std::vector<std::pair<std::string, Team>> catalogue_teams(size_t n, size_t fresh) {
    if (n < 2) throw PreconditionError("catalogue teams need arity >= 2");
    std::vector<std::string> universe;
    for (size_t i = 1; i <= n; ++i) universe.push_back("p" + std::to_string(i));
    for (size_t i = 1; i <= n; ++i) universe.push_back("q" + std::to_string(i));
    for (size_t i = 1; i <= fresh; ++i) universe.push_back("r" + std::to_string(i));

    uint32_t all = (1u << n) - 1;
    std::vector<std::pair<std::string, Team>> out;

    auto two_row = [&](bool rval) {
        TeamBuilder tb(universe);
        auto m = base_values(n, fresh, true, rval);
        set_q(m, n, all);
        tb.add_row(m);
        set_q(m, n, 0);
        tb.add_row(m);
        return tb.team();
    };
    auto one_hot = [&](bool rval) {
        TeamBuilder tb(universe);
        auto m = base_values(n, fresh, false, rval);
        for (size_t i = 0; i < n; ++i) {
            set_q(m, n, 1u << i);
            tb.add_row(m);
        }
        set_q(m, n, 0);
        tb.add_row(m);
        return tb.team();
    };

    // Values of p and q alone decide the premises; the fresh columns are
    // constant per team.
    out.emplace_back("T1", two_row(false));
    out.emplace_back("T2", one_hot(false));
    if (fresh > 0) {
        out.emplace_back("r-const", one_hot(true));
        out.emplace_back("r-mixed-1", two_row(true));
        for (size_t k = 1; k <= fresh; ++k) {
            TeamBuilder tb(universe);
            auto m = base_values(n, fresh, true, true);
            m["r" + std::to_string(k)] = false;
            set_q(m, n, all);
            tb.add_row(m);
            set_q(m, n, 0);
            tb.add_row(m);
            out.emplace_back("r-mixed-0/" + std::to_string(k), tb.team());
        }
    }
    // One-hot p_j: q rows pair position j with every other position.
    for (size_t j = 0; j < n; ++j) {
        TeamBuilder tb(universe);
        auto m = base_values(n, fresh, false, false);
        m["p" + std::to_string(j + 1)] = true;
        for (size_t i = 0; i < n; ++i) {
            if (i == j) continue;
            set_q(m, n, (1u << (n - 1 - j)) | (1u << (n - 1 - i)));
            tb.add_row(m);
        }
        set_q(m, n, 1u << (n - 1 - j));
        tb.add_row(m);
        set_q(m, n, 0);
        tb.add_row(m);
        out.emplace_back("d" + std::to_string(j + 1), tb.team());
    }
    // p_j zero, rest one: q rows are all-one, all-one-except-j, all-zero.
    for (size_t j = 0; j < n; ++j) {
        TeamBuilder tb(universe);
        auto m = base_values(n, fresh, true, false);
        m["p" + std::to_string(j + 1)] = false;
        set_q(m, n, all);
        tb.add_row(m);
        set_q(m, n, all & ~(1u << (n - 1 - j)));
        tb.add_row(m);
        set_q(m, n, 0);
        tb.add_row(m);
        out.emplace_back("e" + std::to_string(j + 1), tb.team());
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

// Independence team for the all-Bot premise: p constant zero, q one-hot
// without the zero row, so Bot^n <= q and p <= q both fail.
Team independence_team_bot(size_t n) {
    std::vector<std::string> universe;
    for (size_t i = 1; i <= n; ++i) universe.push_back("p" + std::to_string(i));
    for (size_t i = 1; i <= n; ++i) universe.push_back("q" + std::to_string(i));
    TeamBuilder tb(universe);
    auto m = base_values(n, 0, false, false);
    for (size_t i = 0; i < n; ++i) {
        set_q(m, n, 1u << i);
        tb.add_row(m);
    }
    return tb.team();
}

// Independence team for the premise with Top at position i: p is the i-th
// unit vector, q ranges over the pairs {i, j} and the zero row, so the value
// e_i never appears on q.
Team independence_team_top(size_t n, size_t i) {
    std::vector<std::string> universe;
    for (size_t k = 1; k <= n; ++k) universe.push_back("p" + std::to_string(k));
    for (size_t k = 1; k <= n; ++k) universe.push_back("q" + std::to_string(k));
    TeamBuilder tb(universe);
    auto m = base_values(n, 0, false, false);
    m["p" + std::to_string(i + 1)] = true;
    for (size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        set_q(m, n, (1u << (n - 1 - i)) | (1u << (n - 1 - j)));
        tb.add_row(m);
    }
    set_q(m, n, 0);
    tb.add_row(m);
    return tb.team();
}

}  // namespace

NoKaryReport check_no_kary(size_t n) {
    if (n < 2 || n > 3) throw PreconditionError("premise-count check supports n in {2,3}");
    RuleStarInstance inst = rule_star_instance(n);
    NoKaryReport rep;
    rep.n = n;
    rep.premises = inst.premises;
    rep.conclusion = inst.conclusion;

    Problem base;
    base.dialect = Dialect::BooleanConstants;
    base.assumptions = inst.premises;
    base.query = inst.conclusion;

    Verdict v = decide(base);
    if (!v.entailed() || v.trace.steps.empty())
        throw Error("coverage rule instance did not derive its conclusion");
    const TraceStep& last = v.trace.steps.back();
    if (last.rule != Rule::B3) throw Error("conclusion not concluded by a coverage step");
    rep.concluding_premises = last.premises.size();

    // Claim 1: no premise follows from the others; neither does the
    // conclusion. Constructed teams witness it, and every proper subset of
    // the premises leaves the conclusion underivable.
    for (size_t bi = 0; bi < inst.premises.size(); ++bi) {
        IndependenceWitness w;
        w.dropped = inst.premises[bi];
        w.team = bi == 0 ? independence_team_bot(n) : independence_team_top(n, bi - 1);
        Problem sub = base;
        sub.assumptions.erase(sub.assumptions.begin() + bi);
        w.verified = satisfies_all(w.team, sub.assumptions) && !satisfies(w.team, w.dropped) &&
                     !satisfies(w.team, inst.conclusion);
        rep.independence.push_back(std::move(w));
    }
    rep.proper_subsets_all_refuted = true;
    for (uint32_t mask = 0; mask + 1 < (1u << inst.premises.size()); ++mask) {
        Problem sub = base;
        sub.assumptions.clear();
        for (size_t i = 0; i < inst.premises.size(); ++i)
            if ((mask >> i) & 1u) sub.assumptions.push_back(inst.premises[i]);
        // Keep the full variable universe in play for witness construction.
        if (decide(sub).entailed()) rep.proper_subsets_all_refuted = false;
    }

    // Claim 2 sweep.
    rep.allowed_consequences = inst.premises;
    rep.allowed_consequences.push_back(inst.conclusion);
    rep.allowed_consequences.push_back(Atom(inst.conclusion.rhs, inst.conclusion.rhs));

    std::vector<Symbol> symbols;
    for (size_t i = 1; i <= n; ++i) symbols.push_back(Symbol::var("p" + std::to_string(i)));
    for (size_t i = 1; i <= n; ++i) symbols.push_back(Symbol::var("q" + std::to_string(i)));
    symbols.push_back(Symbol::top());
    symbols.push_back(Symbol::bot());
    symbols.push_back(Symbol::var("r1"));

    auto catalogue = catalogue_teams(n, 1);
    for (const auto& [id, team] : catalogue)
        if (!satisfies_all(team, inst.premises))
            throw Error("catalogue team " + id + " fails the premise set");

    size_t count = 1;
    for (size_t i = 0; i < n; ++i) count *= symbols.size();
    rep.candidates_total = count;

    std::vector<size_t> digits(n, 0);
    for (size_t idx = 0; idx < count; ++idx) {
        size_t rem = idx;
        Sequence u(n, Symbol::top());
        for (size_t i = 0; i < n; ++i) {
            u[n - 1 - i] = symbols[rem % symbols.size()];
            rem /= symbols.size();
        }
        Atom cand(u, inst.conclusion.rhs);
        bool allowed = std::find(rep.allowed_consequences.begin(), rep.allowed_consequences.end(),
                                 cand) != rep.allowed_consequences.end();
        Problem prob = base;
        prob.query = cand;
        if (allowed) {
            if (!decide(prob).entailed())
                throw Error("allowed consequence not derivable: " + render_atom(cand));
            rep.entailed_allowed.push_back(cand);
            continue;
        }
        bool refuted = false;
        for (const auto& [id, team] : catalogue) {
            if (!satisfies(team, cand)) {
                SweepEntry e;
                e.candidate = cand;
                e.team_id = id;
                e.verified = verify_counterexample(prob, team);
                if (!e.verified) throw Error("catalogue refutation failed verification");
                rep.refutations.push_back(std::move(e));
                refuted = true;
                break;
            }
        }
        if (refuted) continue;
        Verdict cv = decide(prob);
        if (cv.entailed() && replay_trace(cv.trace, prob.assumptions, cand)) {
            rep.entailed_extra.push_back(cand);
            continue;
        }
        throw CatalogueGapError("no catalogue team covers candidate " + render_atom(cand));
    }
    return rep;
}

}  // namespace teamincl
