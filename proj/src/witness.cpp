/*
Copyright (c) 2026 The teamincl authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "teamincl/witness.hpp"

#include <algorithm>

namespace teamincl {

BitTuple choose_c(const Problem& p, const std::vector<Sequence>& derivables) {
    const Sequence& lhs = p.query.lhs;
    size_t n = lhs.size();
    if (n > 24) throw CapExceededError("forbidden-tuple search over arity " + std::to_string(n));

    // Positional candidates: derivable lhs sequences drawing each entry from
    // {p_i, Top, Bot}.
    std::vector<const Sequence*> positional;
    for (const auto& w : derivables) {
        if (w.size() != n) continue;
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i)
            if (w[i] != lhs[i] && !w[i].is_const()) ok = false;
        if (ok) positional.push_back(&w);
    }

    std::optional<BitTuple> first_consistent;
    for (uint32_t bits = 0; bits < (1u << n); ++bits) {
        BitTuple x(bits, static_cast<uint8_t>(n));
        if (!consistent_bits(x, lhs)) continue;
        if (!first_consistent) first_consistent = x;
        bool covered = false;
        for (const Sequence* w : positional) {
            if (consistent_bits(x, *w)) {
                covered = true;
                break;
            }
        }
        if (!covered) return x;
    }
    if (positional.empty() && first_consistent) return *first_consistent;
    throw CoverageCompleteError("every tuple consistent with the query lhs is covered");
}

namespace {

// Row filter helpers working on the sorted variable universe of the problem.
struct RowEval {
    const std::vector<std::string>* universe;

    bool value(uint32_t row, const Symbol& s) const {
        if (s.is_const()) return s.const_value();
        auto it = std::lower_bound(universe->begin(), universe->end(), s.name());
        size_t vi = static_cast<size_t>(it - universe->begin());
        return (row >> (universe->size() - 1 - vi)) & 1u;
    }

    BitTuple eval(uint32_t row, const Sequence& seq) const {
        BitTuple out(0, static_cast<uint8_t>(seq.size()));
        for (size_t i = 0; i < seq.size(); ++i) out.set(i, value(row, seq[i]));
        return out;
    }
};

}  // namespace

Team build_counterexample(const Problem& p, const WitnessPlan& plan) {
    std::vector<std::string> universe = p.variables();
    if (universe.size() > 16)
        throw CapExceededError("cannot materialize a team over " +
                               std::to_string(universe.size()) + " variables");
    RowEval ev{&universe};

    // Per-class representative values must agree; constants are fixed.
    std::vector<std::vector<Symbol>> classes = plan.classes.nontrivial_classes();
    std::vector<uint32_t> rows;
    uint32_t nrows = 1u << universe.size();
    for (uint32_t row = 0; row < nrows; ++row) {
        bool ok = true;
        for (const auto& cls : classes) {
            bool v0 = ev.value(row, cls.front());
            for (size_t i = 1; i < cls.size() && ok; ++i)
                if (ev.value(row, cls[i]) != v0) ok = false;
            if (!ok) break;
        }
        if (!ok) continue;
        if (!plan.stop_branch && plan.forbidden_tuple) {
            for (const auto& w : plan.forbidden_sequences) {
                if (w.size() != plan.forbidden_tuple->len) continue;
                if (ev.eval(row, w) == *plan.forbidden_tuple) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) rows.push_back(row);
    }
    return Team(std::move(universe), std::move(rows));
}

bool verify_counterexample(const Problem& p, const Team& t) {
    for (const auto& a : p.assumptions)
        if (!satisfies(t, a)) return false;
    return !satisfies(t, p.query);
}

WitnessPlan witness_plan(const Problem& p, const SaturationResult& sat) {
    WitnessPlan plan;
    plan.classes = sat.pair_classes();

    const Atom& q = p.query;
    for (size_t j = 0; j < q.arity() && !plan.stop_branch; ++j)
        for (size_t k = j + 1; k < q.arity() && !plan.stop_branch; ++k)
            if (plan.classes.same(q.rhs[j], q.rhs[k]) && !plan.classes.same(q.lhs[j], q.lhs[k]))
                plan.stop_branch = true;
    if (plan.stop_branch) return plan;

    for (const auto& a : sat.derived_atoms_with_rhs(q.rhs))
        plan.forbidden_sequences.push_back(a.lhs);
    std::sort(plan.forbidden_sequences.begin(), plan.forbidden_sequences.end());
    return plan;
}

std::vector<BitTuple> forbidden_tuple_candidates(const Problem& p, const WitnessPlan& plan) {
    size_t n = p.query.arity();
    if (n > 16) throw CapExceededError("tuple candidates over arity " + std::to_string(n));
    std::vector<BitTuple> out;
    auto push = [&](BitTuple c) {
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    };
    if (p.dialect == Dialect::BooleanConstants) {
        try {
            push(choose_c(p, plan.forbidden_sequences));
        } catch (const CoverageCompleteError&) {
            // The caller should have concluded derivability; fall through to
            // the plain sweep so the verifier reports the failure.
        }
    } else {
        push(BitTuple(0, static_cast<uint8_t>(n)));
    }
    for (uint32_t bits = 0; bits < (1u << n); ++bits)
        push(BitTuple(bits, static_cast<uint8_t>(n)));
    return out;
}

std::string serialize_plan_constraints(const WitnessPlan& plan) {
    std::string out;
    for (const auto& cls : plan.classes.nontrivial_classes()) {
        for (size_t i = 1; i < cls.size(); ++i)
            out += cls[i].text() + " = " + cls[0].text() + "\n";
    }
    if (!plan.stop_branch && plan.forbidden_tuple) {
        for (const auto& w : plan.forbidden_sequences)
            if (w.size() == plan.forbidden_tuple->len)
                out += "forbid " + render_sequence(w) + " = " + plan.forbidden_tuple->text() + "\n";
    }
    return out;
}

}  // namespace teamincl
