/*
Copyright (c) 2026 The teamincl authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "teamincl/calculus.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace teamincl {

// ---------------------------------------------------------------------------
// EqualityClasses
// ---------------------------------------------------------------------------

EqualityClasses::EqualityClasses() {
    add(Symbol::bot());
    add(Symbol::top());
}

void EqualityClasses::add(const Symbol& s) {
    if (index_.count(s)) return;
    index_[s] = static_cast<int>(symbols_.size());
    symbols_.push_back(s);
    parent_.push_back(static_cast<int>(parent_.size()));
}

int EqualityClasses::index_of(const Symbol& s) const {
    auto it = index_.find(s);
    return it == index_.end() ? -1 : it->second;
}

int EqualityClasses::find(int i) const {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
}

void EqualityClasses::merge(const Symbol& a, const Symbol& b) {
    add(a);
    add(b);
    int ra = find(index_of(a)), rb = find(index_of(b));
    if (ra != rb) parent_[ra] = rb;
}

bool EqualityClasses::same(const Symbol& a, const Symbol& b) const {
    if (a == b) return true;
    int ia = index_of(a), ib = index_of(b);
    if (ia < 0 || ib < 0) return false;
    return find(ia) == find(ib);
}

bool EqualityClasses::contains(const Symbol& s) const { return index_of(s) >= 0; }

Symbol EqualityClasses::representative(const Symbol& s) const {
    int i = index_of(s);
    if (i < 0) return s;
    int root = find(i);
    // Class minimum under Symbol ordering: Bot < Top < variables by name.
    Symbol best = s;
    bool first = true;
    for (size_t j = 0; j < symbols_.size(); ++j) {
        if (find(static_cast<int>(j)) != root) continue;
        if (first || symbols_[j] < best) {
            best = symbols_[j];
            first = false;
        }
    }
    return best;
}

bool EqualityClasses::contradiction() const { return same(Symbol::top(), Symbol::bot()); }

std::vector<std::vector<Symbol>> EqualityClasses::nontrivial_classes() const {
    std::map<int, std::vector<Symbol>> by_root;
    for (size_t j = 0; j < symbols_.size(); ++j)
        by_root[find(static_cast<int>(j))].push_back(symbols_[j]);
    std::vector<std::vector<Symbol>> out;
    for (auto& [root, members] : by_root) {
        if (members.size() < 2) continue;
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

EqualityClasses derivable_equalities(const std::vector<Atom>& assumptions) {
    EqualityClasses cls;
    for (const auto& a : assumptions) {
        for (const auto& s : a.lhs) cls.add(s);
        for (const auto& s : a.rhs) cls.add(s);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        auto merge = [&](const Symbol& x, const Symbol& y) {
            if (!cls.same(x, y)) {
                cls.merge(x, y);
                changed = true;
            }
        };
        for (const auto& a : assumptions) {
            size_t n = a.arity();
            for (size_t i = 0; i < n; ++i)
                if (a.rhs[i].is_const()) merge(a.lhs[i], a.rhs[i]);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i + 1; j < n; ++j)
                    if (cls.same(a.rhs[i], a.rhs[j])) merge(a.lhs[i], a.lhs[j]);
        }
    }
    return cls;
}

// ---------------------------------------------------------------------------
// Rule steps
// ---------------------------------------------------------------------------

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::I1: return "I1";
        case Rule::I2: return "I2";
        case Rule::I3: return "I3";
        case Rule::I4: return "I4";
        case Rule::I5: return "I5";
        case Rule::I6: return "I6";
        case Rule::B1: return "B1";
        case Rule::B2: return "B2";
        case Rule::B3: return "B3";
    }
    return "?";
}

namespace {

Sequence swap_blocks(const Sequence& s, size_t a, size_t b) {
    // s = x y z with |x| = a, |y| = b  ->  x z y
    Sequence out(s.begin(), s.begin() + a);
    out.insert(out.end(), s.begin() + a + b, s.end());
    out.insert(out.end(), s.begin() + a, s.begin() + a + b);
    return out;
}

Sequence prefix(const Sequence& s, size_t k) { return Sequence(s.begin(), s.begin() + k); }

Sequence dup_suffix(const Sequence& s, size_t m) {
    Sequence out = s;
    out.insert(out.end(), s.end() - m, s.end());
    return out;
}

Sequence append_const(const Sequence& s, bool top) {
    Sequence out = s;
    out.push_back(top ? Symbol::top() : Symbol::bot());
    return out;
}

bool is_top_bot(const Atom& a) {
    return a.arity() == 1 && a.lhs[0] == Symbol::top() && a.rhs[0] == Symbol::bot();
}

}  // namespace

bool validate_step(const RuleStep& s) {
    try {
        switch (s.rule) {
            case Rule::I1:
                return s.premises.empty() && s.conclusion.lhs == s.conclusion.rhs;
            case Rule::I2: {
                if (s.premises.size() != 2) return false;
                const Atom& p = s.premises[0];
                const Atom& q = s.premises[1];
                return p.rhs == q.lhs && s.conclusion.lhs == p.lhs && s.conclusion.rhs == q.rhs;
            }
            case Rule::I3: {
                if (s.premises.size() != 1) return false;
                const auto* d = std::get_if<I3Detail>(&s.detail);
                if (!d) return false;
                const Atom& p = s.premises[0];
                if (d->prefix + d->block > p.arity()) return false;
                return s.conclusion.lhs == swap_blocks(p.lhs, d->prefix, d->block) &&
                       s.conclusion.rhs == swap_blocks(p.rhs, d->prefix, d->block);
            }
            case Rule::I4: {
                if (s.premises.size() != 1) return false;
                const auto* d = std::get_if<I4Detail>(&s.detail);
                if (!d) return false;
                const Atom& p = s.premises[0];
                if (d->prefix < 1 || d->prefix > p.arity()) return false;
                return s.conclusion.lhs == prefix(p.lhs, d->prefix) &&
                       s.conclusion.rhs == prefix(p.rhs, d->prefix);
            }
            case Rule::I5: {
                if (s.premises.size() != 1) return false;
                const auto* d = std::get_if<I5Detail>(&s.detail);
                if (!d) return false;
                const Atom& p = s.premises[0];
                if (d->suffix > p.arity()) return false;
                return s.conclusion.lhs == dup_suffix(p.lhs, d->suffix) &&
                       s.conclusion.rhs == dup_suffix(p.rhs, d->suffix);
            }
            case Rule::I6: {
                if (s.premises.size() != 2) return false;
                const auto* d = std::get_if<I6Detail>(&s.detail);
                if (!d) return false;
                const Atom& pair = s.premises[0];
                const Atom& target = s.premises[1];
                if (pair.arity() != 2 || pair.rhs[0] != pair.rhs[1]) return false;
                if (d->rhs_pos >= target.arity()) return false;
                if (target.rhs[d->rhs_pos] != pair.lhs[1]) return false;
                Atom want = target;
                want.rhs[d->rhs_pos] = pair.lhs[0];
                return s.conclusion == want;
            }
            case Rule::B1:
                return s.premises.size() == 1 && is_top_bot(s.premises[0]) &&
                       s.conclusion.lhs.size() == s.conclusion.rhs.size();
            case Rule::B2: {
                if (s.premises.size() != 1) return false;
                const auto* d = std::get_if<B2Detail>(&s.detail);
                if (!d) return false;
                const Atom& p = s.premises[0];
                return s.conclusion.lhs == append_const(p.lhs, d->top) &&
                       s.conclusion.rhs == append_const(p.rhs, d->top);
            }
            case Rule::B3: {
                if (s.premises.empty()) return false;
                auto res = b3_coverage(s.premises, s.conclusion);
                return res.covered;
            }
        }
    } catch (const Error&) {
        return false;
    }
    return false;
}

bool replay_trace(const DerivationTrace& trace, const std::vector<Atom>& assumptions,
                  const Atom& target) {
    std::vector<Atom> concluded;
    for (const auto& ts : trace.steps) {
        RuleStep step;
        step.rule = ts.rule;
        step.detail = ts.detail;
        step.conclusion = ts.conclusion;
        for (const auto& ref : ts.premises) {
            if (ref.is_assumption) {
                if (ref.index >= assumptions.size()) return false;
                step.premises.push_back(assumptions[ref.index]);
            } else {
                if (ref.index >= concluded.size()) return false;
                step.premises.push_back(concluded[ref.index]);
            }
        }
        if (!validate_step(step)) return false;
        concluded.push_back(ts.conclusion);
    }
    return !concluded.empty() && concluded.back() == target;
}

std::string serialize_trace(const DerivationTrace& trace, const std::vector<Atom>& assumptions) {
    std::string out;
    for (size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& ts = trace.steps[i];
        out += std::to_string(i) + ": " + rule_name(ts.rule) + " [";
        for (size_t j = 0; j < ts.premises.size(); ++j) {
            if (j) out += ", ";
            const auto& ref = ts.premises[j];
            out += ref.is_assumption ? "A#" + std::to_string(ref.index) : std::to_string(ref.index);
        }
        out += "] |- " + render_atom(ts.conclusion);
        if (ts.rule == Rule::B3) {
            out += "  via {";
            for (size_t j = 0; j < ts.premises.size(); ++j) {
                if (j) out += "; ";
                const auto& ref = ts.premises[j];
                const Atom& a = ref.is_assumption
                                    ? assumptions[ref.index]
                                    : trace.steps[ref.index].conclusion;
                out += render_atom(a);
            }
            out += "}";
        }
        out += "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Normal forms
// ---------------------------------------------------------------------------

Decomposition decompose_rhs_repetitions(const Atom& a) {
    Decomposition out;
    std::map<Symbol, size_t> first_at;
    Sequence core_lhs, core_rhs;
    for (size_t i = 0; i < a.arity(); ++i) {
        auto it = first_at.find(a.rhs[i]);
        if (it == first_at.end()) {
            first_at[a.rhs[i]] = i;
            core_lhs.push_back(a.lhs[i]);
            core_rhs.push_back(a.rhs[i]);
        } else {
            size_t f = it->second;
            out.equalities.push_back(
                Atom({a.lhs[f], a.lhs[i]}, {a.rhs[f], a.rhs[f]}));
        }
    }
    out.core = Atom(std::move(core_lhs), std::move(core_rhs));
    return out;
}

NormalizedProblem normalize(const Problem& p) {
    NormalizedProblem out;
    out.classes = derivable_equalities(p.assumptions);
    auto rewrite_seq = [&](const Sequence& s) {
        Sequence r;
        r.reserve(s.size());
        for (const auto& sym : s) r.push_back(out.classes.representative(sym));
        return r;
    };
    auto rewrite = [&](const Atom& a) { return Atom(rewrite_seq(a.lhs), rewrite_seq(a.rhs)); };

    out.problem.dialect = p.dialect;
    for (const auto& a : p.assumptions) {
        Decomposition d = decompose_rhs_repetitions(rewrite(a));
        out.problem.assumptions.push_back(d.core);
        // Split-off assumption equalities are already recorded in the classes:
        // each comes from a repeated rhs, which is an equality-scan seed.
    }
    Decomposition dq = decompose_rhs_repetitions(rewrite(p.query));
    out.problem.query = dq.core;
    for (const auto& e : dq.equalities)
        if (e.lhs[0] != e.lhs[1]) out.query_equalities.push_back(e);
    return out;
}

// ---------------------------------------------------------------------------
// Consistency and coverage
// ---------------------------------------------------------------------------

bool consistent(const Atom& a) {
    for (const auto& s : a.lhs)
        if (!s.is_const())
            throw PreconditionError("consistency requires an all-constant lhs: " + render_atom(a));
    size_t n = a.arity();
    for (size_t i = 0; i < n; ++i) {
        if (a.rhs[i].is_const() && a.rhs[i] != a.lhs[i]) return false;
        for (size_t j = i + 1; j < n; ++j)
            if (a.rhs[i] == a.rhs[j] && a.lhs[i] != a.lhs[j]) return false;
    }
    return true;
}

bool consistent_bits(const BitTuple& x, const Sequence& rhs) {
    size_t n = rhs.size();
    for (size_t i = 0; i < n; ++i) {
        if (rhs[i].is_const() && rhs[i].const_value() != x.get(i)) return false;
        for (size_t j = i + 1; j < n; ++j)
            if (rhs[i] == rhs[j] && x.get(i) != x.get(j)) return false;
    }
    return true;
}

Sequence tuple_to_constants(const BitTuple& x) {
    Sequence s;
    for (size_t i = 0; i < x.len; ++i) s.push_back(x.get(i) ? Symbol::top() : Symbol::bot());
    return s;
}

CoverageResult b3_coverage(const std::vector<Atom>& candidates, const Atom& target) {
    size_t n = target.arity();
    if (n > 24) throw CapExceededError("b3 coverage over arity " + std::to_string(n));
    for (const auto& c : candidates) {
        if (c.rhs != target.rhs)
            throw PreconditionError("candidate rhs differs from target rhs: " + render_atom(c));
        for (size_t i = 0; i < n; ++i)
            if (c.lhs[i] != target.lhs[i] && !c.lhs[i].is_const())
                throw PreconditionError("candidate lhs entry outside {p_i, #T, #F}: " + render_atom(c));
    }
    for (uint32_t bits = 0; bits < (1u << n); ++bits) {
        BitTuple x(bits, static_cast<uint8_t>(n));
        if (!consistent_bits(x, target.lhs)) continue;
        bool hit = false;
        for (const auto& c : candidates) {
            if (consistent_bits(x, c.lhs)) {
                hit = true;
                break;
            }
        }
        if (!hit) return {false, tuple_to_constants(x)};
    }
    return {true, std::nullopt};
}

}  // namespace teamincl
