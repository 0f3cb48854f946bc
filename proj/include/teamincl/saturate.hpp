/*
Copyright (c) 2026 The teamincl authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "teamincl/calculus.hpp"
#include "teamincl/syntax.hpp"

namespace teamincl {

struct SaturateLimits {
    size_t max_sequences = 500'000;
    size_t max_atoms = 4'000'000;
};

using SeqId = uint32_t;
using AtomId = uint32_t;
constexpr AtomId kNoAtom = UINT32_MAX;

// ---------------------------------------------------------------------------
// Bounded saturation. The universe is every atom whose two sides are
// sequences of length 1..N over the problem's symbols (constants included in
// the Boolean dialect). Sequences and atoms are numbered arithmetically, so
// rule application is integer work. The derived set is the least fixed point
// of the dialect's rules over the assumptions, with I1 instances seeded for
// every dialect-valid sequence in the universe. Once Top <= Bot is derived,
// every universe atom follows by B1; the engine records that as a flood flag
// instead of materializing the steps.
// ---------------------------------------------------------------------------

class SaturationEngine {
public:
    SaturationEngine(Dialect dialect, std::vector<Symbol> symbols, size_t max_arity,
                     SaturateLimits limits = {});

    // Clears derivations; keeps the universe. Assumptions are re-added after.
    void reset();

    void add_assumption(const Atom& a, size_t index);

    // Runs to fixpoint, or stops early once `stop_at` (if any) is derived.
    void run(std::optional<AtomId> stop_at = std::nullopt);

    // --- universe ---
    size_t arity_bound() const { return max_arity_; }
    const std::vector<Symbol>& symbols() const { return symbols_; }
    std::optional<SeqId> seq_id(const Sequence& s) const;
    std::optional<AtomId> atom_id(const Atom& a) const;
    Sequence seq_of(SeqId id) const;
    Atom atom_of(AtomId id) const;
    size_t seq_arity(SeqId id) const;

    // --- results ---
    bool derived(AtomId id) const;
    bool derived_atom(const Atom& a) const;  // false when outside the universe
    bool flooded() const { return flooded_; }
    // Derived atoms with the given rhs (flood-aware).
    std::vector<AtomId> derived_with_rhs(SeqId rhs) const;
    const std::vector<AtomId>& derived_list() const { return derived_list_; }

    // Union of all derived pair atoms  a b <= c c.
    EqualityClasses pair_classes() const;

    DerivationTrace trace(AtomId id) const;

private:
    struct Rec {
        uint8_t rule;  // Rule values, or kAssumption
        uint8_t d0 = 0, d1 = 0;
        AtomId prem0 = kNoAtom;
        AtomId prem1 = kNoAtom;
        int32_t spill = -1;  // B3 covering sets
    };
    static constexpr uint8_t kAssumption = 255;

    using Digits = std::array<uint8_t, 16>;

    size_t nsym_;
    bool boolean_;
    Dialect dialect_;
    std::vector<Symbol> symbols_;
    std::map<Symbol, uint32_t> sym_index_;
    size_t max_arity_;
    SaturateLimits limits_;

    std::vector<size_t> pow_;         // nsym_^k
    std::vector<size_t> seq_offset_;  // first seq id of arity k
    std::vector<size_t> atom_offset_; // first atom id of arity k
    size_t nseqs_ = 0, natoms_ = 0;

    std::vector<uint64_t> derived_bits_;
    std::vector<Rec> recs_;
    std::vector<AtomId> derived_list_;
    std::vector<AtomId> worklist_;
    std::vector<std::vector<AtomId>> spills_;
    std::vector<std::vector<AtomId>> by_lhs_;          // seq id -> derived atoms
    std::vector<std::vector<AtomId>> by_rhs_;          // seq id -> derived atoms
    std::vector<std::vector<AtomId>> by_rhs_sym_pos_;  // sym * max_arity + pos
    struct PairInfo { AtomId id; uint8_t a, b; };
    std::vector<PairInfo> pairs_;                      // derived  a b <= c c  with a != b
    bool flooded_ = false;
    AtomId top_bot_id_ = kNoAtom;
    std::optional<AtomId> stop_at_;
    bool stopped_ = false;

    size_t arity_of_seq(size_t id) const;
    void decompose(SeqId id, Digits& d, size_t& k) const;
    SeqId compose(const Digits& d, size_t k) const;
    AtomId make_atom(SeqId l, SeqId r, size_t k) const;
    void split_atom(AtomId id, SeqId& l, SeqId& r, size_t& k) const;
    bool seq_valid(const Digits& d, size_t k) const;  // repetition-free gate

    bool insert(AtomId id, Rec rec);
    void seed_identity();
    void process(AtomId id);
    bool b3_round();
    void flood();

    size_t emit_step(AtomId id, DerivationTrace& out, std::map<AtomId, size_t>& done) const;
    PremiseRef premise_ref(AtomId id, DerivationTrace& out, std::map<AtomId, size_t>& done) const;
};

// ---------------------------------------------------------------------------
// Operation-level wrapper
// ---------------------------------------------------------------------------

class SaturationResult {
public:
    SaturationResult(std::shared_ptr<SaturationEngine> engine, std::vector<Atom> assumptions)
        : engine_(std::move(engine)), assumptions_(std::move(assumptions)) {}

    const SaturationEngine& engine() const { return *engine_; }
    const std::vector<Atom>& assumptions() const { return assumptions_; }

    bool derived(const Atom& a) const { return engine_->derived_atom(a); }
    bool contradiction() const;  // Top <= Bot derived
    DerivationTrace trace(const Atom& a) const;
    std::vector<Atom> derived_atoms_with_rhs(const Sequence& rhs) const;
    EqualityClasses pair_classes() const { return engine_->pair_classes(); }

private:
    std::shared_ptr<SaturationEngine> engine_;
    std::vector<Atom> assumptions_;
};

size_t saturation_bound(const Problem& p);  // max(query arity, assumption arities, 2)

// Engine symbol table for a problem: its variables, plus the constants in the
// Boolean dialect, ordered Bot < Top < variables.
std::vector<Symbol> saturation_symbols(const Problem& p);

SaturationResult saturate(const Problem& p, size_t bound, SaturateLimits limits = {});

}  // namespace teamincl
