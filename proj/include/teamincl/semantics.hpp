/*
Copyright (c) 2026 The teamincl authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "teamincl/syntax.hpp"

namespace teamincl {

// ---------------------------------------------------------------------------
// Bit tuples. A tuple of 0/1 values of a fixed width; entry 0 is the most
// significant bit, so the tuple reads as a binary number.
// ---------------------------------------------------------------------------

struct BitTuple {
    uint32_t bits = 0;
    uint8_t len = 0;

    BitTuple() = default;
    BitTuple(uint32_t bits, uint8_t len) : bits(bits), len(len) {}

    bool get(size_t i) const { return (bits >> (len - 1 - i)) & 1u; }
    void set(size_t i, bool v) {
        uint32_t m = 1u << (len - 1 - i);
        bits = v ? (bits | m) : (bits & ~m);
    }

    bool operator==(const BitTuple& o) const { return bits == o.bits && len == o.len; }
    bool operator!=(const BitTuple& o) const { return !(*this == o); }
    bool operator<(const BitTuple& o) const {
        return len != o.len ? len < o.len : bits < o.bits;
    }

    std::string text() const {
        std::string s;
        for (size_t i = 0; i < len; ++i) s += get(i) ? '1' : '0';
        return s;
    }
};

// ---------------------------------------------------------------------------
// Teams. A team is a set of total 0/1 assignments over a shared, sorted
// variable universe. A row is stored as a bit pattern whose first variable
// occupies the most significant bit, so rows compare as binary numbers.
// Constants are not part of the universe; they evaluate to fixed bits.
// ---------------------------------------------------------------------------

class Team {
public:
    Team() = default;
    Team(std::vector<std::string> universe, std::vector<uint32_t> rows);

    static Team empty(std::vector<std::string> universe) { return Team(std::move(universe), {}); }

    const std::vector<std::string>& universe() const { return universe_; }
    const std::vector<uint32_t>& rows() const { return rows_; }  // ascending, deduplicated
    size_t size() const { return rows_.size(); }
    bool has_row(uint32_t r) const;

    // Value of variable index `vi` in row pattern `row`.
    bool value(uint32_t row, size_t vi) const {
        return (row >> (universe_.size() - 1 - vi)) & 1u;
    }

    int var_index(const std::string& name) const;  // -1 when absent

    bool operator==(const Team& o) const { return universe_ == o.universe_ && rows_ == o.rows_; }

private:
    std::vector<std::string> universe_;
    std::vector<uint32_t> rows_;
};

// Evaluate a sequence under one row of a team; constants evaluate as fixed
// bits. Throws UnknownVariableError for variables outside the universe.
BitTuple evaluate(const Team& t, uint32_t row, const Sequence& seq);

// T[x]: the set of per-row evaluations of `seq`.
std::set<BitTuple> project(const Team& t, const Sequence& seq);

// Projection-based satisfaction: project(t, lhs) subset-of project(t, rhs).
bool satisfies(const Team& t, const Atom& a);

// The pointwise clause: for every row there is a row where rhs takes the
// lhs value. Agrees with `satisfies` everywhere; kept separate so the two
// routes can be checked against each other.
bool satisfies_pointwise(const Team& t, const Atom& a);

bool satisfies_all(const Team& t, const std::vector<Atom>& atoms);

// True iff lhs equals rhs positionally; such atoms hold in every team.
bool is_trivial(const Atom& a);

// True iff some nonempty team satisfies the atom. Decided by the joint
// value-pattern of the two sides: positions carrying the same variable
// (within a side or across sides) must take equal bits and constants pin
// their positions; the atom is nonempty-satisfiable exactly when that
// pattern has no Top/Bot clash.
bool nonempty_satisfiable(const Atom& a);

// ---------------------------------------------------------------------------
// Exhaustive team enumeration, for the oracle. Yields all 2^(2^|V|) teams in
// a fixed order: rows ordered by bit pattern, teams by characteristic mask of
// their row set. Throws CapExceededError when |universe| > cap.
// ---------------------------------------------------------------------------

void for_each_team(const std::vector<std::string>& universe, size_t cap,
                   const std::function<bool(const Team&)>& visit);  // visit returns false to stop

std::vector<Team> enumerate_teams(const std::vector<std::string>& universe, size_t cap);

// ---------------------------------------------------------------------------
// Serialization: header of variable names, one row of space-separated bits
// per line, rows in ascending bit-pattern order.
// ---------------------------------------------------------------------------

std::string serialize_team(const Team& t);
Team parse_team(const std::string& text);

}  // namespace teamincl
