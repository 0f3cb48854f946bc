/*
Copyright (c) 2026 The teamincl authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "teamincl/semantics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace teamincl {

Team::Team(std::vector<std::string> universe, std::vector<uint32_t> rows)
    : universe_(std::move(universe)), rows_(std::move(rows)) {
    if (!std::is_sorted(universe_.begin(), universe_.end()))
        std::sort(universe_.begin(), universe_.end());
    std::sort(rows_.begin(), rows_.end());
    rows_.erase(std::unique(rows_.begin(), rows_.end()), rows_.end());
}

bool Team::has_row(uint32_t r) const {
    return std::binary_search(rows_.begin(), rows_.end(), r);
}

int Team::var_index(const std::string& name) const {
    auto it = std::lower_bound(universe_.begin(), universe_.end(), name);
    if (it == universe_.end() || *it != name) return -1;
    return static_cast<int>(it - universe_.begin());
}

BitTuple evaluate(const Team& t, uint32_t row, const Sequence& seq) {
    BitTuple out(0, static_cast<uint8_t>(seq.size()));
    for (size_t i = 0; i < seq.size(); ++i) {
        bool v;
        if (seq[i].is_const()) {
            v = seq[i].const_value();
        } else {
            int vi = t.var_index(seq[i].name());
            if (vi < 0) throw UnknownVariableError("variable '" + seq[i].name() + "' not in team universe");
            v = t.value(row, static_cast<size_t>(vi));
        }
        out.set(i, v);
    }
    return out;
}

std::set<BitTuple> project(const Team& t, const Sequence& seq) {
    std::set<BitTuple> out;
    for (uint32_t row : t.rows()) out.insert(evaluate(t, row, seq));
    return out;
}

bool satisfies(const Team& t, const Atom& a) {
    auto rhs = project(t, a.rhs);
    for (uint32_t row : t.rows())
        if (!rhs.count(evaluate(t, row, a.lhs))) return false;
    return true;
}

bool satisfies_pointwise(const Team& t, const Atom& a) {
    for (uint32_t row : t.rows()) {
        BitTuple want = evaluate(t, row, a.lhs);
        bool found = false;
        for (uint32_t other : t.rows()) {
            if (evaluate(t, other, a.rhs) == want) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

bool satisfies_all(const Team& t, const std::vector<Atom>& atoms) {
    return std::all_of(atoms.begin(), atoms.end(), [&](const Atom& a) { return satisfies(t, a); });
}

bool is_trivial(const Atom& a) { return a.lhs == a.rhs; }

bool nonempty_satisfiable(const Atom& a) {
    // Union-find over tuple positions, with two extra nodes anchoring the
    // constant values 0 and 1.
    size_t n = a.arity();
    std::vector<int> parent(n + 2);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
    int zero = static_cast<int>(n), one = static_cast<int>(n) + 1;

    auto bind = [&](const Sequence& seq) {
        for (size_t i = 0; i < n; ++i) {
            if (seq[i].is_const())
                unite(static_cast<int>(i), seq[i].const_value() ? one : zero);
        }
    };
    bind(a.lhs);
    bind(a.rhs);
    // Same variable at two positions (either side) forces equal bits.
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (a.lhs[i].is_var() && a.lhs[i] == a.lhs[j] && i < j) unite((int)i, (int)j);
            if (a.rhs[i].is_var() && a.rhs[i] == a.rhs[j] && i < j) unite((int)i, (int)j);
            if (a.lhs[i].is_var() && a.lhs[i] == a.rhs[j]) unite((int)i, (int)j);
        }
    return find(zero) != find(one);
}

void for_each_team(const std::vector<std::string>& universe, size_t cap,
                   const std::function<bool(const Team&)>& visit) {
    if (universe.size() > cap)
        throw CapExceededError("team enumeration over " + std::to_string(universe.size()) +
                               " variables exceeds cap " + std::to_string(cap));
    if (universe.size() > 5)
        throw CapExceededError("team enumeration over more than 5 variables is not supported");
    size_t nrows = 1u << universe.size();
    uint64_t nteams_minus1 = (nrows >= 64) ? ~0ull : ((1ull << nrows) - 1);
    std::vector<std::string> sorted = universe;
    std::sort(sorted.begin(), sorted.end());
    uint64_t mask = 0;
    while (true) {
        std::vector<uint32_t> rows;
        for (size_t r = 0; r < nrows; ++r)
            if ((mask >> r) & 1ull) rows.push_back(static_cast<uint32_t>(r));
        if (!visit(Team(sorted, std::move(rows)))) return;
        if (mask == nteams_minus1) return;
        ++mask;
    }
}

std::vector<Team> enumerate_teams(const std::vector<std::string>& universe, size_t cap) {
    if (universe.size() > 4)
        throw CapExceededError("materializing all teams over more than 4 variables");
    std::vector<Team> out;
    for_each_team(universe, cap, [&](const Team& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

std::string serialize_team(const Team& t) {
    std::string out;
    for (size_t i = 0; i < t.universe().size(); ++i) {
        if (i) out += ' ';
        out += t.universe()[i];
    }
    out += '\n';
    for (uint32_t row : t.rows()) {
        for (size_t i = 0; i < t.universe().size(); ++i) {
            if (i) out += ' ';
            out += t.value(row, i) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

Team parse_team(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty team text", 1, 1);
    std::vector<std::string> universe;
    {
        std::istringstream hs(line);
        std::string name;
        while (hs >> name) universe.push_back(name);
    }
    if (!std::is_sorted(universe.begin(), universe.end()))
        throw ParseError("team header variables must be sorted", 1, 1);
    std::vector<uint32_t> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream rs(line);
        std::string bit;
        uint32_t row = 0;
        size_t count = 0;
        while (rs >> bit) {
            if (bit != "0" && bit != "1") throw ParseError("expected bit", lineno, 1);
            row = (row << 1) | (bit == "1" ? 1u : 0u);
            ++count;
        }
        if (count == 0) continue;
        if (count != universe.size()) throw ParseError("row width mismatch", lineno, 1);
        rows.push_back(row);
    }
    return Team(std::move(universe), std::move(rows));
}

}  // namespace teamincl
