#pragma once

#include <optional>
#include <vector>

#include "wd/delsave.hpp"
#include "wd/graph.hpp"

namespace wd {

// Brute-force oracles for small graphs.

// d(G) by repeated minimum-degree peeling; `order` (when given) receives the
// peeling order, whose reverse witnesses d-degeneracy.
int degeneracy(const SimpleGraph& g, std::vector<VertexId>* order = nullptr);

struct SearchOptions {
    bool memoize = true;
    bool prune_weak_saves = true; // skip DelSave(u,w) when f(u) <= f(w)
};

// Exhaustive DelSave game search with memoized losing states.  Returns a
// witness iff g is weakly f-degenerate.  Throws SizeError for n > 64.
std::optional<Witness> find_weak_witness(const SimpleGraph& g, const ChargeFn& f,
                                         const SearchOptions& opt = {});

inline bool is_weakly_degenerate(const SimpleGraph& g, const ChargeFn& f,
                                 const SearchOptions& opt = {}) {
    return find_weak_witness(g, f, opt).has_value();
}

// Delete-only game: succeeds iff some order has every vertex preceded by at
// most f(v) of its neighbors (computed by reverse peeling, which is exact).
std::optional<Witness> find_strong_witness(const SimpleGraph& g, const ChargeFn& f);

inline bool is_strongly_degenerate(const SimpleGraph& g, const ChargeFn& f) {
    return find_strong_witness(g, f).has_value();
}

// wd(G): least d with g weakly (const d)-degenerate; scans upward from 0,
// valid by monotonicity, bounded above by degeneracy.
int weak_degeneracy(const SimpleGraph& g, Witness* wit = nullptr,
                    const SearchOptions& opt = {});

// Exact chromatic number by backtracking (small n).
int chromatic_number(const SimpleGraph& g);

} // namespace wd
