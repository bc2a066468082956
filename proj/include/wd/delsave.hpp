#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wd/graph.hpp"

namespace wd {

// Per-vertex integer charge (remaining color budget).  Indexed by VertexId;
// entries are meaningful for live vertices only.
using ChargeFn = std::vector<int>;

ChargeFn constant_charge(int n, int d);

// One step of the game: delete `vertex`, optionally sparing `save_target`.
struct Move {
    VertexId vertex;
    VertexId save_target = kBlank;

    bool operator==(const Move&) const = default;
};

// Ordered move list deleting every live vertex exactly once.
using Witness = std::vector<Move>;

// A game position (G, f).  The vertex universe is fixed; deleted vertices
// are marked dead, so ids stay stable across moves.
struct Position {
    SimpleGraph graph;
    std::vector<char> live;
    ChargeFn charge;

    int live_count() const;
};

Position make_position(SimpleGraph g, ChargeFn f);

// DelSave(G, f, u, w) := (G - u, f') with
//   f'(v) = f(v)      if v not a neighbor of u, or v == w and f(u) > f(w),
//   f'(v) = f(v) - 1  otherwise.
// No legality check; throws InvalidMoveError if u is dead or w is neither
// blank nor a live neighbor of u.
Position del_save(const Position& pos, VertexId u, VertexId w);

// True iff the resulting charge function is nonnegative.
bool is_legal(const Position& pos, VertexId u, VertexId w);

constexpr int kDeadCharge = INT32_MIN;

struct TraceStep {
    Move move;
    int charge_before;            // charge of the deleted vertex at deletion
    std::vector<int> charge_after; // full vector; kDeadCharge for dead vertices
};

using Trace = std::vector<TraceStep>;

enum class VerifyStatus { ok, illegal_step, bad_coverage, bad_target };

struct VerifyResult {
    VerifyStatus status = VerifyStatus::ok;
    size_t fail_step = 0;
    VertexId offender = kBlank;
    std::string message;
    Trace trace; // filled up to the failure point when recording

    explicit operator bool() const { return status == VerifyStatus::ok; }
};

// Plays the witness from (g, f), checking legality at every step.  Success
// certifies that g is weakly f-degenerate.
VerifyResult verify(const SimpleGraph& g, const ChargeFn& f, const Witness& wit,
                    bool record_trace = true);

// Lemma 2.1 reuse: a witness legal under f stays legal under any f' >= f.
// Throws EngineBug if the premise holds but the conclusion fails.
void check_monotone_reuse(const SimpleGraph& g, const ChargeFn& f, const ChargeFn& f_hi,
                          const Witness& wit);

// Restriction of a witness to a spanning subgraph: saves across edges absent
// from g_sub become plain deletions.  With verify(g_super, f, wit) legal, the
// result is legal on (g_sub, f) and its charges dominate the source run.
Witness project(const Witness& wit, const SimpleGraph& g_super, const SimpleGraph& g_sub,
                const ChargeFn& f);

// Step-wise charge dominance between two traces of the same projected move
// list: charge_sub(v) >= charge_super(v) for every live v at every step.
bool dominance_check(const Trace& trace_sub, const Trace& trace_super);

} // namespace wd
