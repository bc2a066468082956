#include "wd/delsave.hpp"

#include <algorithm>

namespace wd {

ChargeFn constant_charge(int n, int d) {
    return ChargeFn(static_cast<size_t>(n), d);
}

int Position::live_count() const {
    return static_cast<int>(std::count(live.begin(), live.end(), 1));
}

Position make_position(SimpleGraph g, ChargeFn f) {
    if (static_cast<int>(f.size()) != g.vertex_count())
        throw Error("position: charge domain must match the vertex set");
    Position p;
    p.live.assign(static_cast<size_t>(g.vertex_count()), 1);
    p.graph = std::move(g);
    p.charge = std::move(f);
    return p;
}

namespace {

void check_move(const Position& pos, VertexId u, VertexId w) {
    if (!pos.graph.has_vertex(u) || !pos.live[static_cast<size_t>(u)])
        throw InvalidMoveError("move deletes a vertex that is not live: " + std::to_string(u));
    if (w == kBlank) return;
    if (!pos.graph.has_vertex(w) || !pos.live[static_cast<size_t>(w)] || !pos.graph.has_edge(u, w))
        throw InvalidMoveError("save target " + std::to_string(w) +
                               " is not a live neighbor of " + std::to_string(u));
}

// Applies the move in place and reports the lowest resulting charge.
int apply_move(Position& pos, VertexId u, VertexId w) {
    int lowest = 0;
    bool spare = w != kBlank && pos.charge[static_cast<size_t>(u)] > pos.charge[static_cast<size_t>(w)];
    for (VertexId v : pos.graph.neighbors(u)) {
        if (!pos.live[static_cast<size_t>(v)]) continue;
        if (v == w && spare) continue;
        int c = --pos.charge[static_cast<size_t>(v)];
        lowest = std::min(lowest, c);
    }
    pos.live[static_cast<size_t>(u)] = 0;
    return lowest;
}

} // namespace

Position del_save(const Position& pos, VertexId u, VertexId w) {
    check_move(pos, u, w);
    Position out = pos;
    apply_move(out, u, w);
    return out;
}

bool is_legal(const Position& pos, VertexId u, VertexId w) {
    check_move(pos, u, w);
    if (w == kBlank || pos.charge[static_cast<size_t>(u)] > pos.charge[static_cast<size_t>(w)]) {
        // only neighbors at charge 0 can go negative, and w is spared
        for (VertexId v : pos.graph.neighbors(u))
            if (pos.live[static_cast<size_t>(v)] && v != w && pos.charge[static_cast<size_t>(v)] == 0)
                return false;
        return true;
    }
    for (VertexId v : pos.graph.neighbors(u))
        if (pos.live[static_cast<size_t>(v)] && pos.charge[static_cast<size_t>(v)] == 0) return false;
    return true;
}

VerifyResult verify(const SimpleGraph& g, const ChargeFn& f, const Witness& wit, bool record_trace) {
    VerifyResult res;
    const int n = g.vertex_count();
    if (static_cast<int>(f.size()) != n) {
        res.status = VerifyStatus::bad_coverage;
        res.message = "charge domain does not match the graph";
        return res;
    }
    std::vector<char> scheduled(static_cast<size_t>(n), 0);
    for (const Move& m : wit) {
        if (m.vertex < 0 || m.vertex >= n || scheduled[static_cast<size_t>(m.vertex)]) {
            res.status = VerifyStatus::bad_coverage;
            res.offender = m.vertex;
            res.message = "witness does not list every vertex exactly once";
            return res;
        }
        scheduled[static_cast<size_t>(m.vertex)] = 1;
    }
    if (wit.size() != static_cast<size_t>(n)) {
        res.status = VerifyStatus::bad_coverage;
        res.message = "witness covers " + std::to_string(wit.size()) + " of " +
                      std::to_string(n) + " vertices";
        return res;
    }
    for (VertexId v = 0; v < n; ++v) {
        if (f[static_cast<size_t>(v)] < 0) {
            res.status = VerifyStatus::illegal_step;
            res.fail_step = 0;
            res.offender = v;
            res.message = "initial charge of " + std::to_string(v) + " is negative";
            return res;
        }
    }

    Position pos = make_position(g, f);
    for (size_t i = 0; i < wit.size(); ++i) {
        const Move& m = wit[i];
        if (!pos.live[static_cast<size_t>(m.vertex)]) {
            res.status = VerifyStatus::bad_coverage;
            res.fail_step = i;
            res.offender = m.vertex;
            res.message = "step deletes an already dead vertex";
            return res;
        }
        if (m.save_target != kBlank &&
            (m.save_target < 0 || m.save_target >= n ||
             !pos.live[static_cast<size_t>(m.save_target)] ||
             !g.has_edge(m.vertex, m.save_target))) {
            res.status = VerifyStatus::bad_target;
            res.fail_step = i;
            res.offender = m.save_target;
            res.message = "save target is not a live neighbor of the deleted vertex";
            return res;
        }
        int before = pos.charge[static_cast<size_t>(m.vertex)];
        int lowest = apply_move(pos, m.vertex, m.save_target);
        if (record_trace) {
            TraceStep st;
            st.move = m;
            st.charge_before = before;
            st.charge_after = pos.charge;
            for (VertexId v = 0; v < n; ++v)
                if (!pos.live[static_cast<size_t>(v)]) st.charge_after[static_cast<size_t>(v)] = kDeadCharge;
            res.trace.push_back(std::move(st));
        }
        if (lowest < 0) {
            res.status = VerifyStatus::illegal_step;
            res.fail_step = i;
            res.offender = m.vertex;
            res.message = "step " + std::to_string(i) + " (vertex " + std::to_string(m.vertex) +
                          ") drives a neighbor's charge negative";
            return res;
        }
    }
    return res;
}

void check_monotone_reuse(const SimpleGraph& g, const ChargeFn& f, const ChargeFn& f_hi,
                          const Witness& wit) {
    for (size_t v = 0; v < f.size(); ++v)
        if (f_hi[v] < f[v]) throw Error("monotone reuse requires f <= f_hi pointwise");
    if (!verify(g, f, wit, false)) throw Error("monotone reuse requires a witness legal under f");
    if (!verify(g, f_hi, wit, false))
        throw EngineBug("monotone reuse failed: witness legal under f but not under f_hi >= f");
}

Witness project(const Witness& wit, const SimpleGraph& g_super, const SimpleGraph& g_sub,
                const ChargeFn& f) {
    if (!is_spanning_subgraph(g_sub, g_super))
        throw Error("project: g_sub is not a spanning subgraph of g_super");
    if (!verify(g_super, f, wit, false))
        throw Error("project: witness does not verify on the supergraph");
    Witness out = wit;
    for (Move& m : out)
        if (m.save_target != kBlank && !g_sub.has_edge(m.vertex, m.save_target))
            m.save_target = kBlank;
    return out;
}

bool dominance_check(const Trace& trace_sub, const Trace& trace_super) {
    if (trace_sub.size() != trace_super.size()) return false;
    for (size_t i = 0; i < trace_sub.size(); ++i) {
        const auto& a = trace_sub[i].charge_after;
        const auto& b = trace_super[i].charge_after;
        if (a.size() != b.size()) return false;
        if (trace_sub[i].move.vertex != trace_super[i].move.vertex) return false;
        for (size_t v = 0; v < a.size(); ++v) {
            bool live_a = a[v] != kDeadCharge, live_b = b[v] != kDeadCharge;
            if (live_a != live_b) return false;
            if (live_a && a[v] < b[v]) return false;
        }
    }
    return true;
}

} // namespace wd
