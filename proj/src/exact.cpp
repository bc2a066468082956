#include "wd/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>

namespace wd {

int degeneracy(const SimpleGraph& g, std::vector<VertexId>* order) {
    const int n = g.vertex_count();
    std::vector<int> deg(static_cast<size_t>(n));
    std::vector<char> gone(static_cast<size_t>(n), 0);
    for (VertexId v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = g.degree(v);
    if (order) order->clear();
    int d = 0;
    for (int step = 0; step < n; ++step) {
        VertexId best = kBlank;
        for (VertexId v = 0; v < n; ++v)
            if (!gone[static_cast<size_t>(v)] &&
                (best == kBlank || deg[static_cast<size_t>(v)] < deg[static_cast<size_t>(best)]))
                best = v;
        d = std::max(d, deg[static_cast<size_t>(best)]);
        gone[static_cast<size_t>(best)] = 1;
        if (order) order->push_back(best);
        for (VertexId w : g.neighbors(best))
            if (!gone[static_cast<size_t>(w)]) --deg[static_cast<size_t>(w)];
    }
    return d;
}

namespace {

// Packed (live mask, charges) key; usable when n <= 16 and charges <= 15.
struct StateKey {
    uint64_t mask;
    uint64_t packed;
    bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
    size_t operator()(const StateKey& k) const {
        uint64_t h = k.mask * 0x9E3779B97F4A7C15ull ^ k.packed;
        h ^= h >> 33;
        h *= 0xFF51AFD7ED558CCDull;
        h ^= h >> 33;
        return static_cast<size_t>(h);
    }
};

struct Searcher {
    const SimpleGraph& g;
    const SearchOptions& opt;
    int n;
    bool can_memoize;
    std::unordered_set<StateKey, StateKeyHash> losing;
    std::vector<Move> moves; // winning line, filled on success

    Searcher(const SimpleGraph& gg, const SearchOptions& o)
        : g(gg), opt(o), n(gg.vertex_count()) {
        can_memoize = opt.memoize && n <= 16;
    }

    StateKey key(uint64_t live, const std::vector<int>& charge) const {
        uint64_t packed = 0;
        for (int v = 0; v < n; ++v)
            if (live & (1ull << v))
                packed |= static_cast<uint64_t>(charge[static_cast<size_t>(v)] & 0xF)
                          << (4 * v);
        return {live, packed};
    }

    bool run(uint64_t live, std::vector<int>& charge) {
        if (live == 0) return true;
        bool memo_here = can_memoize;
        if (memo_here)
            for (int v = 0; v < n; ++v)
                if ((live & (1ull << v)) && charge[static_cast<size_t>(v)] > 15) memo_here = false;
        StateKey k{};
        if (memo_here) {
            k = key(live, charge);
            if (losing.count(k)) return false;
        }

        // vertices by (charge, id); blank target tried last per vertex
        std::vector<VertexId> vs;
        for (int v = 0; v < n; ++v)
            if (live & (1ull << v)) vs.push_back(v);
        std::stable_sort(vs.begin(), vs.end(), [&](VertexId a, VertexId b) {
            return charge[static_cast<size_t>(a)] < charge[static_cast<size_t>(b)];
        });

        for (VertexId u : vs) {
            std::vector<VertexId> targets;
            for (VertexId w : g.neighbors(u)) {
                if (!(live & (1ull << w))) continue;
                if (opt.prune_weak_saves &&
                    charge[static_cast<size_t>(u)] <= charge[static_cast<size_t>(w)])
                    continue;
                targets.push_back(w);
            }
            targets.push_back(kBlank);
            for (VertexId w : targets) {
                bool spare = w != kBlank &&
                             charge[static_cast<size_t>(u)] > charge[static_cast<size_t>(w)];
                // apply
                bool legal = true;
                std::vector<VertexId> hit;
                for (VertexId v : g.neighbors(u)) {
                    if (!(live & (1ull << v))) continue;
                    if (v == w && spare) continue;
                    if (--charge[static_cast<size_t>(v)] < 0) legal = false;
                    hit.push_back(v);
                }
                if (legal && run(live & ~(1ull << u), charge)) {
                    for (VertexId v : hit) ++charge[static_cast<size_t>(v)];
                    moves.push_back({u, w});
                    return true;
                }
                for (VertexId v : hit) ++charge[static_cast<size_t>(v)];
            }
        }
        if (memo_here) losing.insert(k);
        return false;
    }
};

} // namespace

std::optional<Witness> find_weak_witness(const SimpleGraph& g, const ChargeFn& f,
                                         const SearchOptions& opt) {
    const int n = g.vertex_count();
    if (n > 64) throw SizeError("the game search is limited to 64 vertices");
    if (static_cast<int>(f.size()) != n) throw Error("charge domain must match the vertex set");
    for (int v = 0; v < n; ++v)
        if (f[static_cast<size_t>(v)] < 0) return std::nullopt;

    Searcher s(g, opt);
    std::vector<int> charge = f;
    uint64_t live = n == 64 ? ~0ull : (1ull << n) - 1;
    if (!s.run(live, charge)) return std::nullopt;
    Witness wit(s.moves.rbegin(), s.moves.rend());
    if (!verify(g, f, wit, false))
        throw EngineBug("search produced a witness that does not verify");
    return wit;
}

std::optional<Witness> find_strong_witness(const SimpleGraph& g, const ChargeFn& f) {
    const int n = g.vertex_count();
    if (static_cast<int>(f.size()) != n) throw Error("charge domain must match the vertex set");
    // Peel from the back: any vertex with deg_live(v) <= f(v) can safely go
    // last; the surviving graph keeps the property iff the original had it.
    std::vector<int> deg(static_cast<size_t>(n));
    std::vector<char> gone(static_cast<size_t>(n), 0);
    for (VertexId v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = g.degree(v);
    std::vector<VertexId> reverse_order;
    for (int step = 0; step < n; ++step) {
        VertexId pick = kBlank;
        for (VertexId v = 0; v < n; ++v)
            if (!gone[static_cast<size_t>(v)] &&
                deg[static_cast<size_t>(v)] <= f[static_cast<size_t>(v)]) {
                pick = v;
                break;
            }
        if (pick == kBlank) return std::nullopt;
        gone[static_cast<size_t>(pick)] = 1;
        reverse_order.push_back(pick);
        for (VertexId w : g.neighbors(pick))
            if (!gone[static_cast<size_t>(w)]) --deg[static_cast<size_t>(w)];
    }
    Witness wit;
    for (auto it = reverse_order.rbegin(); it != reverse_order.rend(); ++it)
        wit.push_back({*it, kBlank});
    if (!verify(g, f, wit, false))
        throw EngineBug("peeling produced a Delete witness that does not verify");
    return wit;
}

int weak_degeneracy(const SimpleGraph& g, Witness* wit, const SearchOptions& opt) {
    const int upper = degeneracy(g);
    for (int d = 0;; ++d) {
        auto w = find_weak_witness(g, constant_charge(g.vertex_count(), d), opt);
        if (w) {
            if (wit) *wit = std::move(*w);
            return d;
        }
        if (d >= upper) throw EngineBug("weak degeneracy exceeded the degeneracy bound");
    }
}

namespace {

bool colorable(const SimpleGraph& g, int k, std::vector<int>& color,
               const std::vector<VertexId>& order, size_t idx) {
    if (idx == order.size()) return true;
    VertexId v = order[idx];
    int used_new = 0;
    for (size_t i = 0; i < idx; ++i) used_new = std::max(used_new, color[static_cast<size_t>(order[i])] + 1);
    int limit = std::min(k, used_new + 1); // symmetry break: first unused color at most once
    for (int c = 0; c < limit; ++c) {
        bool ok = true;
        for (VertexId w : g.neighbors(v))
            if (color[static_cast<size_t>(w)] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[static_cast<size_t>(v)] = c;
        if (colorable(g, k, color, order, idx + 1)) return true;
        color[static_cast<size_t>(v)] = -1;
    }
    return false;
}

} // namespace

int chromatic_number(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    if (n > 24) throw SizeError("chromatic_number is limited to 24 vertices");
    std::vector<VertexId> order(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<size_t>(v)] = v;
    std::sort(order.begin(), order.end(),
              [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
    for (int k = 1;; ++k) {
        std::vector<int> color(static_cast<size_t>(n), -1);
        if (colorable(g, k, color, order, 0)) return k;
    }
}

} // namespace wd
