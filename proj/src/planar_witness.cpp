#include "wd/planar_witness.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>
#include <iostream>

namespace wd {

namespace {

bool contains(const std::vector<VertexId>& v, VertexId x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

std::vector<VertexId> sorted_unique(std::vector<VertexId> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<VertexId> set_intersect(const std::vector<VertexId>& a, std::vector<VertexId> b) {
    b = sorted_unique(std::move(b));
    std::vector<VertexId> out;
    for (VertexId x : a)
        if (std::binary_search(b.begin(), b.end(), x)) out.push_back(x);
    return out;
}

std::vector<VertexId> set_minus(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    std::vector<VertexId> out;
    for (VertexId x : a)
        if (!contains(b, x)) out.push_back(x);
    return out;
}

std::vector<VertexId> common_neighbors(const SimpleGraph& g, VertexId a, VertexId b) {
    std::vector<VertexId> out;
    std::set_intersection(g.neighbors(a).begin(), g.neighbors(a).end(), g.neighbors(b).begin(),
                          g.neighbors(b).end(), std::back_inserter(out));
    return out;
}

int deg_into(const SimpleGraph& g, VertexId v, const std::vector<VertexId>& set) {
    int d = 0;
    for (VertexId w : g.neighbors(v))
        if (contains(set, w)) ++d;
    return d;
}

} // namespace

Instance make_instance(PlaneGraph g, std::vector<VertexId> s, std::vector<VertexId> i_set) {
    validate(g);
    const int n = g.graph.vertex_count();
    if (s.size() > 3) throw InstanceError(InstanceErrorCode::s_too_large, "|S| exceeds 3");
    {
        auto su = sorted_unique(s);
        if (su.size() != s.size())
            throw InstanceError(InstanceErrorCode::s_duplicate, "S has repeated vertices");
    }
    Boundary bd = boundary(g);
    for (VertexId v : s) {
        if (v < 0 || v >= n || !bd.has(v))
            throw InstanceError(InstanceErrorCode::s_not_on_boundary,
                                "S member " + std::to_string(v) + " is not on the outer face");
    }

    // normalize S into boundary path order
    if (s.size() == 2) {
        if (!bd.has_edge(s[0], s[1]))
            throw InstanceError(InstanceErrorCode::s_not_consecutive,
                                "S is not consecutive on the outer face");
        if (s[0] > s[1]) std::swap(s[0], s[1]);
    } else if (s.size() == 3) {
        int bd_edges = 0;
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                if (bd.has_edge(s[static_cast<size_t>(a)], s[static_cast<size_t>(b)])) ++bd_edges;
        if (bd_edges >= 3) {
            std::sort(s.begin(), s.end()); // boundary triangle; any order is a path
        } else {
            VertexId mid = kBlank;
            for (VertexId c : s) {
                int deg = 0;
                for (VertexId o : s)
                    if (o != c && bd.has_edge(c, o)) ++deg;
                if (deg == 2) mid = c;
            }
            if (mid == kBlank)
                throw InstanceError(InstanceErrorCode::s_not_consecutive,
                                    "S is not consecutive on the outer face");
            std::vector<VertexId> ends;
            for (VertexId c : s)
                if (c != mid) ends.push_back(c);
            if (!bd.has_edge(ends[0], mid) || !bd.has_edge(mid, ends[1]))
                throw InstanceError(InstanceErrorCode::s_not_consecutive,
                                    "S is not consecutive on the outer face");
            if (ends[0] > ends[1]) std::swap(ends[0], ends[1]);
            s = {ends[0], mid, ends[1]};
        }
    }

    i_set = sorted_unique(std::move(i_set));
    for (VertexId v : i_set) {
        if (v < 0 || v >= n || !bd.has(v))
            throw InstanceError(InstanceErrorCode::i_not_on_boundary,
                                "I member " + std::to_string(v) + " is not on the outer face");
        if (contains(s, v))
            throw InstanceError(InstanceErrorCode::i_intersects_s,
                                "I member " + std::to_string(v) + " lies in S");
    }
    for (size_t a = 0; a < i_set.size(); ++a)
        for (size_t b = a + 1; b < i_set.size(); ++b)
            if (g.graph.has_edge(i_set[a], i_set[b]))
                throw InstanceError(InstanceErrorCode::i_not_independent,
                                    "I is not independent: edge " + std::to_string(i_set[a]) +
                                        " " + std::to_string(i_set[b]));
    for (VertexId v : i_set)
        if (deg_into(g.graph, v, s) >= 3)
            throw InstanceError(InstanceErrorCode::i_three_neighbors_in_s,
                                "I member " + std::to_string(v) + " has 3 neighbors in S");

    Instance inst;
    inst.f.assign(static_cast<size_t>(n), 0);
    for (VertexId v = 0; v < n; ++v) {
        if (contains(s, v)) continue;
        int base = !bd.has(v) ? 4 : (std::binary_search(i_set.begin(), i_set.end(), v) ? 2 : 3);
        inst.f[static_cast<size_t>(v)] = base - deg_into(g.graph, v, s);
    }
    inst.g = std::move(g);
    inst.s = std::move(s);
    inst.i_set = std::move(i_set);
    return inst;
}

Residual residual_game(const Instance& inst) {
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < inst.g.graph.vertex_count(); ++v)
        if (!contains(inst.s, v)) keep.push_back(v);
    auto ind = inst.g.graph.induced(keep);
    Residual r;
    r.graph = std::move(ind.graph);
    r.to_parent = std::move(ind.to_parent);
    r.from_parent = std::move(ind.from_parent);
    r.f.assign(r.to_parent.size(), 0);
    for (size_t i = 0; i < r.to_parent.size(); ++i)
        r.f[i] = inst.f[static_cast<size_t>(r.to_parent[i])];
    return r;
}

Witness map_witness(const Witness& w, const std::vector<VertexId>& map) {
    Witness out;
    out.reserve(w.size());
    for (const Move& m : w) {
        VertexId v = map[static_cast<size_t>(m.vertex)];
        VertexId t = m.save_target == kBlank ? kBlank : map[static_cast<size_t>(m.save_target)];
        if (v == kBlank || (m.save_target != kBlank && t == kBlank))
            throw EngineBug("witness references a vertex outside the id map");
        out.push_back({v, t});
    }
    return out;
}

namespace {

struct Child {
    Instance inst;
    std::vector<VertexId> to_parent;
};

struct Frame {
    Instance inst;
    int rule = 0;
    Witness prefix, suffix, acc;
    std::vector<Child> children;
    size_t next_child = 0;
    std::pair<VertexId, VertexId> added_edge{kBlank, kBlank}; // R9 only
};

struct Measure {
    long long a, b, c, d;
    auto operator<=>(const Measure&) const = default;
};

Measure measure_of(const Instance& inst) {
    Boundary bd = boundary(inst.g);
    long long n = inst.g.graph.vertex_count();
    long long m = inst.g.graph.edge_count();
    long long bd_off_s = 0;
    for (VertexId v = 0; v < n; ++v)
        if (bd.has(v) && !contains(inst.s, v)) ++bd_off_s;
    return {n, 3 * n - 6 - m, 3 - static_cast<long long>(inst.s.size()),
            bd_off_s - static_cast<long long>(inst.i_set.size())};
}

std::string shape_of(const Instance& inst) {
    return "n=" + std::to_string(inst.g.graph.vertex_count()) +
           " m=" + std::to_string(inst.g.graph.edge_count()) +
           " |S|=" + std::to_string(inst.s.size()) + " |I|=" + std::to_string(inst.i_set.size());
}

// Boundary labels u1 u2 u3, v1..vt for |S| = 3 along the boundary cycle.
struct Labels {
    std::array<VertexId, 3> u;
    std::vector<VertexId> v;
};

std::vector<Labels> boundary_labelings(const Instance& inst, const Boundary& bd) {
    if (inst.s.size() != 3 || bd.cycle.empty())
        throw EngineBug("boundary labeling requires |S| = 3 on a boundary cycle");
    std::vector<Labels> out;
    for (int pass = 0; pass < 2; ++pass) {
        std::vector<VertexId> cyc = bd.cycle;
        if (pass == 1) std::reverse(cyc.begin(), cyc.end());
        const size_t n = cyc.size();
        size_t p = n;
        for (size_t i = 0; i < n; ++i) {
            if (contains(inst.s, cyc[i]) && !contains(inst.s, cyc[(i + n - 1) % n])) {
                p = i;
                break;
            }
        }
        if (p == n) throw EngineBug("S does not form an arc on the boundary cycle");
        Labels lb;
        for (int j = 0; j < 3; ++j) {
            lb.u[static_cast<size_t>(j)] = cyc[(p + static_cast<size_t>(j)) % n];
            if (!contains(inst.s, lb.u[static_cast<size_t>(j)]))
                throw EngineBug("S does not form an arc on the boundary cycle");
        }
        for (size_t j = 3; j < n; ++j) lb.v.push_back(cyc[(p + j) % n]);
        out.push_back(std::move(lb));
    }
    return out;
}

class Engine {
public:
    std::vector<RuleFiring> trace;

    Witness solve(Instance root) {
        std::vector<Frame> stack;
        stack.push_back(plan(std::move(root)));
        for (;;) {
            if (stack.back().next_child < stack.back().children.size()) {
                Frame child = plan(std::move(stack.back().children[stack.back().next_child].inst));
                stack.push_back(std::move(child));
                continue;
            }
            Witness w = assemble(stack.back());
            std::vector<VertexId> const* map = nullptr;
            stack.pop_back();
            if (stack.empty()) return w;
            Frame& par = stack.back();
            map = &par.children[par.next_child].to_parent;
            for (const Move& m : w)
                par.acc.push_back({(*map)[static_cast<size_t>(m.vertex)],
                                   m.save_target == kBlank
                                       ? kBlank
                                       : (*map)[static_cast<size_t>(m.save_target)]});
            ++par.next_child;
        }
    }

private:
    // Builds a child instance on the kept vertex set (parent ids throughout).
    Child derive(const Instance& par, const std::vector<VertexId>& keep,
                 const std::vector<VertexId>& s_new, const std::vector<VertexId>& i_new) {
        auto ip = induced_plane(par.g, keep);
        auto remap = [&](const std::vector<VertexId>& xs) {
            std::vector<VertexId> out;
            for (VertexId x : xs) {
                VertexId y = ip.from_parent[static_cast<size_t>(x)];
                if (y == kBlank) throw EngineBug("child set references a removed vertex");
                out.push_back(y);
            }
            return out;
        };
        Child ch;
        ch.inst = make_instance(ip.g, remap(s_new), remap(i_new));
        ch.to_parent = std::move(ip.to_parent);
        return ch;
    }

    Child derive_same_graph(const Instance& par, PlaneGraph g, std::vector<VertexId> s_new,
                            std::vector<VertexId> i_new) {
        Child ch;
        ch.inst = make_instance(std::move(g), std::move(s_new), std::move(i_new));
        ch.to_parent.resize(static_cast<size_t>(par.g.graph.vertex_count()));
        for (VertexId v = 0; v < par.g.graph.vertex_count(); ++v)
            ch.to_parent[static_cast<size_t>(v)] = v;
        return ch;
    }

    std::vector<VertexId> all_but(const Instance& inst, const std::vector<VertexId>& drop) {
        std::vector<VertexId> keep;
        for (VertexId v = 0; v < inst.g.graph.vertex_count(); ++v)
            if (!contains(drop, v)) keep.push_back(v);
        return keep;
    }

    void bug(const Instance& inst, int rule, const std::string& what) {
        throw EngineBug("R" + std::to_string(rule) + ": " + what + " [" + shape_of(inst) + "]");
    }

    Frame finish_plan(Frame fr) {
        Measure parent = measure_of(fr.inst);
        for (const Child& ch : fr.children)
            if (!(measure_of(ch.inst) < parent))
                bug(fr.inst, fr.rule, "recursion does not decrease the measure");
        trace.push_back({fr.rule, fr.inst.g.graph.vertex_count(), fr.inst.g.graph.edge_count(),
                         static_cast<int>(fr.inst.s.size()),
                         static_cast<int>(fr.inst.i_set.size())});
        return fr;
    }

    Frame plan(Instance inst) {
        Frame fr;
        fr.inst = std::move(inst);
        const Instance& in = fr.inst;
        const SimpleGraph& G = in.g.graph;
        const int n = G.vertex_count();
        Boundary bd = boundary(in.g);

        // R1: empty residual
        if (n == static_cast<int>(in.s.size())) {
            fr.rule = 1;
            return finish_plan(std::move(fr));
        }

        // R2: disconnected -> one subinstance per component
        if (!G.connected()) {
            fr.rule = 2;
            for (const auto& comp : G.components())
                fr.children.push_back(
                    derive(in, comp, set_intersect(in.s, comp), set_intersect(in.i_set, comp)));
            return finish_plan(std::move(fr));
        }

        // R3: grow S while |S| <= 1
        if (in.s.size() <= 1) {
            VertexId u = kBlank;
            if (in.s.empty()) {
                for (VertexId v = 0; v < n && u == kBlank; ++v)
                    if (bd.has(v)) u = v;
            } else {
                for (const auto& [a, b] : bd.edges) {
                    if (a == in.s[0] && !contains(in.s, b)) u = u == kBlank ? b : std::min(u, b);
                    if (b == in.s[0] && !contains(in.s, a)) u = u == kBlank ? a : std::min(u, a);
                }
            }
            if (u == kBlank) bug(in, 3, "no boundary vertex available to grow S");
            fr.rule = 3;
            fr.prefix = {{u, kBlank}};
            auto s2 = in.s;
            s2.push_back(u);
            fr.children.push_back(derive_same_graph(in, in.g, s2, set_minus(in.i_set, {u})));
            return finish_plan(std::move(fr));
        }

        // R4: split at a cut vertex
        if (auto cuts = G.cut_vertices(); !cuts.empty()) {
            VertexId u = cuts[0];
            auto sub = G.induced(all_but(in, {u}));
            auto comps = sub.graph.components();
            size_t best = 0;
            int best_sc = -1;
            std::vector<std::vector<VertexId>> pcomps;
            for (const auto& c : comps) {
                std::vector<VertexId> pc;
                for (VertexId v : c) pc.push_back(sub.to_parent[static_cast<size_t>(v)]);
                std::sort(pc.begin(), pc.end());
                pcomps.push_back(std::move(pc));
            }
            for (size_t c = 0; c < pcomps.size(); ++c) {
                int sc = static_cast<int>(set_intersect(in.s, pcomps[c]).size());
                if (sc > best_sc) {
                    best_sc = sc;
                    best = c;
                }
            }
            std::vector<VertexId> side1{u}, side2{u};
            for (size_t c = 0; c < pcomps.size(); ++c) {
                auto& dst = c == best ? side1 : side2;
                dst.insert(dst.end(), pcomps[c].begin(), pcomps[c].end());
            }
            std::sort(side1.begin(), side1.end());
            std::sort(side2.begin(), side2.end());
            fr.rule = 4;
            fr.children.push_back(
                derive(in, side1, set_intersect(in.s, side1), set_intersect(in.i_set, side1)));
            auto s2 = set_intersect(in.s, side2);
            if (!contains(s2, u)) s2.push_back(u);
            fr.children.push_back(
                derive(in, side2, s2, set_minus(set_intersect(in.i_set, side2), {u})));
            return finish_plan(std::move(fr));
        }

        // R5: split at a 1-chord, preferring maximal |side1|
        {
            auto cands = chord_candidates(in.g, in.s, 1);
            std::stable_sort(cands.begin(), cands.end(),
                             [](const SeparatingPath& a, const SeparatingPath& b) {
                                 return a.side1.size() > b.side1.size();
                             });
            // A chord endpoint outside S must keep all its S-neighbors on the
            // G1 side, or the G1 subinstance would overstate its charge (this
            // only bites when S straddles the chord, which forces an |S∩side|
            // tie, so the swapped orientation is admissible too).
            auto leaks = [&](const std::vector<VertexId>& side, const std::vector<VertexId>& path) {
                for (VertexId p : path) {
                    if (contains(in.s, p)) continue;
                    for (VertexId nb : G.neighbors(p))
                        if (contains(in.s, nb) && !std::binary_search(side.begin(), side.end(), nb))
                            return true;
                }
                return false;
            };
            bool any_valid = false;
            for (const auto& sp : cands) {
                if (!validate_chord(in.g, sp)) continue;
                any_valid = true;
                VertexId u = sp.path[0], w = sp.path[1];
                std::vector<std::pair<const std::vector<VertexId>*, const std::vector<VertexId>*>> tries;
                bool tie = set_intersect(in.s, sp.side1).size() == set_intersect(in.s, sp.side2).size();
                if (!leaks(sp.side1, sp.path)) tries.push_back({&sp.side1, &sp.side2});
                if (tie && !leaks(sp.side2, sp.path)) tries.push_back({&sp.side2, &sp.side1});
                if (tries.empty()) {
                    tries.push_back({&sp.side1, &sp.side2}); // last resort; verification gates it
                    if (tie) tries.push_back({&sp.side2, &sp.side1});
                }
                for (auto [g1, g2] : tries) {
                    try {
                        Child c1 = derive(in, *g1, set_intersect(in.s, *g1),
                                          set_intersect(in.i_set, *g1));
                        auto s2 = set_intersect(in.s, *g2);
                        for (VertexId x : {u, w})
                            if (!contains(s2, x)) s2.push_back(x);
                        Child c2 = derive(in, *g2, s2,
                                          set_minus(set_intersect(in.i_set, *g2), {u, w}));
                        fr.rule = 5;
                        fr.children.push_back(std::move(c1));
                        fr.children.push_back(std::move(c2));
                        return finish_plan(std::move(fr));
                    } catch (const InstanceError&) {
                        continue; // try the other orientation or the next chord
                    }
                }
            }
            if (any_valid) bug(in, 5, "1-chords exist but none admits a valid reduction");
        }

        // R6: extend I to a maximal independent set of dG - S
        {
            std::vector<char> in_i(static_cast<size_t>(n), 0);
            for (VertexId v : in.i_set) in_i[static_cast<size_t>(v)] = 1;
            for (VertexId u = 0; u < n; ++u) {
                if (!bd.has(u) || contains(in.s, u) || in_i[static_cast<size_t>(u)]) continue;
                bool eligible = true;
                for (VertexId w : G.neighbors(u))
                    if (in_i[static_cast<size_t>(w)] && bd.has_edge(u, w)) eligible = false;
                if (!eligible) continue;
                for (VertexId w : G.neighbors(u))
                    if (in_i[static_cast<size_t>(w)])
                        bug(in, 6, "independence in dG-S but not in G: a 1-chord was missed");
                if (deg_into(G, u, in.s) >= 3)
                    bug(in, 6, "candidate has 3 neighbors in S despite absence of 1-chords");
                auto i2 = in.i_set;
                i2.push_back(u);
                fr.rule = 6;
                fr.children.push_back(derive_same_graph(in, in.g, in.s, i2));
                return finish_plan(std::move(fr));
            }
        }

        // R7: no interior vertices -> G is a cycle; peel the path G - S
        {
            bool all_bd = true;
            for (VertexId v = 0; v < n && all_bd; ++v)
                if (!bd.has(v)) all_bd = false;
            if (all_bd) {
                if (bd.cycle.empty() || G.edge_count() != n) bug(in, 7, "V(G)=V(dG) but G is not a cycle");
                const auto& cyc = bd.cycle;
                size_t start = 0;
                bool found = false;
                for (size_t i = 0; i < cyc.size() && !found; ++i)
                    if (contains(in.s, cyc[i]) && !contains(in.s, cyc[(i + 1) % cyc.size()])) {
                        start = (i + 1) % cyc.size();
                        found = true;
                    }
                if (!found) bug(in, 7, "S is not an arc of the cycle");
                fr.rule = 7;
                for (size_t j = 0; j < cyc.size(); ++j) {
                    VertexId v = cyc[(start + j) % cyc.size()];
                    if (contains(in.s, v)) break;
                    fr.prefix.push_back({v, kBlank});
                }
                if (fr.prefix.size() != static_cast<size_t>(n) - in.s.size())
                    bug(in, 7, "peeling did not cover G - S");
                return finish_plan(std::move(fr));
            }
        }

        // R8: a triangle or 4-cycle with a nonempty interior
        {
            auto cyc = find_enclosing_triangle(in.g);
            if (!cyc) cyc = find_enclosing_quad(in.g);
            if (cyc) {
                const auto& F = *cyc;
                VertexId a = *std::min_element(F.begin(), F.end());
                std::vector<VertexId> sstar;
                {
                    // path order around the cycle, skipping a
                    size_t ai = static_cast<size_t>(std::find(F.begin(), F.end(), a) - F.begin());
                    for (size_t j = 1; j < F.size(); ++j) sstar.push_back(F[(ai + j) % F.size()]);
                }
                auto interior = cycle_interior(in.g, F);
                if (interior.empty()) bug(in, 8, "enclosing cycle reported with empty interior");
                fr.rule = 8;
                fr.children.push_back(derive(in, all_but(in, interior), in.s, in.i_set));
                std::vector<VertexId> keep2 = interior;
                keep2.insert(keep2.end(), sstar.begin(), sstar.end());
                fr.children.push_back(derive(in, keep2, sstar, {}));
                return finish_plan(std::move(fr));
            }
        }

        // R9: triangulate a non-triangular inner face and project back
        {
            std::set<std::vector<VertexId>> outer_canon;
            for (const auto& w : in.g.outer) outer_canon.insert(canonical_walk(w));
            std::optional<std::vector<VertexId>> face;
            std::vector<VertexId> best_canon;
            for (const auto& w : faces(in.g)) {
                if (w.size() < 4) continue;
                auto cw = canonical_walk(w);
                if (outer_canon.count(cw)) continue;
                if (!face || cw < best_canon) {
                    face = w;
                    best_canon = cw;
                }
            }
            if (face) {
                const auto& w = *face;
                if (sorted_unique(w).size() != w.size())
                    bug(in, 9, "inner face walk repeats a vertex in a 2-connected graph");
                VertexId v1 = kBlank;
                for (VertexId x : sorted_unique(w))
                    if (!bd.has(x)) {
                        v1 = x;
                        break;
                    }
                if (v1 == kBlank) bug(in, 9, "non-triangular inner face lies entirely on dG");
                size_t i0 = static_cast<size_t>(std::find(w.begin(), w.end(), v1) - w.begin());
                auto lbl = [&](size_t j) { return w[(i0 + j) % w.size()]; };
                VertexId eu, ew;
                if (!G.has_edge(lbl(0), lbl(2))) {
                    eu = lbl(0);
                    ew = lbl(2);
                } else {
                    if (G.has_edge(lbl(1), lbl(3)))
                        bug(in, 9, "both short diagonals present on a non-triangular face");
                    if (bd.has(lbl(1)) && bd.has(lbl(3)))
                        bug(in, 9, "fallback diagonal has both ends on dG");
                    eu = lbl(1);
                    ew = lbl(3);
                }
                fr.rule = 9;
                fr.added_edge = {eu, ew};
                fr.children.push_back(
                    derive_same_graph(in, add_edge_in_face(in.g, eu, ew, w), in.s, in.i_set));
                return finish_plan(std::move(fr));
            }
        }

        // R10: grow S from 2 to 3
        if (in.s.size() == 2) {
            VertexId u = kBlank;
            for (const auto& [a, b] : bd.edges) {
                if (contains(in.s, a) && !contains(in.s, b)) u = u == kBlank ? b : std::min(u, b);
                if (contains(in.s, b) && !contains(in.s, a)) u = u == kBlank ? a : std::min(u, a);
            }
            if (u == kBlank) bug(in, 10, "no boundary neighbor available to grow S");
            fr.rule = 10;
            fr.prefix = {{u, kBlank}};
            auto s2 = in.s;
            s2.push_back(u);
            fr.children.push_back(derive_same_graph(in, in.g, s2, set_minus(in.i_set, {u})));
            return finish_plan(std::move(fr));
        }

        if (in.s.size() != 3) bug(in, 11, "expected |S| = 3 after R10");
        VertexId u2 = in.s[1];

        // R11: split at a reducible 2-chord
        {
            for (const auto& sp : chord_candidates(in.g, in.s, 2)) {
                VertexId x = sp.path[0], y = sp.path[1], z = sp.path[2];
                if (x == u2 || z == u2) continue;
                if (set_intersect(in.s, sp.side1).size() != in.s.size()) continue;
                // tolerated wheel configuration: a in I adjacent to x, y, z
                // with side2 = {x, y, z, a}
                bool special = false;
                for (VertexId a : set_intersect(in.i_set, sp.side2)) {
                    if (a == x || a == z) continue;
                    if (G.has_edge(a, x) && G.has_edge(a, y) && G.has_edge(a, z)) {
                        special = true;
                        break;
                    }
                }
                if (special) continue;
                if (!validate_chord(in.g, sp)) continue;
                try {
                    Child c1 = derive(in, sp.side1, in.s, set_intersect(in.i_set, sp.side1));
                    Child c2 = derive(in, sp.side2, sp.path,
                                      set_minus(set_intersect(in.i_set, sp.side2), {x, z}));
                    fr.rule = 11;
                    fr.children.push_back(std::move(c1));
                    fr.children.push_back(std::move(c2));
                    return finish_plan(std::move(fr));
                } catch (const InstanceError&) {
                    continue;
                }
            }
        }

        auto labelings = boundary_labelings(in, bd);
        auto in_i = [&](VertexId v) {
            return std::binary_search(in.i_set.begin(), in.i_set.end(), v);
        };

        // R12: v1 in I (either orientation)
        for (const Labels& L : labelings) {
            if (L.v.size() < 2) bug(in, 12, "boundary cycle shorter than 5");
            VertexId v1 = L.v[0], v2 = L.v[1];
            if (!in_i(v1)) continue;
            if (in_i(v2)) bug(in, 12, "adjacent boundary vertices both in I");
            if (in.f[static_cast<size_t>(v1)] != 1) bug(in, 12, "f(v1) != 1 with v1 in I");
            size_t t = L.v.size();
            bool v3_in_i = t >= 3 && in_i(L.v[2]);
            fr.rule = 12;
            if (!v3_in_i) {
                fr.prefix = {{v1, kBlank}};
                auto i2 = set_minus(in.i_set, {v1});
                i2.push_back(v2);
                fr.children.push_back(derive(in, all_but(in, {v1}), in.s, i2));
            } else {
                VertexId v3 = L.v[2];
                if (in.f[static_cast<size_t>(v2)] != 3) bug(in, 12, "f(v2) != 3 in the save case");
                auto commons = common_neighbors(G, v1, v2);
                if (commons.size() > 1) bug(in, 12, "edge v1v2 lies on two triangles with interiors");
                auto i2 = set_minus(in.i_set, {v1});
                if (!commons.empty()) {
                    VertexId cu = commons[0];
                    if (contains(in.s, cu) || bd.has(cu))
                        bug(in, 12, "common neighbor of v1, v2 is not interior");
                    if (deg_into(G, cu, in.s) >= 3)
                        bug(in, 12, "common neighbor adjacent to all of S (missed 2-chord)");
                    for (VertexId w : G.neighbors(cu))
                        if (in_i(w) && w != v1)
                            bug(in, 12, "common neighbor adjacent to I (missed 2-chord)");
                    i2.push_back(cu);
                }
                fr.prefix = {{v2, v3}, {v1, kBlank}};
                fr.children.push_back(derive(in, all_but(in, {v1, v2}), in.s, i2));
            }
            return finish_plan(std::move(fr));
        }

        // R13: v4 not in I (either orientation)
        for (const Labels& L : labelings) {
            VertexId v1 = L.v[0], v2 = L.v[1];
            if (in_i(v1)) bug(in, 13, "v1 in I after R12");
            if (!in_i(v2)) bug(in, 13, "neither v1 nor v2 in I despite maximality");
            size_t t = L.v.size();
            if (t < 3) bug(in, 13, "t = 2 escaped R12");
            VertexId v3 = L.v[2];
            bool v4_in_i = t >= 4 && in_i(L.v[3]);
            if (v4_in_i) continue;
            if (in_i(v3)) bug(in, 13, "v3 in I adjacent to v2 in I");
            fr.rule = 13;
            fr.prefix = {{v2, kBlank}};
            auto i2 = set_minus(in.i_set, {v2});
            i2.push_back(v1);
            i2.push_back(v3);
            fr.children.push_back(derive(in, all_but(in, {v2}), in.s, i2));
            return finish_plan(std::move(fr));
        }

        // R14-R16 work on the canonical orientation
        {
            const Labels& L = labelings[0];
            if (L.v.size() < 5) bug(in, 14, "t < 5 after R12/R13");
            VertexId v1 = L.v[0], v2 = L.v[1], v3 = L.v[2], v4 = L.v[3], v5 = L.v[4];
            if (in_i(v1) || !in_i(v2) || in_i(v3) || !in_i(v4) || in_i(v5))
                bug(in, 14, "I pattern on v1..v5 is not (out,in,out,in,out)");
            if (in.f[static_cast<size_t>(v1)] != 2 || in.f[static_cast<size_t>(v2)] != 2 ||
                in.f[static_cast<size_t>(v3)] != 3 || in.f[static_cast<size_t>(v4)] != 2 ||
                in.f[static_cast<size_t>(v5)] < 2)
                bug(in, 14, "charges on v1..v5 do not match the reduced shape");

            auto interior_commons = [&](VertexId a, VertexId b, VertexId skip) {
                std::vector<VertexId> out;
                for (VertexId c : common_neighbors(G, a, b)) {
                    if (c == skip) continue;
                    if (bd.has(c)) bug(in, 14, "boundary common neighbor implies a missed chord");
                    out.push_back(c);
                }
                return out;
            };

            auto xs = interior_commons(v2, v3, kBlank);
            if (xs.size() > 1) bug(in, 14, "edge v2v3 lies on two inner triangles");
            VertexId x = xs.empty() ? kBlank : xs[0];

            if (x == kBlank || !G.has_edge(x, v1)) {
                fr.rule = 14;
                fr.prefix = {{v3, v4}, {v2, kBlank}};
                auto i2 = set_minus(in.i_set, {v2});
                i2.push_back(v1);
                if (x != kBlank) {
                    if (deg_into(G, x, in.s) >= 3) bug(in, 14, "x adjacent to all of S");
                    for (VertexId w : G.neighbors(x))
                        if (in_i(w) && w != v2) bug(in, 14, "x adjacent to I (missed 2-chord)");
                    i2.push_back(x);
                }
                fr.children.push_back(derive(in, all_but(in, {v2, v3}), in.s, i2));
                return finish_plan(std::move(fr));
            }

            // x is adjacent to v1, v2, v3
            {
                std::vector<VertexId> nv2{v1, v3, x};
                std::sort(nv2.begin(), nv2.end());
                if (G.neighbors(v2) != nv2) bug(in, 15, "N(v2) != {v1, x, v3}");
                for (VertexId w : G.neighbors(x))
                    if (bd.has(w) && w != v1 && w != v2 && w != v3)
                        bug(in, 15, "x has a boundary neighbor outside {v1,v2,v3}");
                if (in.f[static_cast<size_t>(x)] != 4) bug(in, 15, "f(x) != 4");
            }

            auto ys = interior_commons(v3, x, v2);
            if (ys.size() > 1) bug(in, 15, "edge v3x lies on two inner triangles");
            VertexId y = ys.empty() ? kBlank : ys[0];

            if (y != kBlank) {
                if (G.has_edge(y, v1)) bug(in, 15, "y adjacent to v1 (missed 2-chord)");
                if (deg_into(G, y, in.s) >= 3) bug(in, 15, "y adjacent to all of S");
                for (VertexId w : G.neighbors(y))
                    if (in_i(w) && w != v2 && w != v4)
                        bug(in, 15, "y adjacent to I beyond v4 (missed 2-chord)");
            }

            if (y == kBlank || !G.has_edge(y, v4)) {
                fr.rule = 15;
                fr.prefix = {{v3, v4}, {x, v2}};
                fr.suffix = {{v2, kBlank}};
                auto i2 = set_minus(in.i_set, {v2});
                i2.push_back(v1);
                if (y != kBlank) i2.push_back(y);
                fr.children.push_back(derive(in, all_but(in, {v2, v3, x}), in.s, i2));
                return finish_plan(std::move(fr));
            }

            // R16: endgame around v2, v3, x, y
            {
                std::vector<VertexId> nv3{v2, x, y, v4};
                std::sort(nv3.begin(), nv3.end());
                if (G.neighbors(v3) != nv3) bug(in, 16, "N(v3) != {v2, x, y, v4}");
            }
            fr.rule = 16;
            fr.prefix = {{x, v2}};
            fr.suffix = {{v3, kBlank}, {v2, kBlank}};
            auto i2 = set_minus(in.i_set, {v2});
            i2.push_back(v1);
            fr.children.push_back(derive(in, all_but(in, {v2, v3, x}), in.s, i2));
            return finish_plan(std::move(fr));
        }
    }

    Witness assemble(Frame& fr) {
        Witness w = fr.prefix;
        w.insert(w.end(), fr.acc.begin(), fr.acc.end());
        w.insert(w.end(), fr.suffix.begin(), fr.suffix.end());

        Residual r = residual_game(fr.inst);
        if (fr.rule == 9) {
            VertexId a = r.from_parent[static_cast<size_t>(fr.added_edge.first)];
            VertexId b = r.from_parent[static_cast<size_t>(fr.added_edge.second)];
            if (a != kBlank && b != kBlank) {
                SimpleGraph super = r.graph;
                super.add_edge(a, b);
                Witness wg = map_witness(w, r.from_parent);
                wg = project(wg, super, r.graph, r.f);
                w = map_witness(wg, r.to_parent);
            }
        }

        Witness wg = map_witness(w, r.from_parent);
        auto res = verify(r.graph, r.f, wg, false);
        if (!res) {
#ifdef WD_ENGINE_DEBUG_DUMP
            std::cerr << "=== stuck instance (rule R" << fr.rule << ") ===\n";
            std::cerr << fr.inst.g.graph.vertex_count() << " vertices, edges:";
            for (auto [a, b] : fr.inst.g.graph.edges()) std::cerr << " " << a << "-" << b;
            std::cerr << "\nrotation:\n";
            for (int v = 0; v < fr.inst.g.graph.vertex_count(); ++v) {
                std::cerr << "  " << v << ":";
                for (auto x : fr.inst.g.rotation[static_cast<size_t>(v)]) std::cerr << " " << x;
                std::cerr << "\n";
            }
            std::cerr << "outer:";
            for (const auto& wk : fr.inst.g.outer) {
                for (auto x : wk) std::cerr << " " << x;
                std::cerr << " |";
            }
            std::cerr << "\nS:";
            for (auto x : fr.inst.s) std::cerr << " " << x;
            std::cerr << "  I:";
            for (auto x : fr.inst.i_set) std::cerr << " " << x;
            std::cerr << "\nf:";
            for (auto x : fr.inst.f) std::cerr << " " << x;
            std::cerr << "\nwitness:";
            for (const auto& m : w)
                std::cerr << " (" << m.vertex << "," << m.save_target << ")";
            std::cerr << "\n";
#endif
            throw EngineBug("R" + std::to_string(fr.rule) +
                            " composed a witness that fails verification (" + res.message + ") [" +
                            shape_of(fr.inst) + "]");
        }
        return w;
    }
};

} // namespace

EngineResult witness(const Instance& inst) {
    Engine e;
    EngineResult out;
    out.wit = e.solve(inst);
    out.trace = std::move(e.trace);
    return out;
}

Witness witness_planar_4(const PlaneGraph& g) {
    Instance inst = make_instance(g, {}, {});
    EngineResult r = witness(inst);
    auto chk = verify(g.graph, constant_charge(g.graph.vertex_count(), 4), r.wit, false);
    if (!chk)
        throw EngineBug("planar witness does not verify under the constant charge 4: " +
                        chk.message);
    return r.wit;
}

} // namespace wd
