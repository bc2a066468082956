#include "wd/plane_graph.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace wd {
namespace {

// Directed edge k of vertex u is (u -> rotation[u][k]); its id is ofs[u] + k.
struct FaceData {
    std::vector<int> ofs;
    std::vector<std::vector<VertexId>> walks;  // includes [v] per isolated vertex
    std::vector<int> face_of;                  // directed edge id -> walk index
    int dir_count = 0;
};

int rot_index(const PlaneGraph& g, VertexId v, VertexId u) {
    const auto& r = g.rotation[static_cast<size_t>(v)];
    for (size_t k = 0; k < r.size(); ++k)
        if (r[k] == u) return static_cast<int>(k);
    throw EmbeddingError("rotation of " + std::to_string(v) + " is missing neighbor " + std::to_string(u));
}

int dir_id(const FaceData& fd, const PlaneGraph& g, VertexId u, VertexId v) {
    return fd.ofs[static_cast<size_t>(u)] + rot_index(g, u, v);
}

FaceData compute_faces(const PlaneGraph& g) {
    const int n = g.graph.vertex_count();
    FaceData fd;
    fd.ofs.assign(static_cast<size_t>(n) + 1, 0);
    for (VertexId v = 0; v < n; ++v)
        fd.ofs[static_cast<size_t>(v) + 1] =
            fd.ofs[static_cast<size_t>(v)] + static_cast<int>(g.rotation[static_cast<size_t>(v)].size());
    fd.dir_count = fd.ofs[static_cast<size_t>(n)];

    // next directed edge: (u -> v) continues as (v -> successor of u in rotation(v))
    std::vector<int> next(static_cast<size_t>(fd.dir_count), -1);
    for (VertexId u = 0; u < n; ++u) {
        const auto& ru = g.rotation[static_cast<size_t>(u)];
        for (size_t k = 0; k < ru.size(); ++k) {
            VertexId v = ru[k];
            int p = rot_index(g, v, u);
            int dv = static_cast<int>(g.rotation[static_cast<size_t>(v)].size());
            next[static_cast<size_t>(fd.ofs[static_cast<size_t>(u)] + static_cast<int>(k))] =
                fd.ofs[static_cast<size_t>(v)] + (p + 1) % dv;
        }
    }

    fd.face_of.assign(static_cast<size_t>(fd.dir_count), -1);
    for (int e0 = 0; e0 < fd.dir_count; ++e0) {
        if (fd.face_of[static_cast<size_t>(e0)] != -1) continue;
        std::vector<VertexId> walk;
        int fid = static_cast<int>(fd.walks.size());
        int e = e0;
        do {
            // source vertex of e
            VertexId u = static_cast<VertexId>(
                std::upper_bound(fd.ofs.begin(), fd.ofs.end(), e) - fd.ofs.begin() - 1);
            walk.push_back(u);
            fd.face_of[static_cast<size_t>(e)] = fid;
            e = next[static_cast<size_t>(e)];
        } while (e != e0);
        fd.walks.push_back(std::move(walk));
    }
    for (VertexId v = 0; v < n; ++v)
        if (g.rotation[static_cast<size_t>(v)].empty()) fd.walks.push_back({v});
    return fd;
}

// walk index of each entry of g.outer within fd.walks (exact cyclic match)
std::vector<int> locate_outer(const PlaneGraph& g, const FaceData& fd) {
    std::map<std::vector<VertexId>, int> canon;
    for (size_t i = 0; i < fd.walks.size(); ++i)
        canon.emplace(canonical_walk(fd.walks[i]), static_cast<int>(i));
    std::vector<int> out;
    for (const auto& w : g.outer) {
        auto it = canon.find(canonical_walk(w));
        if (it == canon.end())
            throw EmbeddingError("outer walk is not a face of the embedding");
        out.push_back(it->second);
    }
    return out;
}

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[static_cast<size_t>(x)] != x) {
            p[static_cast<size_t>(x)] = p[static_cast<size_t>(p[static_cast<size_t>(x)])];
            x = p[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { p[static_cast<size_t>(find(a))] = find(b); }
};

std::vector<int> component_ids(const SimpleGraph& g) {
    auto comps = g.components();
    std::vector<int> id(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t c = 0; c < comps.size(); ++c)
        for (VertexId v : comps[c]) id[static_cast<size_t>(v)] = static_cast<int>(c);
    return id;
}

using EdgeKey = std::pair<VertexId, VertexId>;
EdgeKey edge_key(VertexId a, VertexId b) { return {std::min(a, b), std::max(a, b)}; }

} // namespace

std::vector<VertexId> canonical_walk(std::vector<VertexId> w) {
    if (w.size() <= 1) return w;
    std::vector<VertexId> best = w;
    for (size_t s = 1; s < w.size(); ++s) {
        std::rotate(w.begin(), w.begin() + 1, w.end());
        if (w < best) best = w;
    }
    return best;
}

void validate(const PlaneGraph& g) {
    const int n = g.graph.vertex_count();
    if (static_cast<int>(g.rotation.size()) != n)
        throw EmbeddingError("rotation table size differs from vertex count");
    for (VertexId v = 0; v < n; ++v) {
        auto r = g.rotation[static_cast<size_t>(v)];
        std::sort(r.begin(), r.end());
        if (r != g.graph.neighbors(v))
            throw EmbeddingError("rotation of vertex " + std::to_string(v) +
                                 " is not a permutation of its neighbors");
    }

    FaceData fd = compute_faces(g);
    size_t total = 0;
    for (const auto& w : fd.walks)
        if (w.size() > 1 || (w.size() == 1 && !g.rotation[static_cast<size_t>(w[0])].empty()))
            total += w.size();
    if (total != static_cast<size_t>(2 * g.graph.edge_count()))
        throw EmbeddingError("face traversal does not cover every directed edge exactly once");

    // Euler per component
    auto comp_of = component_ids(g.graph);
    int comp_count = n == 0 ? 0 : 1 + *std::max_element(comp_of.begin(), comp_of.end());
    std::vector<int> nc(static_cast<size_t>(comp_count), 0), mc(static_cast<size_t>(comp_count), 0),
        fc(static_cast<size_t>(comp_count), 0);
    for (VertexId v = 0; v < n; ++v) ++nc[static_cast<size_t>(comp_of[static_cast<size_t>(v)])];
    for (const auto& [u, v] : g.graph.edges()) {
        (void)v;
        ++mc[static_cast<size_t>(comp_of[static_cast<size_t>(u)])];
    }
    for (const auto& w : fd.walks) ++fc[static_cast<size_t>(comp_of[static_cast<size_t>(w[0])])];
    for (int c = 0; c < comp_count; ++c)
        if (nc[static_cast<size_t>(c)] - mc[static_cast<size_t>(c)] + fc[static_cast<size_t>(c)] != 2)
            throw EmbeddingError("Euler check failed on a component: rotation system is not planar");

    if (static_cast<int>(g.outer.size()) != comp_count)
        throw EmbeddingError("need exactly one outer walk per connected component, got " +
                             std::to_string(g.outer.size()));
    auto outer_idx = locate_outer(g, fd); // throws if some walk is not a face
    std::vector<char> comp_seen(static_cast<size_t>(comp_count), 0);
    for (size_t i = 0; i < g.outer.size(); ++i) {
        int c = comp_of[static_cast<size_t>(g.outer[i][0])];
        if (comp_seen[static_cast<size_t>(c)])
            throw EmbeddingError("two outer walks lie in the same component");
        comp_seen[static_cast<size_t>(c)] = 1;
        (void)outer_idx;
    }
}

std::vector<std::vector<VertexId>> faces(const PlaneGraph& g) {
    return compute_faces(g).walks;
}

bool Boundary::has_edge(VertexId u, VertexId v) const {
    return std::binary_search(edges.begin(), edges.end(), edge_key(u, v));
}

Boundary boundary(const PlaneGraph& g) {
    Boundary b;
    b.on_boundary.assign(static_cast<size_t>(g.graph.vertex_count()), 0);
    std::set<EdgeKey> es;
    for (const auto& w : g.outer) {
        for (size_t i = 0; i < w.size(); ++i) {
            b.on_boundary[static_cast<size_t>(w[i])] = 1;
            if (w.size() > 1) es.insert(edge_key(w[i], w[(i + 1) % w.size()]));
        }
    }
    b.edges.assign(es.begin(), es.end());
    if (g.outer.size() == 1) {
        const auto& w = g.outer[0];
        std::set<VertexId> distinct(w.begin(), w.end());
        if (w.size() >= 3 && distinct.size() == w.size()) b.cycle = w;
    }
    return b;
}

namespace {

// Shared machinery: split validity check used by find_chords and split().
bool try_split(const PlaneGraph& g, const std::vector<VertexId>& path,
               std::vector<VertexId> side_a, std::vector<VertexId> side_b,
               std::pair<InducedPlane, InducedPlane>* out) {
    const int n = g.graph.vertex_count();
    if (static_cast<int>(side_a.size()) >= n || static_cast<int>(side_b.size()) >= n) return false;
    std::vector<char> in_a(static_cast<size_t>(n), 0), in_b(static_cast<size_t>(n), 0);
    for (VertexId v : side_a) in_a[static_cast<size_t>(v)] = 1;
    for (VertexId v : side_b) in_b[static_cast<size_t>(v)] = 1;
    std::vector<char> in_p(static_cast<size_t>(n), 0);
    for (VertexId v : path) in_p[static_cast<size_t>(v)] = 1;
    for (VertexId v = 0; v < n; ++v) {
        if (!in_a[static_cast<size_t>(v)] && !in_b[static_cast<size_t>(v)]) return false;
        if (in_a[static_cast<size_t>(v)] && in_b[static_cast<size_t>(v)] && !in_p[static_cast<size_t>(v)])
            return false;
    }
    for (VertexId v : path)
        if (!in_a[static_cast<size_t>(v)] || !in_b[static_cast<size_t>(v)]) return false;
    // every edge must land in a side
    for (const auto& [u, v] : g.graph.edges())
        if (!((in_a[static_cast<size_t>(u)] && in_a[static_cast<size_t>(v)]) ||
              (in_b[static_cast<size_t>(u)] && in_b[static_cast<size_t>(v)])))
            return false;

    InducedPlane a, b;
    try {
        a = induced_plane(g, side_a);
        b = induced_plane(g, side_b);
    } catch (const Error&) {
        return false;
    }
    for (const InducedPlane* ip : {&a, &b}) {
        if (!ip->g.graph.connected()) return false;
        Boundary bd = boundary(ip->g);
        for (size_t i = 0; i < path.size(); ++i) {
            VertexId pv = ip->from_parent[static_cast<size_t>(path[i])];
            if (pv == kBlank || !bd.has(pv)) return false;
            if (i + 1 < path.size()) {
                VertexId pw = ip->from_parent[static_cast<size_t>(path[i + 1])];
                if (!bd.has_edge(pv, pw)) return false;
            }
        }
    }
    if (out) *out = {std::move(a), std::move(b)};
    return true;
}

// Region decomposition of the inner faces after cutting the path's edges.
// Returns per-region sorted vertex sets (path vertices excluded), or empty
// if the cut does not disconnect the inner dual.
std::vector<std::vector<VertexId>> cut_regions(const PlaneGraph& g, const FaceData& fd,
                                               int outer_face, const std::vector<VertexId>& path) {
    std::set<EdgeKey> cut;
    for (size_t i = 0; i + 1 < path.size(); ++i) cut.insert(edge_key(path[i], path[i + 1]));

    const int F = static_cast<int>(fd.walks.size());
    std::vector<int> region(static_cast<size_t>(F), -1);
    region[static_cast<size_t>(outer_face)] = -2; // excluded
    int rid = 0;
    for (int f0 = 0; f0 < F; ++f0) {
        if (region[static_cast<size_t>(f0)] != -1) continue;
        std::vector<int> stack{f0};
        region[static_cast<size_t>(f0)] = rid;
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            const auto& w = fd.walks[static_cast<size_t>(f)];
            if (w.size() <= 1) continue;
            for (size_t i = 0; i < w.size(); ++i) {
                VertexId u = w[i], v = w[(i + 1) % w.size()];
                if (cut.count(edge_key(u, v))) continue;
                int f2 = fd.face_of[static_cast<size_t>(dir_id(fd, g, v, u))]; // face across the edge
                if (f2 != outer_face && region[static_cast<size_t>(f2)] == -1) {
                    region[static_cast<size_t>(f2)] = rid;
                    stack.push_back(f2);
                }
            }
        }
        ++rid;
    }

    std::vector<char> in_path(static_cast<size_t>(g.graph.vertex_count()), 0);
    for (VertexId v : path) in_path[static_cast<size_t>(v)] = 1;
    std::vector<std::set<VertexId>> vsets(static_cast<size_t>(rid));
    for (int f = 0; f < F; ++f) {
        if (region[static_cast<size_t>(f)] < 0) continue;
        for (VertexId v : fd.walks[static_cast<size_t>(f)])
            if (!in_path[static_cast<size_t>(v)])
                vsets[static_cast<size_t>(region[static_cast<size_t>(f)])].insert(v);
    }
    std::vector<std::vector<VertexId>> out;
    for (auto& s : vsets) out.emplace_back(s.begin(), s.end());
    return out;
}

void orient_sides(SeparatingPath& sp, const std::vector<VertexId>& s) {
    auto count_in = [&](const std::vector<VertexId>& side) {
        int c = 0;
        for (VertexId v : s)
            if (std::binary_search(side.begin(), side.end(), v)) ++c;
        return c;
    };
    auto min_off_path = [&](const std::vector<VertexId>& side) {
        for (VertexId v : side)
            if (std::find(sp.path.begin(), sp.path.end(), v) == sp.path.end()) return v;
        return kBlank;
    };
    int c1 = count_in(sp.side1), c2 = count_in(sp.side2);
    bool swap = false;
    if (c1 != c2)
        swap = c1 < c2;
    else if (sp.side1.size() != sp.side2.size())
        swap = sp.side1.size() < sp.side2.size();
    else
        swap = min_off_path(sp.side1) > min_off_path(sp.side2);
    if (swap) std::swap(sp.side1, sp.side2);
}

} // namespace

std::vector<SeparatingPath> chord_candidates(const PlaneGraph& g, const std::vector<VertexId>& s, int ell) {
    if (ell < 0 || ell > 2) throw Error("find_chords: ell must be 0, 1 or 2");
    if (!g.graph.connected()) throw Error("find_chords requires a connected graph");
    const int n = g.graph.vertex_count();
    Boundary bd = boundary(g);
    std::vector<SeparatingPath> out;

    if (ell == 0) {
        auto cuts = g.graph.cut_vertices();
        for (VertexId u : cuts) {
            if (!bd.has(u)) continue;
            std::vector<VertexId> rest;
            for (VertexId v = 0; v < n; ++v)
                if (v != u) rest.push_back(v);
            auto sub = g.graph.induced(rest);
            auto comps = sub.graph.components();
            if (comps.size() < 2) continue;
            // canonical bipartition: strongest component (by |comp ∩ s|, then min id) vs rest
            size_t best = 0;
            int best_sc = -1;
            for (size_t c = 0; c < comps.size(); ++c) {
                int sc = 0;
                for (VertexId v : comps[c])
                    if (std::find(s.begin(), s.end(), sub.to_parent[static_cast<size_t>(v)]) != s.end())
                        ++sc;
                if (sc > best_sc) {
                    best_sc = sc;
                    best = c;
                }
            }
            SeparatingPath sp;
            sp.path = {u};
            sp.side1 = {u};
            sp.side2 = {u};
            for (size_t c = 0; c < comps.size(); ++c)
                for (VertexId v : comps[c])
                    (c == best ? sp.side1 : sp.side2).push_back(sub.to_parent[static_cast<size_t>(v)]);
            std::sort(sp.side1.begin(), sp.side1.end());
            std::sort(sp.side2.begin(), sp.side2.end());
            orient_sides(sp, s);
            out.push_back(std::move(sp));
        }
        return out;
    }

    FaceData fd = compute_faces(g);
    int outer_face = locate_outer(g, fd)[0];

    std::vector<std::vector<VertexId>> candidates;
    if (ell == 1) {
        for (const auto& [u, v] : g.graph.edges())
            if (bd.has(u) && bd.has(v) && !bd.has_edge(u, v)) candidates.push_back({u, v});
    } else {
        for (VertexId y = 0; y < n; ++y) {
            const auto& nb = g.graph.neighbors(y);
            for (size_t i = 0; i < nb.size(); ++i) {
                if (!bd.has(nb[i])) continue;
                for (size_t j = i + 1; j < nb.size(); ++j)
                    if (bd.has(nb[j])) candidates.push_back({nb[i], y, nb[j]});
            }
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const auto& path : candidates) {
        auto regions = cut_regions(g, fd, outer_face, path);
        if (regions.size() < 2) continue;
        // one region versus the rest; first plausible grouping wins
        for (size_t r = 0; r < regions.size(); ++r) {
            std::vector<VertexId> a = regions[r], b;
            for (size_t q = 0; q < regions.size(); ++q)
                if (q != r) b.insert(b.end(), regions[q].begin(), regions[q].end());
            if (a.empty() || b.empty()) continue;
            a.insert(a.end(), path.begin(), path.end());
            b.insert(b.end(), path.begin(), path.end());
            std::sort(a.begin(), a.end());
            a.erase(std::unique(a.begin(), a.end()), a.end());
            std::sort(b.begin(), b.end());
            b.erase(std::unique(b.begin(), b.end()), b.end());
            if (static_cast<int>(a.size()) >= n || static_cast<int>(b.size()) >= n) continue;
            SeparatingPath sp;
            sp.path = path;
            sp.side1 = std::move(a);
            sp.side2 = std::move(b);
            orient_sides(sp, s);
            out.push_back(std::move(sp));
            break;
        }
    }
    return out;
}

bool validate_chord(const PlaneGraph& g, const SeparatingPath& sp) {
    return try_split(g, sp.path, sp.side1, sp.side2, nullptr);
}

std::vector<SeparatingPath> find_chords(const PlaneGraph& g, const std::vector<VertexId>& s, int ell) {
    std::vector<SeparatingPath> out;
    for (auto& sp : chord_candidates(g, s, ell))
        if (ell == 0 || validate_chord(g, sp)) out.push_back(std::move(sp));
    if (ell == 1 && !out.empty()) {
        size_t best = 0;
        for (size_t i = 1; i < out.size(); ++i)
            if (out[i].side1.size() > out[best].side1.size()) best = i;
        out[best].max_side1 = true;
    }
    return out;
}

InducedPlane induced_plane(const PlaneGraph& g, std::vector<VertexId> keep) {
    const int n = g.graph.vertex_count();
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (VertexId v : keep)
        if (!g.graph.has_vertex(v)) throw Error("induced_plane: vertex out of range");

    InducedPlane res;
    res.to_parent = keep;
    res.from_parent.assign(static_cast<size_t>(n), kBlank);
    for (size_t i = 0; i < keep.size(); ++i)
        res.from_parent[static_cast<size_t>(keep[i])] = static_cast<VertexId>(i);

    const int k = static_cast<int>(keep.size());
    res.g.graph = SimpleGraph(k);
    res.g.rotation.assign(static_cast<size_t>(k), {});
    for (int i = 0; i < k; ++i) {
        for (VertexId w : g.rotation[static_cast<size_t>(keep[static_cast<size_t>(i)])]) {
            VertexId wi = res.from_parent[static_cast<size_t>(w)];
            if (wi == kBlank) continue;
            res.g.rotation[static_cast<size_t>(i)].push_back(wi);
            if (i < wi) res.g.graph.add_edge(i, wi);
        }
    }

    // Track how the removed vertices merge the old faces.
    FaceData fd = compute_faces(g);
    std::vector<std::vector<int>> incident(static_cast<size_t>(n));
    for (size_t f = 0; f < fd.walks.size(); ++f)
        for (VertexId v : fd.walks[f]) incident[static_cast<size_t>(v)].push_back(static_cast<int>(f));

    UnionFind uf(fd.walks.size());
    std::vector<char> deleted(static_cast<size_t>(n), 1);
    for (VertexId v : keep) deleted[static_cast<size_t>(v)] = 0;
    for (VertexId d = 0; d < n; ++d) {
        if (!deleted[static_cast<size_t>(d)]) continue;
        const auto& inc = incident[static_cast<size_t>(d)];
        for (size_t i = 1; i < inc.size(); ++i) uf.unite(inc[0], inc[i]);
    }
    std::vector<char> touched(fd.walks.size(), 0);
    for (VertexId d = 0; d < n; ++d)
        if (deleted[static_cast<size_t>(d)])
            for (int f : incident[static_cast<size_t>(d)]) touched[static_cast<size_t>(uf.find(f))] = 1;

    auto comp_old = component_ids(g.graph);
    auto outer_idx = locate_outer(g, fd);
    std::vector<int> outer_class_of_comp(g.outer.empty() ? 0 : g.outer.size(), -1);
    for (size_t i = 0; i < g.outer.size(); ++i) {
        int c = comp_old[static_cast<size_t>(g.outer[i][0])];
        outer_class_of_comp[static_cast<size_t>(c)] = uf.find(outer_idx[i]);
    }

    FaceData nfd = compute_faces(res.g);
    auto comp_new = component_ids(res.g.graph);
    int ncomp = k == 0 ? 0 : 1 + *std::max_element(comp_new.begin(), comp_new.end());
    std::vector<int> pick_outer(static_cast<size_t>(ncomp), -1); // chosen new face per comp
    std::vector<int> pick_fallback(static_cast<size_t>(ncomp), -1);
    for (VertexId u = 0; u < k; ++u) {
        int c = comp_new[static_cast<size_t>(u)];
        const auto& ru = res.g.rotation[static_cast<size_t>(u)];
        for (size_t kk = 0; kk < ru.size(); ++kk) {
            VertexId ou = res.to_parent[static_cast<size_t>(u)];
            VertexId ov = res.to_parent[static_cast<size_t>(ru[kk])];
            int oldface = fd.face_of[static_cast<size_t>(dir_id(fd, g, ou, ov))];
            int cls = uf.find(oldface);
            int newface = nfd.face_of[static_cast<size_t>(nfd.ofs[static_cast<size_t>(u)] + static_cast<int>(kk))];
            if (pick_outer[static_cast<size_t>(c)] == -1 &&
                cls == outer_class_of_comp[static_cast<size_t>(comp_old[static_cast<size_t>(ou)])])
                pick_outer[static_cast<size_t>(c)] = newface;
            if (pick_fallback[static_cast<size_t>(c)] == -1 && touched[static_cast<size_t>(cls)])
                pick_fallback[static_cast<size_t>(c)] = newface;
        }
    }

    // emit outer walks ordered by component min-vertex (== first occurrence)
    std::vector<char> comp_done(static_cast<size_t>(ncomp), 0);
    for (VertexId v = 0; v < k; ++v) {
        int c = comp_new[static_cast<size_t>(v)];
        if (comp_done[static_cast<size_t>(c)]) continue;
        comp_done[static_cast<size_t>(c)] = 1;
        int f = pick_outer[static_cast<size_t>(c)] != -1 ? pick_outer[static_cast<size_t>(c)]
                                                         : pick_fallback[static_cast<size_t>(c)];
        if (f != -1) {
            res.g.outer.push_back(nfd.walks[static_cast<size_t>(f)]);
        } else if (res.g.rotation[static_cast<size_t>(v)].empty()) {
            res.g.outer.push_back({v});
        } else {
            throw EmbeddingError("induced_plane: could not locate an outer face for a component");
        }
    }

    validate(res.g);
    return res;
}

std::pair<InducedPlane, InducedPlane> split_with_maps(const PlaneGraph& g, const SeparatingPath& p) {
    std::pair<InducedPlane, InducedPlane> out;
    if (!try_split(g, p.path, p.side1, p.side2, &out))
        throw Error("split: the given path does not validly separate the graph");
    return out;
}

std::pair<PlaneGraph, PlaneGraph> split(const PlaneGraph& g, const SeparatingPath& p) {
    auto [a, b] = split_with_maps(g, p);
    return {std::move(a.g), std::move(b.g)};
}

PlaneGraph add_edge_in_face(const PlaneGraph& g, VertexId u, VertexId w,
                            const std::vector<VertexId>& face) {
    if (u == w || g.graph.has_edge(u, w))
        throw Error("add_edge_in_face: endpoints equal or already adjacent");
    for (const auto& o : g.outer)
        if (canonical_walk(o) == canonical_walk(face))
            throw Error("add_edge_in_face: the given face is an outer face");

    auto find_arrival = [&](VertexId x) -> VertexId {
        for (size_t i = 0; i < face.size(); ++i)
            if (face[i] == x) return face[(i + face.size() - 1) % face.size()];
        throw Error("add_edge_in_face: vertex " + std::to_string(x) + " is not on the face");
    };
    VertexId pu = find_arrival(u), pw = find_arrival(w);

    PlaneGraph out = g;
    out.graph.add_edge(u, w);
    auto& ru = out.rotation[static_cast<size_t>(u)];
    ru.insert(ru.begin() + rot_index(g, u, pu) + 1, w);
    auto& rw = out.rotation[static_cast<size_t>(w)];
    rw.insert(rw.begin() + rot_index(g, w, pw) + 1, u);
    validate(out);
    return out;
}

InducedPlane delete_vertex_with_map(const PlaneGraph& g, VertexId u) {
    if (!g.graph.has_vertex(u)) throw Error("delete_vertex: no such vertex");
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < g.graph.vertex_count(); ++v)
        if (v != u) keep.push_back(v);
    return induced_plane(g, keep);
}

PlaneGraph delete_vertex(const PlaneGraph& g, VertexId u) {
    return delete_vertex_with_map(g, u).g;
}

std::vector<VertexId> cycle_interior(const PlaneGraph& g, const std::vector<VertexId>& cycle) {
    FaceData fd = compute_faces(g);
    std::set<EdgeKey> cut;
    for (size_t i = 0; i < cycle.size(); ++i) {
        VertexId a = cycle[i], b = cycle[(i + 1) % cycle.size()];
        if (!g.graph.has_edge(a, b)) throw Error("cycle_interior: not a cycle of the graph");
        cut.insert(edge_key(a, b));
    }
    auto outer_idx = locate_outer(g, fd);
    std::vector<char> outside(fd.walks.size(), 0);
    std::vector<int> stack(outer_idx.begin(), outer_idx.end());
    for (int f : stack) outside[static_cast<size_t>(f)] = 1;
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        const auto& wk = fd.walks[static_cast<size_t>(f)];
        if (wk.size() <= 1) continue;
        for (size_t i = 0; i < wk.size(); ++i) {
            VertexId a = wk[i], b = wk[(i + 1) % wk.size()];
            if (cut.count(edge_key(a, b))) continue;
            int f2 = fd.face_of[static_cast<size_t>(dir_id(fd, g, b, a))];
            if (!outside[static_cast<size_t>(f2)]) {
                outside[static_cast<size_t>(f2)] = 1;
                stack.push_back(f2);
            }
        }
    }
    std::set<VertexId> inner;
    for (size_t f = 0; f < fd.walks.size(); ++f)
        if (!outside[f])
            for (VertexId v : fd.walks[f]) inner.insert(v);
    for (VertexId v : cycle) inner.erase(v);
    return {inner.begin(), inner.end()};
}

namespace {

struct FaceSets {
    std::set<std::vector<VertexId>> tri;     // sorted vertex triples of triangular faces
    std::set<std::vector<VertexId>> quad;    // canonical 4-walks (distinct vertices)
    std::vector<VertexId> outer_tri;         // sorted, when the single outer walk is a triangle
    std::vector<VertexId> outer_quad_canon;  // canonical, when it is a simple 4-cycle
};

std::vector<VertexId> canon_cycle4(VertexId a, VertexId b, VertexId c, VertexId d) {
    // cycle a-b-c-d; canonical: min vertex first, then its smaller cycle-neighbor
    std::vector<VertexId> cyc{a, b, c, d};
    size_t mi = static_cast<size_t>(std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
    std::vector<VertexId> fwd, rev;
    for (size_t i = 0; i < 4; ++i) fwd.push_back(cyc[(mi + i) % 4]);
    for (size_t i = 0; i < 4; ++i) rev.push_back(cyc[(mi + 4 - i) % 4]);
    return std::min(fwd, rev);
}

FaceSets face_sets(const PlaneGraph& g) {
    FaceSets fs;
    for (const auto& w : faces(g)) {
        if (w.size() == 3 && w[0] != w[1] && w[1] != w[2] && w[0] != w[2]) {
            std::vector<VertexId> t = w;
            std::sort(t.begin(), t.end());
            fs.tri.insert(std::move(t));
        } else if (w.size() == 4) {
            std::set<VertexId> d(w.begin(), w.end());
            if (d.size() == 4) fs.quad.insert(canon_cycle4(w[0], w[1], w[2], w[3]));
        }
    }
    if (g.outer.size() == 1) {
        const auto& o = g.outer[0];
        if (o.size() == 3) {
            fs.outer_tri = o;
            std::sort(fs.outer_tri.begin(), fs.outer_tri.end());
        } else if (o.size() == 4) {
            std::set<VertexId> d(o.begin(), o.end());
            if (d.size() == 4) fs.outer_quad_canon = canon_cycle4(o[0], o[1], o[2], o[3]);
        }
    }
    return fs;
}

} // namespace

std::optional<std::vector<VertexId>> find_enclosing_triangle(const PlaneGraph& g) {
    const int n = g.graph.vertex_count();
    FaceSets fs = face_sets(g);
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v : g.graph.neighbors(u)) {
            if (v <= u) continue;
            for (VertexId w : g.graph.neighbors(v)) {
                if (w <= v || !g.graph.has_edge(u, w)) continue;
                std::vector<VertexId> t{u, v, w};
                bool is_face = fs.tri.count(t) > 0;
                bool qualifies = !is_face || (t == fs.outer_tri && n > 3);
                if (qualifies && !cycle_interior(g, t).empty()) return t;
            }
        }
    }
    return std::nullopt;
}

std::optional<std::vector<VertexId>> find_enclosing_quad(const PlaneGraph& g) {
    const int n = g.graph.vertex_count();
    FaceSets fs = face_sets(g);
    std::set<std::vector<VertexId>> seen;
    std::optional<std::vector<VertexId>> best;
    for (VertexId b = 0; b < n; ++b) {
        for (VertexId d = b + 1; d < n; ++d) {
            // common neighbors a, c give the 4-cycle a-b-c-d
            std::vector<VertexId> common;
            std::set_intersection(g.graph.neighbors(b).begin(), g.graph.neighbors(b).end(),
                                  g.graph.neighbors(d).begin(), g.graph.neighbors(d).end(),
                                  std::back_inserter(common));
            for (size_t i = 0; i < common.size(); ++i) {
                for (size_t j = i + 1; j < common.size(); ++j) {
                    VertexId a = common[i], c = common[j];
                    auto canon = canon_cycle4(a, b, c, d);
                    if (!seen.insert(canon).second) continue;
                    if (fs.quad.count(canon)) {
                        if (canon != fs.outer_quad_canon || n <= 4) continue;
                    } else {
                        bool diag_ac = g.graph.has_edge(a, c);
                        bool diag_bd = g.graph.has_edge(b, d);
                        auto tri = [&](VertexId x, VertexId y, VertexId z) {
                            std::vector<VertexId> t{x, y, z};
                            std::sort(t.begin(), t.end());
                            return fs.tri.count(t) > 0;
                        };
                        if (diag_ac && tri(a, b, c) && tri(a, c, d)) continue;
                        if (diag_bd && tri(a, b, d) && tri(b, c, d)) continue;
                    }
                    if (cycle_interior(g, canon).empty()) continue;
                    if (!best || canon < *best) best = canon;
                }
            }
        }
    }
    return best;
}

} // namespace wd
