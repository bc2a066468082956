#include "wd/gen.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wd/rng.hpp"

namespace wd {

PlaneGraph gen_cycle(int n) {
    if (n < 3) throw Error("cycle needs n >= 3");
    PlaneGraph g;
    g.graph = SimpleGraph(n);
    g.rotation.assign(static_cast<size_t>(n), {});
    for (int i = 0; i < n; ++i) {
        int prev = (i + n - 1) % n, next = (i + 1) % n;
        g.graph.add_edge(i, next);
        g.rotation[static_cast<size_t>(i)] = {prev, next};
    }
    std::vector<VertexId> walk(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) walk[static_cast<size_t>(i)] = i;
    g.outer = {walk};
    validate(g);
    return g;
}

PlaneGraph gen_path(int n) {
    if (n < 1) throw Error("path needs n >= 1");
    PlaneGraph g;
    g.graph = SimpleGraph(n);
    g.rotation.assign(static_cast<size_t>(n), {});
    for (int i = 0; i + 1 < n; ++i) g.graph.add_edge(i, i + 1);
    for (int i = 0; i < n; ++i) {
        std::vector<VertexId> r;
        if (i > 0) r.push_back(i - 1);
        if (i + 1 < n) r.push_back(i + 1);
        g.rotation[static_cast<size_t>(i)] = r;
    }
    std::vector<VertexId> walk;
    for (int i = 0; i < n; ++i) walk.push_back(i);
    for (int i = n - 2; i >= 1; --i) walk.push_back(i);
    g.outer = {walk};
    validate(g);
    return g;
}

SimpleGraph gen_clique(int n) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

PlaneGraph gen_wheel(int rim) {
    if (rim < 3) throw Error("wheel needs rim >= 3");
    const int hub = rim;
    PlaneGraph g;
    g.graph = SimpleGraph(rim + 1);
    g.rotation.assign(static_cast<size_t>(rim) + 1, {});
    for (int i = 0; i < rim; ++i) {
        g.graph.add_edge(i, (i + 1) % rim);
        g.graph.add_edge(i, hub);
        g.rotation[static_cast<size_t>(i)] = {(i + 1) % rim, hub, (i + rim - 1) % rim};
    }
    for (int i = 0; i < rim; ++i) g.rotation[static_cast<size_t>(hub)].push_back(i);
    std::vector<VertexId> walk;
    for (int i = 0; i < rim; ++i) walk.push_back(i);
    g.outer = {walk};
    validate(g);
    return g;
}

PlaneGraph gen_grid(int rows, int cols) {
    if (rows < 2 || cols < 2) throw Error("grid needs rows, cols >= 2");
    auto id = [&](int r, int c) { return r * cols + c; };
    PlaneGraph g;
    g.graph = SimpleGraph(rows * cols);
    g.rotation.assign(static_cast<size_t>(rows * cols), {});
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.graph.add_edge(id(r, c), id(r, c + 1));
            if (r + 1 < rows) g.graph.add_edge(id(r, c), id(r + 1, c));
            if (r + 1 < rows && c + 1 < cols) g.graph.add_edge(id(r, c), id(r + 1, c + 1));
        }
    }
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            std::vector<VertexId> rot;
            if (r > 0 && c > 0) rot.push_back(id(r - 1, c - 1));       // NW
            if (r > 0) rot.push_back(id(r - 1, c));                    // N
            if (c + 1 < cols) rot.push_back(id(r, c + 1));             // E
            if (r + 1 < rows && c + 1 < cols) rot.push_back(id(r + 1, c + 1)); // SE
            if (r + 1 < rows) rot.push_back(id(r + 1, c));             // S
            if (c > 0) rot.push_back(id(r, c - 1));                    // W
            g.rotation[static_cast<size_t>(id(r, c))] = rot;
        }
    }
    std::vector<VertexId> walk;
    for (int c = 0; c < cols; ++c) walk.push_back(id(0, c));
    for (int r = 1; r < rows; ++r) walk.push_back(id(r, cols - 1));
    for (int c = cols - 2; c >= 0; --c) walk.push_back(id(rows - 1, c));
    for (int r = rows - 2; r >= 1; --r) walk.push_back(id(r, 0));
    g.outer = {walk};
    validate(g);
    return g;
}

PlaneGraph gen_apollonian(int n, uint64_t seed) {
    if (n < 3) throw Error("apollonian needs n >= 3");
    SplitMix64 rng(seed);
    PlaneGraph g;
    g.graph = SimpleGraph(n);
    g.rotation.assign(static_cast<size_t>(n), {});
    g.graph.add_edge(0, 1);
    g.graph.add_edge(1, 2);
    g.graph.add_edge(0, 2);
    g.rotation[0] = {1, 2};
    g.rotation[1] = {2, 0};
    g.rotation[2] = {0, 1};
    // directed inner face (a,b,c); outer stays [0,1,2]
    std::vector<std::array<VertexId, 3>> inner{{0, 2, 1}};

    auto insert_after = [&](VertexId at, VertexId anchor, VertexId nv) {
        auto& rot = g.rotation[static_cast<size_t>(at)];
        auto it = std::find(rot.begin(), rot.end(), anchor);
        rot.insert(it + 1, nv);
    };
    for (VertexId v = 3; v < n; ++v) {
        size_t fi = static_cast<size_t>(rng.below(inner.size()));
        auto [a, b, c] = inner[fi];
        g.graph.add_edge(v, a);
        g.graph.add_edge(v, b);
        g.graph.add_edge(v, c);
        insert_after(a, c, v);
        insert_after(b, a, v);
        insert_after(c, b, v);
        g.rotation[static_cast<size_t>(v)] = {a, c, b};
        inner[fi] = {a, b, v};
        inner.push_back({b, c, v});
        inner.push_back({c, a, v});
    }
    g.outer = {{0, 1, 2}};
    validate(g);
    return g;
}

PlaneGraph plane_from_triangles(int n, const std::vector<std::array<VertexId, 3>>& tris,
                                const std::vector<VertexId>& outer) {
    // rotation successor constraints per corner: in face (x,y,z) the walk
    // arrives at x via z and leaves to y
    std::vector<std::map<VertexId, VertexId>> succ(static_cast<size_t>(n));
    for (const auto& t : tris) {
        auto [x, y, z] = t;
        succ[static_cast<size_t>(x)][z] = y;
        succ[static_cast<size_t>(y)][x] = z;
        succ[static_cast<size_t>(z)][y] = x;
    }
    PlaneGraph g;
    g.graph = SimpleGraph(n);
    g.rotation.assign(static_cast<size_t>(n), {});
    std::set<std::pair<VertexId, VertexId>> added;
    for (const auto& t : tris)
        for (int i = 0; i < 3; ++i) {
            VertexId a = t[static_cast<size_t>(i)], b = t[static_cast<size_t>((i + 1) % 3)];
            if (added.insert({std::min(a, b), std::max(a, b)}).second) g.graph.add_edge(a, b);
        }
    for (VertexId v = 0; v < n; ++v) {
        auto& m = succ[static_cast<size_t>(v)];
        if (m.empty()) continue;
        VertexId start = m.begin()->first, cur = start;
        do {
            g.rotation[static_cast<size_t>(v)].push_back(cur);
            cur = m.at(cur);
        } while (cur != start);
        if (g.rotation[static_cast<size_t>(v)].size() != m.size())
            throw EmbeddingError("triangle list does not define a single rotation cycle at " +
                                 std::to_string(v));
    }
    g.outer = {outer};
    validate(g);
    return g;
}

PlaneGraph gen_icosahedron() {
    auto u = [](int i) { return 1 + ((i % 5) + 5) % 5; };
    auto l = [](int i) { return 6 + ((i % 5) + 5) % 5; };
    std::vector<std::array<VertexId, 3>> tris;
    for (int i = 0; i < 5; ++i) {
        tris.push_back({0, u(i), u(i + 1)});
        tris.push_back({u(i), l(i), u(i + 1)});
        tris.push_back({l(i), l(i + 1), u(i + 1)});
        tris.push_back({11, l(i + 1), l(i)});
    }
    return plane_from_triangles(12, tris, {0, u(0), u(1)});
}

SimpleGraph gen_petersen() {
    SimpleGraph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

SimpleGraph gen_random_graph(int n, uint64_t seed, int edge_percent) {
    if (n < 0 || edge_percent < 0 || edge_percent > 100) throw Error("bad random graph parameters");
    SplitMix64 rng(seed);
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng.below(100)) < edge_percent) g.add_edge(u, v);
    return g;
}

SimpleGraph gen_random_regular(int n, int d, uint64_t seed) {
    if (n <= 0 || d < 0 || d >= n) throw Error("regular: need 0 <= d < n");
    if ((static_cast<long long>(n) * d) % 2 != 0) throw Error("regular: n*d must be even");
    SplitMix64 rng(seed);
    const int stubs = n * d;
    for (int attempt = 0; attempt < 2000; ++attempt) {
        std::vector<int> pts(static_cast<size_t>(stubs));
        for (int i = 0; i < stubs; ++i) pts[static_cast<size_t>(i)] = i / d;
        for (int i = stubs - 1; i > 0; --i)
            std::swap(pts[static_cast<size_t>(i)],
                      pts[static_cast<size_t>(rng.below(static_cast<uint64_t>(i) + 1))]);
        std::set<std::pair<int, int>> es;
        bool ok = true;
        for (int i = 0; i < stubs && ok; i += 2) {
            int a = pts[static_cast<size_t>(i)], b = pts[static_cast<size_t>(i + 1)];
            if (a == b || !es.insert({std::min(a, b), std::max(a, b)}).second) ok = false;
        }
        if (!ok) continue;
        SimpleGraph g(n);
        for (const auto& [a, b] : es) g.add_edge(a, b);
        return g;
    }
    throw Error("regular: retry budget exhausted (parameters too tight?)");
}

GenResult gen(const GenSpec& spec) {
    const auto& p = spec.params;
    auto need = [&](size_t k) {
        if (p.size() != k)
            throw Error("family '" + spec.family + "' takes " + std::to_string(k) + " parameter(s)");
    };
    if (spec.family == "cycle") { need(1); return gen_cycle(p[0]); }
    if (spec.family == "path") { need(1); return gen_path(p[0]); }
    if (spec.family == "clique") { need(1); return gen_clique(p[0]); }
    if (spec.family == "wheel") { need(1); return gen_wheel(p[0]); }
    if (spec.family == "grid") { need(2); return gen_grid(p[0], p[1]); }
    if (spec.family == "apollonian") { need(1); return gen_apollonian(p[0], spec.seed); }
    if (spec.family == "icosahedron") { need(0); return gen_icosahedron(); }
    if (spec.family == "petersen") { need(0); return gen_petersen(); }
    if (spec.family == "random") {
        if (p.size() == 1) return gen_random_graph(p[0], spec.seed);
        need(2);
        return gen_random_graph(p[0], spec.seed, p[1]);
    }
    if (spec.family == "regular") { need(2); return gen_random_regular(p[0], p[1], spec.seed); }
    throw Error("unknown family '" + spec.family + "'");
}

std::string gen_header(const GenSpec& spec) {
    std::string h = "# family=" + spec.family;
    if (!spec.params.empty()) {
        h += " params=";
        for (size_t i = 0; i < spec.params.size(); ++i)
            h += (i ? "," : "") + std::to_string(spec.params[i]);
    }
    h += " seed=" + std::to_string(spec.seed);
    return h;
}

} // namespace wd
