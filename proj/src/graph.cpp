#include "wd/graph.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace wd {

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    SimpleGraph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

bool SimpleGraph::has_edge(VertexId u, VertexId v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    const auto& nb = adj_[static_cast<size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

void SimpleGraph::add_edge(VertexId u, VertexId v) {
    if (!has_vertex(u) || !has_vertex(v))
        throw Error("add_edge: vertex out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw Error("add_edge: self-loop at " + std::to_string(u));
    if (has_edge(u, v)) throw Error("add_edge: parallel edge " + std::to_string(u) + " " + std::to_string(v));
    auto& nu = adj_[static_cast<size_t>(u)];
    auto& nv = adj_[static_cast<size_t>(v)];
    nu.insert(std::upper_bound(nu.begin(), nu.end(), v), v);
    nv.insert(std::upper_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
}

std::vector<std::pair<VertexId, VertexId>> SimpleGraph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(static_cast<size_t>(edge_count_));
    for (VertexId u = 0; u < vertex_count(); ++u)
        for (VertexId v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<std::vector<VertexId>> SimpleGraph::components() const {
    std::vector<std::vector<VertexId>> comps;
    std::vector<char> seen(static_cast<size_t>(vertex_count()), 0);
    for (VertexId s = 0; s < vertex_count(); ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        std::vector<VertexId> comp;
        std::vector<VertexId> stack{s};
        seen[static_cast<size_t>(s)] = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (VertexId w : neighbors(v)) {
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool SimpleGraph::connected() const {
    return vertex_count() == 0 || components().size() == 1;
}

std::vector<VertexId> SimpleGraph::cut_vertices() const {
    // Iterative Tarjan lowpoint computation.
    const int n = vertex_count();
    std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
    std::vector<char> is_cut(static_cast<size_t>(n), 0);
    int timer = 0;

    struct DfsFrame {
        VertexId v;
        VertexId parent;
        size_t next = 0;
        int child_count = 0;
    };

    for (VertexId root = 0; root < n; ++root) {
        if (disc[static_cast<size_t>(root)] != -1) continue;
        std::vector<DfsFrame> stack;
        stack.push_back({root, kBlank});
        disc[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = timer++;
        while (!stack.empty()) {
            DfsFrame& fr = stack.back();
            const auto& nb = neighbors(fr.v);
            if (fr.next < nb.size()) {
                VertexId w = nb[fr.next++];
                if (disc[static_cast<size_t>(w)] == -1) {
                    ++fr.child_count;
                    disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = timer++;
                    stack.push_back({w, fr.v});
                } else if (w != fr.parent) {
                    low[static_cast<size_t>(fr.v)] =
                        std::min(low[static_cast<size_t>(fr.v)], disc[static_cast<size_t>(w)]);
                }
            } else {
                DfsFrame done = fr;
                stack.pop_back();
                if (!stack.empty()) {
                    DfsFrame& par = stack.back();
                    low[static_cast<size_t>(par.v)] =
                        std::min(low[static_cast<size_t>(par.v)], low[static_cast<size_t>(done.v)]);
                    if (par.parent != kBlank &&
                        low[static_cast<size_t>(done.v)] >= disc[static_cast<size_t>(par.v)])
                        is_cut[static_cast<size_t>(par.v)] = 1;
                } else if (done.child_count >= 2) {
                    is_cut[static_cast<size_t>(done.v)] = 1; // root with two DFS children
                }
            }
        }
    }
    std::vector<VertexId> out;
    for (VertexId v = 0; v < n; ++v)
        if (is_cut[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

SimpleGraph::Induced SimpleGraph::induced(const std::vector<VertexId>& keep) const {
    Induced res;
    res.to_parent = keep;
    std::sort(res.to_parent.begin(), res.to_parent.end());
    res.from_parent.assign(static_cast<size_t>(vertex_count()), kBlank);
    for (size_t i = 0; i < res.to_parent.size(); ++i)
        res.from_parent[static_cast<size_t>(res.to_parent[i])] = static_cast<VertexId>(i);
    res.graph = SimpleGraph(static_cast<int>(res.to_parent.size()));
    for (size_t i = 0; i < res.to_parent.size(); ++i) {
        for (VertexId w : neighbors(res.to_parent[i])) {
            VertexId wi = res.from_parent[static_cast<size_t>(w)];
            if (wi != kBlank && static_cast<VertexId>(i) < wi)
                res.graph.add_edge(static_cast<VertexId>(i), wi);
        }
    }
    return res;
}

bool is_spanning_subgraph(const SimpleGraph& sub, const SimpleGraph& super) {
    if (sub.vertex_count() != super.vertex_count()) return false;
    for (VertexId u = 0; u < sub.vertex_count(); ++u)
        for (VertexId v : sub.neighbors(u))
            if (u < v && !super.has_edge(u, v)) return false;
    return true;
}

} // namespace wd
