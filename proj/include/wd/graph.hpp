#pragma once

#include <utility>
#include <vector>

#include "wd/errors.hpp"

namespace wd {

// Dense vertex id in [0, n) of the owning graph.
using VertexId = int;

// Distinguished non-vertex used as the "no save target" marker.
inline constexpr VertexId kBlank = -1;

// Undirected simple graph over dense integer ids.  Neighbor lists are kept
// sorted; values are cheap to copy and never mutated once built.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : adj_(static_cast<size_t>(n)) {}

    static SimpleGraph from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }
    int degree(VertexId v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[static_cast<size_t>(v)]; }
    bool has_vertex(VertexId v) const { return v >= 0 && v < vertex_count(); }
    bool has_edge(VertexId u, VertexId v) const;

    // Throws on loops, parallel edges and out-of-range ids.
    void add_edge(VertexId u, VertexId v);

    // All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    std::vector<std::vector<VertexId>> components() const;
    bool connected() const;

    // Articulation vertices (any, boundary or not), sorted.
    std::vector<VertexId> cut_vertices() const;

    struct Induced;
    // Induced subgraph on `keep` (need not be sorted; ids are compacted in
    // ascending order of the kept originals).
    Induced induced(const std::vector<VertexId>& keep) const;

    bool operator==(const SimpleGraph& o) const { return adj_ == o.adj_; }

private:
    std::vector<std::vector<VertexId>> adj_;
    int edge_count_ = 0;
};

struct SimpleGraph::Induced {
    SimpleGraph graph;
    std::vector<VertexId> to_parent;   // new id -> old id
    std::vector<VertexId> from_parent; // old id -> new id, kBlank if dropped
};

// True iff every edge of `sub` is an edge of `super` (same vertex count).
bool is_spanning_subgraph(const SimpleGraph& sub, const SimpleGraph& super);

} // namespace wd
