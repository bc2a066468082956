#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wd/graph.hpp"

namespace wd {

// Plane-embedded graph: combinatorial embedding as a clockwise rotation
// system plus the outer face walk of every connected component.
//
// Face traversal convention: arriving at v via u, the walk leaves along the
// successor of u in rotation(v).  The ".pg" file format is bit-exact under
// this convention.
struct PlaneGraph {
    SimpleGraph graph;
    std::vector<std::vector<VertexId>> rotation; // clockwise neighbor order per vertex
    std::vector<std::vector<VertexId>> outer;    // one closed walk per component ([v] for isolated v)
};

// Throws EmbeddingError unless all invariants hold: rotations permute the
// adjacencies, face traversal closes up with n - m + f = 2 per component,
// and every outer entry is a traversal walk (one per component).
void validate(const PlaneGraph& g);

// All face walks, including the outer ones and a [v] walk per isolated
// vertex.  Every directed edge appears in exactly one walk.
std::vector<std::vector<VertexId>> faces(const PlaneGraph& g);

struct Boundary {
    std::vector<char> on_boundary;                      // mask over vertex ids
    std::vector<std::pair<VertexId, VertexId>> edges;   // u < v, sorted
    std::vector<VertexId> cycle;                        // boundary cycle when it is one, else empty

    bool has(VertexId v) const { return on_boundary[static_cast<size_t>(v)] != 0; }
    bool has_edge(VertexId u, VertexId v) const;
};

// V(dG), E(dG) and, when the outer walk is a simple cycle, its cyclic order.
Boundary boundary(const PlaneGraph& g);

// A path of length ell between boundary vertices that splits the graph into
// two strictly smaller pieces sharing exactly the path.
struct SeparatingPath {
    std::vector<VertexId> path;      // ell + 1 vertices
    std::vector<VertexId> side1;     // V(G1), sorted, includes path
    std::vector<VertexId> side2;     // V(G2), sorted, includes path
    bool max_side1 = false;          // ell = 1: marks the chord chosen to maximize |side1|
};

// Every ell-chord of g (ell in {0,1,2}), sides oriented so that
// |side1 ∩ s| >= |side2 ∩ s| (ties: larger side1, then smaller min off-path
// vertex).  Results sorted by path sequence.  Requires g connected.
std::vector<SeparatingPath> find_chords(const PlaneGraph& g, const std::vector<VertexId>& s, int ell);

// Cheap region-based candidates in deterministic path order, without the
// full split validation (used to pick one chord lazily).
std::vector<SeparatingPath> chord_candidates(const PlaneGraph& g, const std::vector<VertexId>& s, int ell);

// Whether the candidate fully satisfies the separating-path definition
// (both sides connected, path on both outer faces, edge cover).
bool validate_chord(const PlaneGraph& g, const SeparatingPath& sp);

// Lexicographically least rotation of a closed walk (direction preserved).
std::vector<VertexId> canonical_walk(std::vector<VertexId> w);

// Induced plane subgraph with id compaction.  The outer face of every
// resulting component is the face bounding the region that absorbed the old
// outer region (or, for a freshly enclosed component, the region exposed by
// the deletions around it).
struct InducedPlane {
    PlaneGraph g;
    std::vector<VertexId> to_parent;
    std::vector<VertexId> from_parent; // kBlank when dropped
};
InducedPlane induced_plane(const PlaneGraph& g, std::vector<VertexId> keep);

// Split along a separating path; each side keeps the inherited embedding and
// has the path on its outer face.
std::pair<InducedPlane, InducedPlane> split_with_maps(const PlaneGraph& g, const SeparatingPath& p);
std::pair<PlaneGraph, PlaneGraph> split(const PlaneGraph& g, const SeparatingPath& p);

// New graph with edge uw drawn inside the given inner face, which it splits
// in two.  Throws if u, w are adjacent or not both on the face.
PlaneGraph add_edge_in_face(const PlaneGraph& g, VertexId u, VertexId w,
                            const std::vector<VertexId>& face);

InducedPlane delete_vertex_with_map(const PlaneGraph& g, VertexId u);
PlaneGraph delete_vertex(const PlaneGraph& g, VertexId u);

// Vertices strictly inside the closed curve of `cycle` (the side away from
// the outer face).  `cycle` must be a cycle of g.
std::vector<VertexId> cycle_interior(const PlaneGraph& g, const std::vector<VertexId>& cycle);

// Fast testers used by the reduction scan: whether some triangle / 4-cycle
// of g encloses at least one vertex, returning a canonical witness cycle.
std::optional<std::vector<VertexId>> find_enclosing_triangle(const PlaneGraph& g);
std::optional<std::vector<VertexId>> find_enclosing_quad(const PlaneGraph& g);

} // namespace wd
