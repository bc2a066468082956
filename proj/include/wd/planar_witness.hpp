#pragma once

#include <vector>

#include "wd/delsave.hpp"
#include "wd/plane_graph.hpp"

namespace wd {

// A validated reduction instance: plane graph G, at most three consecutive
// boundary vertices S, an independent boundary set I disjoint from S, and
// the derived charge function
//     f(v) = 4 - deg_S(v)  for interior v,
//            3 - deg_S(v)  for boundary v outside S and I,
//            2 - deg_S(v)  for v in I.
struct Instance {
    PlaneGraph g;
    std::vector<VertexId> s;     // stored in boundary path order
    std::vector<VertexId> i_set; // sorted
    ChargeFn f;                  // indexed by vertex id; entries of s are unused
};

// Validates every precondition and computes f; throws InstanceError with a
// distinct code per violated condition.
Instance make_instance(PlaneGraph g, std::vector<VertexId> s, std::vector<VertexId> i_set);

// The game is played on G - S; this captures it together with the id maps.
struct Residual {
    SimpleGraph graph;
    ChargeFn f;
    std::vector<VertexId> to_parent;
    std::vector<VertexId> from_parent; // kBlank on members of s
};
Residual residual_game(const Instance& inst);

// Applies an id map to every move (vertex and save target).
Witness map_witness(const Witness& w, const std::vector<VertexId>& map);

// One reduction firing: rule id 1..16 plus instance shape.
struct RuleFiring {
    int rule;
    int n;
    int m;
    int s_size;
    int i_size;
};

struct EngineResult {
    Witness wit;                    // moves over V(g) ids; members of s never appear
    std::vector<RuleFiring> trace;
};

// Emits a witness certifying that G - S is weakly f-degenerate, by the
// priority-ordered reduction rules R1..R16.  The output is re-verified
// before returning; an unverifiable composition or an inapplicable rule set
// raises EngineBug (carrying the stuck instance's shape).
EngineResult witness(const Instance& inst);

// Theorem-1 wrapper: witness for the whole plane graph, legal under the
// constant charge 4 (and already under 3 on the boundary / 4 inside).
Witness witness_planar_4(const PlaneGraph& g);

} // namespace wd
