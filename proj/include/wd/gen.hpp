#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "wd/plane_graph.hpp"

namespace wd {

// Deterministic graph generators; planar families carry valid embeddings.

PlaneGraph gen_cycle(int n);
PlaneGraph gen_path(int n);
SimpleGraph gen_clique(int n);
PlaneGraph gen_wheel(int rim);                  // rim >= 3; hub gets id `rim`
PlaneGraph gen_grid(int rows, int cols);        // triangulated grid
PlaneGraph gen_apollonian(int n, uint64_t seed);
PlaneGraph gen_icosahedron();
SimpleGraph gen_petersen();
SimpleGraph gen_random_graph(int n, uint64_t seed, int edge_percent = 50);
SimpleGraph gen_random_regular(int n, int d, uint64_t seed);

// Builds a PlaneGraph for a sphere triangulation given consistently oriented
// triangles (every directed edge in exactly one face); `outer` selects the
// face that becomes the outer one.
PlaneGraph plane_from_triangles(int n, const std::vector<std::array<VertexId, 3>>& tris,
                                const std::vector<VertexId>& outer);

struct GenSpec {
    std::string family;       // cycle path clique wheel grid apollonian icosahedron petersen random regular
    std::vector<int> params;
    uint64_t seed = 0;
};

using GenResult = std::variant<SimpleGraph, PlaneGraph>;

// Dispatch by family name; throws Error on unknown families or bad params.
GenResult gen(const GenSpec& spec);

// "# family=... params=... seed=..." header used in emitted files.
std::string gen_header(const GenSpec& spec);

} // namespace wd
