#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "wd/delsave.hpp"
#include "wd/graph.hpp"

namespace wd {

// Per-vertex finite color sets (small nonnegative ints, kept sorted).
struct ListAssignment {
    std::vector<std::vector<int>> lists;

    static ListAssignment palette(int n, int k); // every list = {0..k-1}
};

struct Coloring {
    std::vector<int> color; // -1 = uncolored
};

// Picks one color out of a nonempty sorted candidate set.
using ColorChooser = std::function<int(const std::vector<int>&)>;

ColorChooser min_chooser();
ColorChooser max_chooser();
ColorChooser random_chooser(uint64_t seed);

// Plain greedy coloring with palette [d+1] along `order`; fails (nullopt,
// with *fail_step set) iff some vertex runs out of colors.  Never fails when
// the reversed order witnesses d-degeneracy.
std::optional<Coloring> greedy_color(const SimpleGraph& g, int d,
                                     const std::vector<VertexId>& order,
                                     size_t* fail_step = nullptr);

// Greedy coloring with savings along a verified witness.  At move (u, w)
// with |L(u)| > |L(w)| the color comes from L(u) \ L(w), so L(w) keeps its
// size; otherwise from L(u).  Requires |L(v)| >= f(v)+1 and a witness that
// verifies under f; then the run maintains |L(v)| >= charge(v)+1 and cannot
// get stuck, for any chooser.
Coloring color_from_witness(const SimpleGraph& g, const ChargeFn& f, const Witness& wit,
                            ListAssignment lists, const ColorChooser& chooser = min_chooser());

// True iff adjacent colors differ, every vertex is colored and (when lists
// are given) each color belongs to its vertex's list.
bool validate_coloring(const SimpleGraph& g, const Coloring& col,
                       const ListAssignment* lists = nullptr);

} // namespace wd
