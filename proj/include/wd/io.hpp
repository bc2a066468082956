#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wd/coloring.hpp"
#include "wd/delsave.hpp"
#include "wd/plane_graph.hpp"

namespace wd {

// Text formats.  Lines starting with '#' are comments everywhere.
//
//   .sg   line 1 "n m", then m lines "u v" with 0-based ids, u < v
//   .pg   line 1 "n", then n lines "v: w1 w2 ... wk" (clockwise rotation),
//         then one line "outer: v0 v1 ... vr" per component
//   .wit  one move per line: "del u" or "save u w"
//   .lst  one line per vertex: "v: c1 c2 ..."
//
// Parsers reject invariant violations with line-numbered errors.

SimpleGraph read_sg(std::istream& in);
void write_sg(std::ostream& out, const SimpleGraph& g, const std::string& header = "");

PlaneGraph read_pg(std::istream& in);
void write_pg(std::ostream& out, const PlaneGraph& g, const std::string& header = "");

Witness read_wit(std::istream& in);
void write_wit(std::ostream& out, const Witness& w, const std::string& header = "");

ListAssignment read_lst(std::istream& in, int n);
void write_lst(std::ostream& out, const ListAssignment& la);

// Trace as tab-separated "step vertex charge_before [target]" lines.
void write_trace(std::ostream& out, const Trace& t);

// DOT rendering: S as boxes, I filled, deletion order as labels.
void write_dot(std::ostream& out, const SimpleGraph& g, const std::vector<VertexId>& s,
               const std::vector<VertexId>& i_set, const Witness* order);

// File helpers (throw Error when the file cannot be opened).
std::string slurp(const std::string& path);
void spit(const std::string& path, const std::string& content);

} // namespace wd
