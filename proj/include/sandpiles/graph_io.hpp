#pragma once

#include <iosfwd>
#include <string>

#include "sandpiles/multigraph.hpp"

namespace sandpiles {

// Text format, one directive per line:
//
//   vertices N
//   edge U V M
//
// U, V are 1-based ids, M >= 1; repeated `edge` lines for the same pair
// accumulate. Lines starting with '#' and blank lines are ignored. Any
// malformed input throws ParseError with the offending line number.
Multigraph read_graph(std::istream& in);
Multigraph read_graph_file(const std::string& path);

void write_graph(std::ostream& out, const Multigraph& g);
std::string write_graph_string(const Multigraph& g);

// Graphviz text; parallel edges are repeated so they render as such.
std::string write_dot(const Multigraph& g);

}  // namespace sandpiles
