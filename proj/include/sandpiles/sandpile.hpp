#pragma once

#include <string>
#include <vector>

#include "sandpiles/exec.hpp"
#include "sandpiles/multigraph.hpp"

namespace sandpiles {

// Finite abelian group in invariant-factor form: each factor >= 2 and each
// divides the next. The trivial group has no factors and order 1. This is
// a canonical form, so isomorphism is plain equality.
struct GroupStructure {
    std::vector<Int> invariant_factors;
    Int order = 1;

    bool operator==(const GroupStructure&) const = default;

    // "trivial", "C_5", "C_4 x C_4", ...
    std::string to_string() const;
};

// Sandpile group: cyclic factors read off the Smith normal form of the
// reduced Laplacian, unit factors dropped. The choice of dropped vertex
// does not change the result (asserted by tests); the default drops the
// highest-numbered vertex. Throws DisconnectedError when the group is not
// finite, i.e. the graph is not connected.
GroupStructure sandpile_group(const Multigraph& g, Exec exec = Exec::parallel);
GroupStructure sandpile_group_dropping(const Multigraph& g, VertexId drop,
                                       Exec exec = Exec::parallel);

// Order of the sandpile group, computed independently of the Smith form as
// |det| of the reduced Laplacian. Equals the spanning tree count.
Int group_order(const Multigraph& g, Exec exec = Exec::parallel);

bool groups_isomorphic(const GroupStructure& a, const GroupStructure& b);

// Spanning trees by direct enumeration of edge subsets; test oracle only.
// Refuses graphs with total edge multiplicity above 20 (TooLargeError).
// Returns 0 for disconnected graphs.
Int spanning_tree_count_bruteforce(const Multigraph& g);

}  // namespace sandpiles
