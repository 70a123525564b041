#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sandpiles/multigraph.hpp"

namespace sandpiles {

// Two graphs F and G attached to an n-cycle T. Vertices of the result are
// numbered F first (1..r), then the cycle (r+1..r+n, in cycle order), then
// G (r+n+1..r+n+s).
//
//   - every vertex v of G gets g1[v] edges to cycle vertex r+n-1 and
//     g2[v] edges to cycle vertex r+n;
//   - every vertex v of F gets f1[v] edges to cycle vertex r+i (to r+n
//     when i = 0) and f2[v] edges to cycle vertex r+i+1.
//
// Varying attach_index while holding everything else fixed slides F around
// the cycle; the sandpile group is the same for every valid index.
struct HSpec {
    std::optional<Multigraph> f;       // absent = empty F
    std::optional<Multigraph> g;       // absent = empty G
    int cycle_length = 3;              // n >= 3
    int attach_index = 0;              // 0 <= i <= n-2
    std::vector<std::int64_t> f1, f2;  // per-vertex edge counts, length |F|
    std::vector<std::int64_t> g1, g2;  // length |G|
};

// Validates the spec (lengths, ranges, nonempty attachment whenever the
// corresponding graph is nonempty, connectivity of the result) and builds
// the graph. Throws InvalidSpecError.
Multigraph build_h(const HSpec& spec);

// Chain-of-cycles family member. Start with a cycle on a[0] vertices whose
// attachment list L runs around the cycle; step t (t = 0..n-2) glues a
// cycle of a[t+1] vertices across the plan[t]-th consecutive pair
// (w, w') = (L[plan[t]-1], L[plan[t]]):
//
//   - a[t+1] = 2 adds a parallel edge {w, w'} and the new list is [w, w'];
//   - otherwise a path of a[t+1]-2 fresh vertices v_1..v_{a-2} joins w to
//     w' and the new list is [w, v_1, ..., v_{a-2}, w'].
//
// plan[t] is 1-based and must satisfy 1 <= plan[t] <= |L| - 1.
struct ChSpec {
    std::vector<std::int64_t> cycle_lengths;  // n entries, each >= 2
    std::vector<int> attachment_plan;         // n-1 entries
};

Multigraph build_ch_member(const ChSpec& spec);

// Canonical representative of the class: every cycle passes through a
// shared hub vertex, consecutive cycles share exactly one hub spoke, and
// the non-hub vertices 1..k are numbered along the outer walk. The hub is
// vertex k+1 where k+1 = sum(a) - 2(n-1).
Multigraph build_ch_canonical(const std::vector<std::int64_t>& cycle_lengths);

// Attachment plan under which build_ch_member produces the canonical
// layout (up to vertex numbering): always glue across the last pair.
std::vector<int> canonical_plan(const std::vector<std::int64_t>& cycle_lengths);

}  // namespace sandpiles
