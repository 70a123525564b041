#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "sandpiles/int_matrix.hpp"

namespace sandpiles {

// 1-based vertex index.
using VertexId = int;

// Undirected multigraph on vertices 1..n: positive multiplicities on
// unordered vertex pairs, no self-loops. Immutable once built apart from
// add_edges, the single construction primitive.
class Multigraph {
public:
    // Keyed by (u, v) with u < v; std::map keeps edge iteration (and hence
    // all serialized output) in a fixed order.
    using EdgeMap = std::map<std::pair<VertexId, VertexId>, std::int64_t>;

    explicit Multigraph(int vertex_count);

    int vertex_count() const { return vertex_count_; }

    // Raises the multiplicity of {u, v} by m. m = 0 is a no-op, m < 0 is an
    // error; u == v throws SelfLoopError.
    void add_edges(VertexId u, VertexId v, std::int64_t m);

    std::int64_t multiplicity(VertexId u, VertexId v) const;
    std::int64_t degree(VertexId v) const;

    // Total multiplicity over all pairs (parallel edges counted).
    std::int64_t edge_count() const;

    const EdgeMap& edges() const { return edges_; }

    bool is_connected() const;

    IntMatrix laplacian() const;

    // Laplacian with the row and column of `drop` removed. Requires at
    // least two vertices.
    IntMatrix reduced_laplacian(VertexId drop) const;

    bool operator==(const Multigraph&) const = default;

private:
    void check_vertex(VertexId v) const;

    int vertex_count_;
    EdgeMap edges_;
};

}  // namespace sandpiles
