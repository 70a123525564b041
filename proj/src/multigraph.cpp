#include "sandpiles/multigraph.hpp"

#include <string>
#include <vector>

#include "sandpiles/errors.hpp"

namespace sandpiles {

Multigraph::Multigraph(int vertex_count) : vertex_count_(vertex_count) {
    if (vertex_count < 1)
        throw OutOfRangeError("vertex count must be at least 1");
}

void Multigraph::check_vertex(VertexId v) const {
    if (v < 1 || v > vertex_count_)
        throw OutOfRangeError("vertex " + std::to_string(v) +
                              " out of range 1.." +
                              std::to_string(vertex_count_));
}

void Multigraph::add_edges(VertexId u, VertexId v, std::int64_t m) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw SelfLoopError("self-loop at vertex " + std::to_string(u) +
                            " not allowed");
    if (m < 0) throw OutOfRangeError("edge multiplicity must be nonnegative");
    if (m == 0) return;
    if (u > v) std::swap(u, v);
    edges_[{u, v}] += m;
}

std::int64_t Multigraph::multiplicity(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    if (u > v) std::swap(u, v);
    auto it = edges_.find({u, v});
    return it == edges_.end() ? 0 : it->second;
}

std::int64_t Multigraph::degree(VertexId v) const {
    check_vertex(v);
    std::int64_t d = 0;
    for (const auto& [pair, m] : edges_)
        if (pair.first == v || pair.second == v) d += m;
    return d;
}

std::int64_t Multigraph::edge_count() const {
    std::int64_t total = 0;
    for (const auto& [pair, m] : edges_) total += m;
    return total;
}

bool Multigraph::is_connected() const {
    std::vector<std::vector<VertexId>> adj(vertex_count_ + 1);
    for (const auto& [pair, m] : edges_) {
        adj[pair.first].push_back(pair.second);
        adj[pair.second].push_back(pair.first);
    }
    std::vector<char> seen(vertex_count_ + 1, 0);
    std::vector<VertexId> stack{1};
    seen[1] = 1;
    int reached = 0;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        ++reached;
        for (VertexId w : adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return reached == vertex_count_;
}

IntMatrix Multigraph::laplacian() const {
    IntMatrix l(vertex_count_, vertex_count_);
    for (const auto& [pair, m] : edges_) {
        const int u = pair.first - 1;
        const int v = pair.second - 1;
        l(u, v) -= m;
        l(v, u) -= m;
        l(u, u) += m;
        l(v, v) += m;
    }
    return l;
}

IntMatrix Multigraph::reduced_laplacian(VertexId drop) const {
    check_vertex(drop);
    if (vertex_count_ < 2)
        throw TooSmallError(
            "reduced Laplacian requires at least two vertices");
    IntMatrix full = laplacian();
    IntMatrix r(vertex_count_ - 1, vertex_count_ - 1);
    for (int i = 0, ri = 0; i < vertex_count_; ++i) {
        if (i == drop - 1) continue;
        for (int j = 0, rj = 0; j < vertex_count_; ++j) {
            if (j == drop - 1) continue;
            r(ri, rj) = full(i, j);
            ++rj;
        }
        ++ri;
    }
    return r;
}

}  // namespace sandpiles
