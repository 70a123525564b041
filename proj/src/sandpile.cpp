#include "sandpiles/sandpile.hpp"

#include <numeric>
#include <utility>

#include "sandpiles/determinant.hpp"
#include "sandpiles/errors.hpp"
#include "sandpiles/smith.hpp"

namespace sandpiles {

std::string GroupStructure::to_string() const {
    if (invariant_factors.empty()) return "trivial";
    std::string s;
    for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
        if (i) s += " x ";
        s += "C_" + invariant_factors[i].get_str();
    }
    return s;
}

GroupStructure sandpile_group_dropping(const Multigraph& g, VertexId drop,
                                       Exec exec) {
    if (!g.is_connected())
        throw DisconnectedError(
            "sandpile group undefined: graph is not connected");
    if (g.vertex_count() == 1) return GroupStructure{};

    SmithForm snf = smith_normal_form(g.reduced_laplacian(drop), exec);
    GroupStructure out;
    for (Int& d : snf.diag) {
        if (d > 1) {
            out.order *= d;
            out.invariant_factors.push_back(std::move(d));
        }
    }
    return out;
}

GroupStructure sandpile_group(const Multigraph& g, Exec exec) {
    return sandpile_group_dropping(g, g.vertex_count(), exec);
}

Int group_order(const Multigraph& g, Exec exec) {
    if (!g.is_connected())
        throw DisconnectedError(
            "sandpile group undefined: graph is not connected");
    if (g.vertex_count() == 1) return 1;
    return abs(determinant(g.reduced_laplacian(g.vertex_count()), exec));
}

bool groups_isomorphic(const GroupStructure& a, const GroupStructure& b) {
    // Invariant-factor form is canonical.
    return a.invariant_factors == b.invariant_factors;
}

namespace {

int dsu_find(std::vector<int>& parent, int v) {
    while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    return v;
}

}  // namespace

Int spanning_tree_count_bruteforce(const Multigraph& g) {
    const int n = g.vertex_count();
    if (n == 1) return 1;

    std::int64_t total = g.edge_count();
    if (total > 20)
        throw TooLargeError(
            "brute-force tree count limited to total multiplicity 20");

    // Parallel edges become distinct instances; a tree uses at most one of
    // each parallel bundle anyway (two would close a cycle), so instances
    // of the same pair never co-occur in a counted subset, and every
    // spanning tree of the multigraph is counted once per instance choice,
    // which is exactly the multigraph count.
    std::vector<std::pair<VertexId, VertexId>> inst;
    inst.reserve(total);
    for (const auto& [pair, m] : g.edges())
        for (std::int64_t i = 0; i < m; ++i) inst.push_back(pair);

    const int k = n - 1;
    if (k > total) return 0;

    std::vector<int> c(k);
    std::iota(c.begin(), c.end(), 0);
    long count = 0;
    std::vector<int> parent(n + 1);

    for (;;) {
        std::iota(parent.begin(), parent.end(), 0);
        bool acyclic = true;
        for (int i = 0; i < k && acyclic; ++i) {
            int a = dsu_find(parent, inst[c[i]].first);
            int b = dsu_find(parent, inst[c[i]].second);
            if (a == b)
                acyclic = false;
            else
                parent[a] = b;
        }
        // k acyclic edges on n vertices always form a spanning tree.
        if (acyclic) ++count;

        int i = k - 1;
        while (i >= 0 && c[i] == static_cast<int>(total) - k + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return Int(count);
}

}  // namespace sandpiles
