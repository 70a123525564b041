#include "sandpiles/families.hpp"

#include <limits>
#include <numeric>
#include <string>

#include "sandpiles/errors.hpp"

namespace sandpiles {

namespace {

std::int64_t checked_sum(const std::vector<std::int64_t>& v) {
    std::int64_t s = 0;
    for (std::int64_t x : v) s += x;
    return s;
}

void check_attachment(const std::vector<std::int64_t>& a,
                      const std::vector<std::int64_t>& b, int size,
                      const char* which) {
    if (static_cast<int>(a.size()) != size ||
        static_cast<int>(b.size()) != size)
        throw InvalidSpecError(std::string(which) +
                               " attachment vectors must match the graph's "
                               "vertex count");
    for (std::int64_t x : a)
        if (x < 0)
            throw InvalidSpecError(std::string(which) +
                                   " attachment counts must be nonnegative");
    for (std::int64_t x : b)
        if (x < 0)
            throw InvalidSpecError(std::string(which) +
                                   " attachment counts must be nonnegative");
    if (size > 0 && checked_sum(a) + checked_sum(b) == 0)
        throw InvalidSpecError(std::string(which) +
                               " is nonempty but attaches with no edges");
}

}  // namespace

Multigraph build_h(const HSpec& spec) {
    const int n = spec.cycle_length;
    if (n < 3) throw InvalidSpecError("cycle length must be at least 3");
    const int i = spec.attach_index;
    if (i < 0 || i > n - 2)
        throw InvalidSpecError("attachment index must be in 0..n-2");

    const int r = spec.f ? spec.f->vertex_count() : 0;
    const int s = spec.g ? spec.g->vertex_count() : 0;
    check_attachment(spec.f1, spec.f2, r, "F");
    check_attachment(spec.g1, spec.g2, s, "G");

    Multigraph h(r + n + s);

    if (spec.f)
        for (const auto& [pair, m] : spec.f->edges())
            h.add_edges(pair.first, pair.second, m);

    for (int t = 1; t < n; ++t) h.add_edges(r + t, r + t + 1, 1);
    h.add_edges(r + n, r + 1, 1);

    if (spec.g)
        for (const auto& [pair, m] : spec.g->edges())
            h.add_edges(r + n + pair.first, r + n + pair.second, m);

    for (int v = 1; v <= s; ++v) {
        h.add_edges(r + n + v, r + n - 1, spec.g1[v - 1]);
        h.add_edges(r + n + v, r + n, spec.g2[v - 1]);
    }

    // Index 0 wraps the first attachment point around to cycle vertex n.
    const int f1_target = (i == 0) ? r + n : r + i;
    for (int v = 1; v <= r; ++v) {
        h.add_edges(v, f1_target, spec.f1[v - 1]);
        h.add_edges(v, r + i + 1, spec.f2[v - 1]);
    }

    if (!h.is_connected())
        throw InvalidSpecError("construction is disconnected (F or G has a "
                               "component with no attachment edges)");
    return h;
}

namespace {

int checked_vertex_total(const std::vector<std::int64_t>& a) {
    if (a.empty()) throw InvalidSpecError("at least one cycle required");
    std::int64_t total = 0;
    for (std::int64_t x : a) {
        if (x < 2)
            throw InvalidSpecError("cycle lengths must be at least 2");
        total += x;
    }
    total -= 2 * (static_cast<std::int64_t>(a.size()) - 1);
    if (total > std::numeric_limits<int>::max())
        throw InvalidSpecError("cycle lengths too large");
    return static_cast<int>(total);
}

}  // namespace

Multigraph build_ch_member(const ChSpec& spec) {
    const auto& a = spec.cycle_lengths;
    const int n = static_cast<int>(a.size());
    const int total = checked_vertex_total(a);
    if (static_cast<int>(spec.attachment_plan.size()) != n - 1)
        throw InvalidSpecError("attachment plan must have n-1 entries");

    Multigraph g(total);

    std::vector<VertexId> attach;
    const int a0 = static_cast<int>(a[0]);
    for (int v = 1; v <= a0; ++v) attach.push_back(v);
    if (a0 == 2) {
        g.add_edges(1, 2, 2);
    } else {
        for (int v = 1; v < a0; ++v) g.add_edges(v, v + 1, 1);
        g.add_edges(a0, 1, 1);
    }

    VertexId next = a0 + 1;
    for (int t = 0; t + 1 < n; ++t) {
        const int p = spec.attachment_plan[t];
        if (p < 1 || p >= static_cast<int>(attach.size()))
            throw InvalidSpecError(
                "plan entry " + std::to_string(p) + " at step " +
                std::to_string(t + 1) + " outside 1.." +
                std::to_string(attach.size() - 1));
        const VertexId w1 = attach[p - 1];
        const VertexId w2 = attach[p];
        const int len = static_cast<int>(a[t + 1]);

        if (len == 2) {
            g.add_edges(w1, w2, 1);
            attach = {w1, w2};
            continue;
        }

        std::vector<VertexId> path;
        for (int c = 0; c < len - 2; ++c) path.push_back(next++);
        g.add_edges(w1, path.front(), 1);
        for (std::size_t c = 0; c + 1 < path.size(); ++c)
            g.add_edges(path[c], path[c + 1], 1);
        g.add_edges(path.back(), w2, 1);

        attach.clear();
        attach.push_back(w1);
        attach.insert(attach.end(), path.begin(), path.end());
        attach.push_back(w2);
    }

    return g;
}

Multigraph build_ch_canonical(const std::vector<std::int64_t>& a) {
    const int total = checked_vertex_total(a);
    const VertexId hub = total;
    Multigraph g(total);

    // Cycle j covers outer vertices start..end plus the hub; its two hub
    // spokes are {hub, start} and {hub, end}, and the next cycle reuses the
    // second one, so only the first cycle adds its opening spoke.
    g.add_edges(1, hub, 1);
    VertexId start = 1;
    for (std::int64_t len : a) {
        const VertexId end = start + static_cast<int>(len) - 2;
        for (VertexId v = start; v < end; ++v) g.add_edges(v, v + 1, 1);
        g.add_edges(end, hub, 1);
        start = end;
    }
    return g;
}

std::vector<int> canonical_plan(const std::vector<std::int64_t>& a) {
    checked_vertex_total(a);
    // Gluing across the last pair keeps every new cycle at the tail, which
    // is the canonical hub-and-fan layout in different vertex numbering.
    std::vector<int> plan;
    for (std::size_t t = 0; t + 1 < a.size(); ++t)
        plan.push_back(static_cast<int>(a[t]) - 1);
    return plan;
}

}  // namespace sandpiles
