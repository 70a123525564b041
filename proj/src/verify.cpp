#include "sandpiles/verify.hpp"

#include <utility>

#include "sandpiles/errors.hpp"
#include "sandpiles/formulas.hpp"
#include "sandpiles/sandpile.hpp"

namespace sandpiles {

namespace {

// Runs `check` once per trial, each trial seeded independently so the
// schedule cannot affect the outcome. A trial that throws counts as a
// failure (exceptions must not escape the parallel region).
template <typename Check>
VerifyResult run_batch(int trials, std::uint64_t seed, Check&& check) {
    if (trials < 1) throw OutOfRangeError("trial count must be at least 1");
    std::vector<char> ok(trials, 0);

#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < trials; ++t) {
        SplitMix64 rng(trial_seed(seed, t));
        bool good = false;
        try {
            good = check(rng);
        } catch (...) {
            good = false;
        }
        ok[t] = good ? 1 : 0;
    }

    VerifyResult r;
    for (int t = 0; t < trials; ++t) {
        if (ok[t])
            ++r.passed;
        else {
            ++r.failed;
            r.failure_seeds.push_back(trial_seed(seed, t));
        }
    }
    return r;
}

Args random_args(SplitMix64& rng, int n, std::int64_t lo, std::int64_t hi) {
    Args x;
    x.reserve(n);
    for (int i = 0; i < n; ++i)
        x.emplace_back(static_cast<long>(rng.range(lo, hi)));
    return x;
}

}  // namespace

Multigraph random_connected_multigraph(SplitMix64& rng, int vertices,
                                       int extra_attempts,
                                       std::int64_t max_mult) {
    Multigraph g(vertices);
    for (int v = 2; v <= vertices; ++v)
        g.add_edges(1 + static_cast<int>(rng.below(v - 1)), v, 1);
    for (int e = 0; e < extra_attempts && vertices >= 2; ++e) {
        int u = 1 + static_cast<int>(rng.below(vertices));
        int v = 1 + static_cast<int>(rng.below(vertices));
        if (u == v) continue;
        if (g.multiplicity(u, v) >= max_mult) continue;
        g.add_edges(u, v, 1);
    }
    return g;
}

HSpec random_h_spec(SplitMix64& rng) {
    HSpec spec;
    spec.cycle_length = 3 + static_cast<int>(rng.below(6));  // 3..8

    auto side = [&rng](std::optional<Multigraph>& graph,
                       std::vector<std::int64_t>& a1,
                       std::vector<std::int64_t>& a2) {
        int size = static_cast<int>(rng.below(5));  // 0..4
        if (size == 0) return;
        graph = random_connected_multigraph(
            rng, size, static_cast<int>(rng.below(3)), 2);
        a1.resize(size);
        a2.resize(size);
        std::int64_t total = 0;
        for (int v = 0; v < size; ++v) {
            a1[v] = static_cast<std::int64_t>(rng.below(3));  // 0..2
            a2[v] = static_cast<std::int64_t>(rng.below(3));
            total += a1[v] + a2[v];
        }
        if (total == 0) a1[rng.below(size)] = 1;  // keep it attached
    };

    side(spec.f, spec.f1, spec.f2);
    side(spec.g, spec.g1, spec.g2);
    spec.attach_index = 0;
    return spec;
}

VerifyResult verify_theorem1(int trials, std::uint64_t seed) {
    return run_batch(trials, seed, [](SplitMix64& rng) {
        HSpec spec = random_h_spec(rng);
        GroupStructure base;
        for (int i = 0; i <= spec.cycle_length - 2; ++i) {
            spec.attach_index = i;
            GroupStructure s = sandpile_group(build_h(spec), Exec::serial);
            if (i == 0)
                base = std::move(s);
            else if (!groups_isomorphic(base, s))
                return false;
        }
        return true;
    });
}

VerifyResult verify_theorem3(int trials, std::uint64_t seed) {
    return run_batch(trials, seed, [](SplitMix64& rng) {
        int n = 1 + static_cast<int>(rng.below(8));
        Args x = random_args(rng, n, 1, 20);
        return f_recursive(x) == g_closed_form(x);
    });
}

VerifyResult verify_theorem4(int trials, std::uint64_t seed) {
    return run_batch(trials, seed, [](SplitMix64& rng) {
        int n = 1 + static_cast<int>(rng.below(5));
        std::vector<std::int64_t> a;
        Args x;
        for (int i = 0; i < n; ++i) {
            a.push_back(rng.range(2, 6));
            x.emplace_back(static_cast<long>(a.back()));
        }
        GroupStructure s =
            sandpile_group(build_ch_canonical(a), Exec::serial);
        if (s.invariant_factors.size() > 1) return false;  // must be cyclic
        return s.order == f_recursive(x);
    });
}

VerifyResult verify_matrix_tree(int trials, std::uint64_t seed) {
    return run_batch(trials, seed, [](SplitMix64& rng) {
        int n = 2 + static_cast<int>(rng.below(5));  // 2..6 vertices
        int extra = static_cast<int>(rng.below(14 - (n - 1) + 1));
        Multigraph g = random_connected_multigraph(rng, n, extra, 3);
        return group_order(g, Exec::serial) ==
               spanning_tree_count_bruteforce(g);
    });
}

}  // namespace sandpiles
