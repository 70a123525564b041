#include <doctest.h>

#include "sandpiles/errors.hpp"
#include "sandpiles/multigraph.hpp"
#include "sandpiles/rng.hpp"
#include "sandpiles/smith.hpp"
#include "sandpiles/verify.hpp"

using namespace sandpiles;

namespace {

Multigraph triangle() {
    Multigraph g(3);
    g.add_edges(1, 2, 1);
    g.add_edges(2, 3, 1);
    g.add_edges(1, 3, 1);
    return g;
}

Multigraph cycle(int n) {
    Multigraph g(n);
    for (int v = 1; v < n; ++v) g.add_edges(v, v + 1, 1);
    g.add_edges(n, 1, 1);
    return g;
}

}  // namespace

TEST_CASE("add_edges accumulates and validates") {
    Multigraph g(3);
    g.add_edges(1, 2, 1);
    g.add_edges(2, 1, 2);  // unordered pair, same slot
    CHECK(g.multiplicity(1, 2) == 3);
    CHECK(g.multiplicity(2, 1) == 3);
    g.add_edges(1, 3, 0);  // no-op
    CHECK(g.multiplicity(1, 3) == 0);
    CHECK(g.edge_count() == 3);

    CHECK_THROWS_AS(g.add_edges(2, 2, 1), SelfLoopError);
    CHECK_THROWS_AS(g.add_edges(0, 1, 1), OutOfRangeError);
    CHECK_THROWS_AS(g.add_edges(1, 4, 1), OutOfRangeError);
    CHECK_THROWS_AS(g.add_edges(1, 2, -1), OutOfRangeError);
    CHECK_THROWS_AS(Multigraph(0), OutOfRangeError);
}

TEST_CASE("degree") {
    Multigraph tri = triangle();
    CHECK(tri.degree(1) == 2);

    Multigraph par(2);
    par.add_edges(1, 2, 3);
    CHECK(par.degree(1) == 3);

    Multigraph iso(2);
    CHECK(iso.degree(1) == 0);
    CHECK_THROWS_AS(iso.degree(3), OutOfRangeError);
}

TEST_CASE("connectivity") {
    CHECK(cycle(5).is_connected());
    CHECK(Multigraph(1).is_connected());
    Multigraph two(2);
    CHECK(!two.is_connected());
    two.add_edges(1, 2, 1);
    CHECK(two.is_connected());
}

TEST_CASE("Laplacian of small graphs") {
    CHECK(triangle().laplacian() ==
          IntMatrix(3, 3, {2, -1, -1, -1, 2, -1, -1, -1, 2}));

    Multigraph par(2);
    par.add_edges(1, 2, 2);
    CHECK(par.laplacian() == IntMatrix(2, 2, {2, -2, -2, 2}));
}

TEST_CASE("Laplacian of the 6-cycle is the expected circulant") {
    IntMatrix l = cycle(6).laplacian();
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            int d = (6 + i - j) % 6;
            Int expect = (d == 0) ? 2 : (d == 1 || d == 5) ? -1 : 0;
            CHECK(l(i, j) == expect);
        }
    }
}

TEST_CASE("reduced Laplacian") {
    CHECK(triangle().reduced_laplacian(3) ==
          IntMatrix(2, 2, {2, -1, -1, 2}));
    // dropping an interior vertex removes that row and column, not a block
    CHECK(triangle().reduced_laplacian(2) ==
          IntMatrix(2, 2, {2, -1, -1, 2}));

    IntMatrix r = cycle(5).reduced_laplacian(5);
    CHECK(r == IntMatrix(4, 4,
                         {2, -1, 0, 0,
                          -1, 2, -1, 0,
                          0, -1, 2, -1,
                          0, 0, -1, 2}));

    CHECK_THROWS_AS(Multigraph(1).reduced_laplacian(1), TooSmallError);
    CHECK_THROWS_AS(cycle(3).reduced_laplacian(4), OutOfRangeError);
}

TEST_CASE("Laplacian invariants on random graphs") {
    SplitMix64 rng(555);
    for (int t = 0; t < 40; ++t) {
        int n = 2 + static_cast<int>(rng.below(6));
        Multigraph g = random_connected_multigraph(
            rng, n, static_cast<int>(rng.below(8)), 3);
        IntMatrix l = g.laplacian();

        std::int64_t degree_sum = 0;
        for (int v = 1; v <= n; ++v) degree_sum += g.degree(v);
        CHECK(degree_sum == 2 * g.edge_count());

        CHECK(l == l.transposed());
        for (int i = 0; i < n; ++i) {
            Int row_sum = 0;
            for (int j = 0; j < n; ++j) row_sum += l(i, j);
            CHECK(row_sum == 0);
        }
        CHECK(l(0, 0) == g.degree(1));
    }
}

TEST_CASE("Smith form of the reduced Laplacian ignores the dropped vertex") {
    SplitMix64 rng(556);
    for (int t = 0; t < 25; ++t) {
        int n = 2 + static_cast<int>(rng.below(5));
        Multigraph g = random_connected_multigraph(
            rng, n, static_cast<int>(rng.below(6)), 3);
        SmithForm base = smith_normal_form(g.reduced_laplacian(1));
        for (int v = 2; v <= n; ++v)
            CHECK(smith_normal_form(g.reduced_laplacian(v)).diag ==
                  base.diag);
    }
}
