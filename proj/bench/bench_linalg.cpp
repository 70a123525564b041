// Compares the serial reference kernels against the OpenMP kernels:
// Smith normal form and Bareiss determinant on random dense matrices, plus
// both on the reduced Laplacian of a large chained-cycle graph. Results are
// checked for equality while timing.

#include <chrono>
#include <cstdio>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sandpiles/determinant.hpp"
#include "sandpiles/families.hpp"
#include "sandpiles/rng.hpp"
#include "sandpiles/smith.hpp"

using namespace sandpiles;

namespace {

IntMatrix random_square(SplitMix64& rng, int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = static_cast<long>(rng.range(-9, 9));
    return m;
}

template <typename Fn>
double best_of(int reps, Fn fn) {
    double best = 1e99;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        double s = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
        if (s < best) best = s;
    }
    return best;
}

void row(const char* kernel, const std::string& label, double serial,
         double parallel) {
    std::printf("%-12s %-12s %9.3fs %9.3fs %7.2fx\n", kernel, label.c_str(),
                serial, parallel, serial / parallel);
}

void bench_smith(const IntMatrix& m, const std::string& label) {
    SmithForm check_serial, check_parallel;
    double s = best_of(3, [&] { check_serial = smith_normal_form(m, Exec::serial); });
    double p = best_of(3, [&] { check_parallel = smith_normal_form(m, Exec::parallel); });
    if (!(check_serial == check_parallel)) {
        std::printf("smith %s: KERNELS DISAGREE\n", label.c_str());
        return;
    }
    row("smith", label, s, p);
}

void bench_det(const IntMatrix& m, const std::string& label) {
    Int check_serial, check_parallel;
    double s = best_of(3, [&] { check_serial = determinant(m, Exec::serial); });
    double p = best_of(3, [&] { check_parallel = determinant(m, Exec::parallel); });
    if (check_serial != check_parallel) {
        std::printf("det %s: KERNELS DISAGREE\n", label.c_str());
        return;
    }
    row("det", label, s, p);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: not enabled\n");
#endif
    std::printf("%-12s %-12s %10s %10s %8s\n", "kernel", "input", "serial",
                "omp", "speedup");

    SplitMix64 rng(12);
    for (int n : {32, 64, 96})
        bench_smith(random_square(rng, n),
                    std::to_string(n) + "x" + std::to_string(n));
    for (int n : {64, 128, 192})
        bench_det(random_square(rng, n),
                  std::to_string(n) + "x" + std::to_string(n));

    // 60 five-cycles chained: 182 vertices, sparse banded structure
    std::vector<std::int64_t> a(60, 5);
    Multigraph ch = build_ch_canonical(a);
    IntMatrix reduced = ch.reduced_laplacian(ch.vertex_count());
    std::string label = "chain" + std::to_string(reduced.rows());
    bench_smith(reduced, label);
    bench_det(reduced, label);
    return 0;
}
