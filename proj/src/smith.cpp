#include "sandpiles/smith.hpp"

#include <algorithm>
#include <utility>

#include "snf_kernels.hpp"

namespace sandpiles {

namespace detail {

bool find_min_pivot(const IntMatrix& m, int s, int& pi, int& pj) {
    bool found = false;
    Int best;
    for (int i = s; i < m.rows(); ++i) {
        for (int j = s; j < m.cols(); ++j) {
            const Int& e = m(i, j);
            if (e == 0) continue;
            Int a = abs(e);
            if (!found || a < best) {
                found = true;
                best = std::move(a);
                pi = i;
                pj = j;
            }
        }
    }
    return found;
}

}  // namespace detail

namespace {

// diag(a, b) is equivalent to diag(gcd, lcm); sweeping that exchange over
// adjacent pairs (moving zeros to the back) until nothing changes yields
// the divisibility chain.
void chain_fixup(std::vector<Int>& d) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < d.size(); ++i) {
            Int& a = d[i];
            Int& b = d[i + 1];
            if (a == 0) {
                if (b != 0) {
                    std::swap(a, b);
                    changed = true;
                }
                continue;
            }
            if (b % a != 0) {
                Int g = gcd(a, b);
                Int l = a / g * b;
                a = std::move(g);
                b = std::move(l);
                changed = true;
            }
        }
    }
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m, Exec exec) {
    IntMatrix work = m;
    if (exec == Exec::serial)
        detail::snf_diagonalize_serial(work);
    else
        detail::snf_diagonalize_omp(work);

    const int k = std::min(work.rows(), work.cols());
    std::vector<Int> d(k);
    for (int i = 0; i < k; ++i) d[i] = abs(work(i, i));
    std::sort(d.begin(), d.end(), [](const Int& a, const Int& b) {
        if (a == 0) return false;  // zeros last
        if (b == 0) return true;
        return a < b;
    });
    chain_fixup(d);
    return SmithForm{std::move(d)};
}

bool is_divisibility_chain(std::span<const Int> diag) {
    for (const Int& d : diag)
        if (d < 0) return false;
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
        const Int& a = diag[i];
        const Int& b = diag[i + 1];
        if (a == 0) {
            if (b != 0) return false;
        } else if (b % a != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace sandpiles
