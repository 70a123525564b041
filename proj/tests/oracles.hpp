#pragma once

// Independent oracles the tests pin library results against. Each one is
// written the dumbest possible way on purpose: different algorithm,
// different failure modes.

#include <array>
#include <vector>

#include "sandpiles/formulas.hpp"
#include "sandpiles/int_matrix.hpp"
#include "sandpiles/rng.hpp"

namespace oracles {

using sandpiles::Args;
using sandpiles::Int;
using sandpiles::IntMatrix;

// Cofactor expansion along the first row; exponential, keep n small.
inline Int det_cofactor(const IntMatrix& m) {
    const int n = m.rows();
    if (n == 1) return m(0, 0);
    Int total = 0;
    for (int c = 0; c < n; ++c) {
        if (m(0, c) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (int i = 1; i < n; ++i)
            for (int j = 0, mj = 0; j < n; ++j) {
                if (j == c) continue;
                minor(i - 1, mj++) = m(i, j);
            }
        Int term = m(0, c) * det_cofactor(minor);
        if (c % 2)
            total -= term;
        else
            total += term;
    }
    return total;
}

// Smith form of a 2x2 matrix: d1 = gcd of the entries, d2 = |det| / d1.
inline std::array<Int, 2> snf_2x2(const IntMatrix& m) {
    Int d1 = gcd(gcd(m(0, 0), m(0, 1)), gcd(m(1, 0), m(1, 1)));
    if (d1 == 0) return {Int(0), Int(0)};
    Int det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    if (det == 0) return {d1, Int(0)};
    return {d1, abs(det) / d1};
}

// The tree-count recurrence written literally, exponential in n.
inline Int f_naive(const Args& x) {
    if (x.size() == 1) return x[0];
    Args head(x.begin(), x.end() - 1);
    Args head_dec = head;
    head_dec.back() -= 1;
    return f_naive(head_dec) + (x.back() - 1) * f_naive(head);
}

// Every subset of {1..j} checked against the membership conditions as
// stated: size i, consecutive sorted elements differ by an odd amount,
// j - max even. Usable for j <= 16 or so.
inline std::vector<std::vector<int>> brute_force_C(int i, int j) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << j); ++mask) {
        std::vector<int> s;
        for (int v = 1; v <= j; ++v)
            if (mask & (1u << (v - 1))) s.push_back(v);
        if (static_cast<int>(s.size()) != i) continue;
        bool ok = true;
        for (std::size_t t = 0; t + 1 < s.size(); ++t)
            if ((s[t + 1] - s[t]) % 2 == 0) ok = false;
        if (!s.empty() && (j - s.back()) % 2 != 0) ok = false;
        if (ok) out.push_back(std::move(s));
    }
    return out;
}

inline IntMatrix random_matrix(sandpiles::SplitMix64& rng, int max_dim,
                               long lo, long hi) {
    int rows = 1 + static_cast<int>(rng.below(max_dim));
    int cols = 1 + static_cast<int>(rng.below(max_dim));
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = static_cast<long>(rng.range(lo, hi));
    return m;
}

inline IntMatrix random_square(sandpiles::SplitMix64& rng, int max_dim,
                               long lo, long hi) {
    int n = 1 + static_cast<int>(rng.below(max_dim));
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = static_cast<long>(rng.range(lo, hi));
    return m;
}

}  // namespace oracles
