#pragma once

#include <utility>
#include <vector>

#include "sandpiles/int_matrix.hpp"

namespace sandpiles {

using Args = std::vector<Int>;

// Spanning-tree count of the chain-of-cycles graph with the given cycle
// lengths, by the recurrence
//
//   F_1(x1)            = x1
//   F_{j+1}(x1..xj, y) = F_j(x1..xj - 1) + (y - 1) F_j(x1..xj)
//
// where "x1..xj - 1" decrements the last argument. Each step consults F_j
// at just those two argument lists, so the evaluation keeps two running
// values and is linear in n. Defined for arbitrary integer arguments.
// Throws EmptyArgsError for an empty list.
Int f_recursive(const Args& x);

// Closed form: gamma_{n,n} - gamma_{n-2,n} + gamma_{n-4,n} - ..., stopping
// before the first index would go negative. Agrees with f_recursive on all
// integer points (the theorem the verify suite checks).
Int g_closed_form(const Args& x);

// Strictly increasing subset of {1..j}.
using IndexSet = std::vector<int>;

// C(i, j): all I of size i with consecutive elements differing by an odd
// amount and j - max(I) even. C(0, j) = { {} }. Sets are returned in
// lexicographic order.
std::vector<IndexSet> enumerate_C(int i, int j);

// Splits C(i, j) into (A, B) where B holds the sets containing j.
std::pair<std::vector<IndexSet>, std::vector<IndexSet>> split_AB(int i, int j);

// Sums of the monomials prod_{t in I} x_t over I in C/A/B(i, j). x must
// have exactly j coordinates; eval_beta_prime takes j - 1 and fixes the
// j-th coordinate to 1 (an empty family sums to 0). Throws
// ArityMismatchError on a wrong-length x.
Int eval_gamma(int i, int j, const Args& x);
Int eval_alpha(int i, int j, const Args& x);
Int eval_beta(int i, int j, const Args& x);
Int eval_beta_prime(int i, int j, const Args& x);

}  // namespace sandpiles
