#pragma once

#include "sandpiles/int_matrix.hpp"

// Internal elimination kernels shared by smith.cpp. Both reduce the matrix
// in place to a diagonal equivalent under unimodular row/column operations;
// the diagonal is normalized to the invariant-factor chain by the caller.

namespace sandpiles::detail {

void snf_diagonalize_serial(IntMatrix& m);
void snf_diagonalize_omp(IntMatrix& m);

// Locates the entry of smallest nonzero magnitude in the trailing submatrix
// with top-left corner (s, s). Returns false when that submatrix is zero.
bool find_min_pivot(const IntMatrix& m, int s, int& pi, int& pj);

}  // namespace sandpiles::detail
