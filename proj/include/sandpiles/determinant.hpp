#pragma once

#include "sandpiles/exec.hpp"
#include "sandpiles/int_matrix.hpp"

namespace sandpiles {

// Exact determinant by fraction-free (Bareiss) elimination with row
// pivoting. Throws NotSquareError for non-square input.
Int determinant(const IntMatrix& m, Exec exec = Exec::parallel);

}  // namespace sandpiles
