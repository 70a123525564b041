#pragma once

#include <span>
#include <vector>

#include "sandpiles/exec.hpp"
#include "sandpiles/int_matrix.hpp"

namespace sandpiles {

// Diagonal of the Smith normal form: d_1 | d_2 | ... | d_k with
// k = min(rows, cols), every d_i >= 0, zeros last. Only the invariant
// factors are computed; no transform matrices are tracked.
struct SmithForm {
    std::vector<Int> diag;
    bool operator==(const SmithForm&) const = default;
};

SmithForm smith_normal_form(const IntMatrix& m, Exec exec = Exec::parallel);

// True iff the sequence is nonnegative and each entry divides the next
// (0 divides only 0, so zeros may appear only at the tail).
bool is_divisibility_chain(std::span<const Int> diag);

}  // namespace sandpiles
