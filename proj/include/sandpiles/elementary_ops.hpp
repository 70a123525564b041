#pragma once

#include <cstdint>

#include "sandpiles/int_matrix.hpp"

namespace sandpiles {

// Applies `steps` random unimodular row/column operations (add or subtract
// another row/column, swap two, negate one), drawn deterministically from
// `seed`. Such operations preserve the Smith normal form by construction,
// which is what the fuzz tests exercise.
IntMatrix elementary_ops_fuzz(const IntMatrix& m, std::uint64_t seed, int steps);

}  // namespace sandpiles
