#include "sandpiles/elementary_ops.hpp"

#include "sandpiles/rng.hpp"

namespace sandpiles {

IntMatrix elementary_ops_fuzz(const IntMatrix& m, std::uint64_t seed,
                              int steps) {
    IntMatrix a = m;
    SplitMix64 rng(seed);
    const int rows = a.rows();
    const int cols = a.cols();

    for (int s = 0; s < steps; ++s) {
        switch (rng.below(6)) {
        case 0: {  // row i += sign * row j
            if (rows < 2) break;
            int i = static_cast<int>(rng.below(rows));
            int j = (i + 1 + static_cast<int>(rng.below(rows - 1))) % rows;
            int sign = rng.below(2) ? 1 : -1;
            for (int c = 0; c < cols; ++c)
                a(i, c) += sign * a(j, c);
            break;
        }
        case 1: {  // col i += sign * col j
            if (cols < 2) break;
            int i = static_cast<int>(rng.below(cols));
            int j = (i + 1 + static_cast<int>(rng.below(cols - 1))) % cols;
            int sign = rng.below(2) ? 1 : -1;
            for (int r = 0; r < rows; ++r)
                a(r, i) += sign * a(r, j);
            break;
        }
        case 2: {
            if (rows < 2) break;
            int i = static_cast<int>(rng.below(rows));
            int j = (i + 1 + static_cast<int>(rng.below(rows - 1))) % rows;
            a.swap_rows(i, j);
            break;
        }
        case 3: {
            if (cols < 2) break;
            int i = static_cast<int>(rng.below(cols));
            int j = (i + 1 + static_cast<int>(rng.below(cols - 1))) % cols;
            a.swap_cols(i, j);
            break;
        }
        case 4: {
            int i = static_cast<int>(rng.below(rows));
            for (int c = 0; c < cols; ++c) a(i, c) = -a(i, c);
            break;
        }
        default: {
            int j = static_cast<int>(rng.below(cols));
            for (int r = 0; r < rows; ++r) a(r, j) = -a(r, j);
            break;
        }
        }
    }
    return a;
}

}  // namespace sandpiles
