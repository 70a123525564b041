#include <algorithm>

#include "snf_kernels.hpp"

namespace sandpiles::detail {

// OpenMP kernel. Same elimination as the serial reference; the row sweep
// writes only row i and reads row s, the column sweep writes only column j
// and reads column s, so each sweep parallelizes over its index with no
// shared writes and the result is bit-identical to the serial kernel.
void snf_diagonalize_omp(IntMatrix& m) {
    const int rows = m.rows();
    const int cols = m.cols();
    const int k = std::min(rows, cols);

    for (int s = 0; s < k; ++s) {
        int pi, pj;
        if (!find_min_pivot(m, s, pi, pj)) break;
        m.swap_rows(s, pi);
        m.swap_cols(s, pj);

        for (;;) {
#pragma omp parallel for schedule(static)
            for (int i = s + 1; i < rows; ++i) {
                if (m(i, s) == 0) continue;
                Int q = m(i, s) / m(s, s);
                if (q == 0) continue;
                for (int j = s; j < cols; ++j) m(i, j) -= q * m(s, j);
            }
#pragma omp parallel for schedule(static)
            for (int j = s + 1; j < cols; ++j) {
                if (m(s, j) == 0) continue;
                Int q = m(s, j) / m(s, s);
                if (q == 0) continue;
                for (int i = s; i < rows; ++i) m(i, j) -= q * m(i, s);
            }

            bool clean = true;
            for (int i = s + 1; i < rows && clean; ++i)
                if (m(i, s) != 0) clean = false;
            for (int j = s + 1; j < cols && clean; ++j)
                if (m(s, j) != 0) clean = false;
            if (clean) break;

            find_min_pivot(m, s, pi, pj);
            m.swap_rows(s, pi);
            m.swap_cols(s, pj);
        }
    }
}

}  // namespace sandpiles::detail
