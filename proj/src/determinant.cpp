#include "sandpiles/determinant.hpp"

#include "sandpiles/errors.hpp"

namespace sandpiles {

namespace {

// One Bareiss update of row i against pivot row k:
//   m(i, j) <- (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev
// The division is exact (every intermediate entry is a minor of the
// original matrix), so entries stay at determinant size instead of growing
// exponentially as in plain fraction-free elimination.
void eliminate_row(IntMatrix& m, int k, int i, const Int& prev) {
    const int n = m.cols();
    for (int j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
    }
    m(i, k) = 0;
}

void eliminate_block_serial(IntMatrix& m, int k, const Int& prev) {
    for (int i = k + 1; i < m.rows(); ++i) eliminate_row(m, k, i, prev);
}

// Rows below the pivot are independent: each reads row k and writes row i.
void eliminate_block_omp(IntMatrix& m, int k, const Int& prev) {
#pragma omp parallel for schedule(static)
    for (int i = k + 1; i < m.rows(); ++i) eliminate_row(m, k, i, prev);
}

}  // namespace

Int determinant(const IntMatrix& m, Exec exec) {
    if (m.rows() != m.cols())
        throw NotSquareError("determinant requires a square matrix");

    IntMatrix work = m;
    const int n = work.rows();
    int sign = 1;
    Int prev = 1;

    for (int k = 0; k + 1 < n; ++k) {
        if (work(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i) {
                if (work(i, k) != 0) {
                    p = i;
                    break;
                }
            }
            if (p < 0) return 0;  // zero column: singular
            work.swap_rows(k, p);
            sign = -sign;
        }
        if (exec == Exec::serial)
            eliminate_block_serial(work, k, prev);
        else
            eliminate_block_omp(work, k, prev);
        prev = work(k, k);
    }

    Int det = work(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

}  // namespace sandpiles
