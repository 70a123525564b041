#include "sandpiles/int_matrix.hpp"

#include <sstream>
#include <utility>

#include "sandpiles/errors.hpp"

namespace sandpiles {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1)
        throw OutOfRangeError("matrix dimensions must be at least 1x1");
    data_.resize(static_cast<std::size_t>(rows) * cols);
}

IntMatrix::IntMatrix(int rows, int cols, std::initializer_list<long> entries)
    : IntMatrix(rows, cols) {
    if (entries.size() != data_.size())
        throw OutOfRangeError("entry count does not match matrix dimensions");
    std::size_t k = 0;
    for (long e : entries) data_[k++] = e;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

void IntMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::string IntMatrix::to_text() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << (*this)(i, j);
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace sandpiles
