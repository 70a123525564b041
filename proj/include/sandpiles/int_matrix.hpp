#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace sandpiles {

// Arbitrary-precision integer. All group orders, determinants and matrix
// entries use this type; intermediate values in exact elimination routinely
// exceed 64 bits.
using Int = mpz_class;

// Dense row-major integer matrix. Indices are 0-based here; the 1-based
// vertex ids of Multigraph are translated at the graph layer.
class IntMatrix {
public:
    IntMatrix(int rows, int cols);
    IntMatrix(int rows, int cols, std::initializer_list<long> entries);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int i, int j) {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }
    const Int& operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    void swap_rows(int a, int b);
    void swap_cols(int a, int b);

    IntMatrix transposed() const;

    // Plain rows-of-integers text, one matrix row per line.
    std::string to_text() const;

    bool operator==(const IntMatrix&) const = default;

private:
    int rows_;
    int cols_;
    std::vector<Int> data_;
};

}  // namespace sandpiles
