#pragma once

#include <cstddef>
#include <vector>

#include "bigraft/scalar.hpp"

namespace bigraft {

// Dense row-major matrix of exact integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    IntMatrix transposed() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// Rank over the rationals by fraction-free elimination: each row update is
// pivot * row - entry * pivot_row followed by division by the row content.
std::size_t rank(IntMatrix m);

}  // namespace bigraft
