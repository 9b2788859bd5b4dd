#include "bigraft/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace bigraft {

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x == 0; });
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b(k, j) != 0) out(i, j) += x * b(k, j);
            }
        }
    }
    return out;
}

namespace {

using Row = std::vector<Scalar>;

void divide_by_content(Row& row, std::size_t from) {
    Scalar g = 0;
    for (std::size_t j = from; j < row.size(); ++j) {
        if (row[j] != 0) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[j].get_mpz_t());
            if (g == 1) return;
        }
    }
    if (g <= 1) return;
    for (std::size_t j = from; j < row.size(); ++j) {
        if (row[j] != 0) mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), g.get_mpz_t());
    }
}

}  // namespace

std::size_t rank(IntMatrix m) {
    // Work on the shorter side so the elimination loop is over fewer rows.
    if (m.rows() > m.cols()) m = m.transposed();
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<Row> a(rows, Row(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c);
    }

    std::size_t rank = 0;
    Scalar f, g;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r) {
            if (a[r][c] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        const Row& p = a[rank];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r][c] == 0) continue;
            Row& row = a[r];
            f = p[c];
            g = row[c];
            for (std::size_t j = c; j < cols; ++j) {
                row[j] *= f;
                if (p[j] != 0) row[j] -= g * p[j];
            }
            divide_by_content(row, c + 1);
        }
        ++rank;
    }
    return rank;
}

}  // namespace bigraft
