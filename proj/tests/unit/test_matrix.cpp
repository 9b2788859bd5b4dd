#include <doctest.h>

#include <random>

#include "bigraft/matrix.hpp"
#include "oracles.hpp"

using namespace bigraft;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

}  // namespace

TEST_CASE("rank examples") {
    CHECK(rank(IntMatrix(3, 4)) == 0);
    CHECK(rank(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
    CHECK(rank(from_rows({{2, 4}, {1, 2}})) == 1);
    CHECK(rank(IntMatrix(0, 5)) == 0);
    CHECK(rank(IntMatrix(5, 0)) == 0);
}

TEST_CASE("rank agrees with rational elimination on random matrices") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> size(1, 9);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 300; ++trial) {
        const int r = size(rng);
        const int c = size(rng);
        std::vector<std::vector<long>> rows(r, std::vector<long>(c));
        for (auto& row : rows) {
            for (auto& x : row) x = entry(rng);
        }
        // Duplicate a combination of rows now and then to force deficiency.
        if (r >= 3 && trial % 2 == 0) {
            for (int j = 0; j < c; ++j) rows[2][j] = 2 * rows[0][j] - 3 * rows[1][j];
        }
        CHECK(rank(from_rows(rows)) == oracle::rational_rank(rows));
    }
}

TEST_CASE("product and transpose") {
    const IntMatrix a = from_rows({{1, 2}, {3, 4}});
    const IntMatrix b = from_rows({{0, 1}, {1, 0}});
    CHECK(a * b == from_rows({{2, 1}, {4, 3}}));
    CHECK(a.transposed() == from_rows({{1, 3}, {2, 4}}));
    CHECK((a * IntMatrix(2, 0)).cols() == 0);
    CHECK(IntMatrix(2, 2).is_zero());
}
