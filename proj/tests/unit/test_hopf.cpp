#include <doctest.h>

#include "bigraft/errors.hpp"
#include "bigraft/hopf.hpp"
#include "helpers.hpp"

using namespace bigraft;

namespace {

// Order used by the reference degree-3 table.
const std::vector<std::string> degree3_basis = {
    "o o o",      "o o[l:o]",      "o[l:o] o",      "o o[r:o]",      "o[r:o] o",      "o[l:o,l:o]",
    "o[l:o,r:o]", "o[r:o,r:o]",    "o[l:o[l:o]]",   "o[l:o[r:o]]",   "o[r:o[l:o]]",   "o[r:o[r:o]]",
};

// Values of the recursive pairing in degree 3, computed by the oracle. They
// differ from the reference table only in the rows and columns of o[l:o,l:o]
// and o[r:o,r:o].
const std::vector<std::vector<long>> degree3_gram = {
    {6, 3, 3, 3, 3, 2, 2, 2, 1, 1, 1, 1},
    {3, 2, 2, 1, 1, 2, 1, 0, 1, 1, 0, 0},
    {3, 2, 2, 1, 1, 1, 1, 1, 1, 0, 1, 0},
    {3, 1, 1, 0, 0, 0, -1, -2, 0, 0, -1, -1},
    {3, 1, 1, 0, 0, 1, 1, 1, 0, -1, 0, -1},
    {2, 2, 1, 0, 1, 2, 0, 0, 1, 1, 0, 0},
    {2, 1, 1, -1, 1, 0, -1, 0, 0, 0, 0, 0},
    {2, 0, 1, -2, 1, 0, 0, 2, 0, 0, 1, 1},
    {1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0},
    {1, 1, 0, 0, -1, 1, 0, 0, 0, -1, 0, 0},
    {1, 0, 1, -1, 0, 0, 0, 1, 0, 0, 1, 0},
    {1, 0, 0, -1, -1, 0, 0, 1, 0, 0, 0, -1},
};

}  // namespace

TEST_CASE("concatenation") {
    CHECK(concat(X("o"), X("o[l:o]")) == X("o o[l:o]"));
    CHECK(concat(X("1"), X("o[r:o]")) == X("o[r:o]"));
    CHECK(concat(X("o[l:o] + o"), X("o")) == X("o[l:o] o + o o"));
}

TEST_CASE("coproduct examples") {
    CHECK(coproduct(F("o")) == T({{"o", "1", 1}, {"1", "o", 1}}));
    CHECK(coproduct(F("o o")) == T({{"o o", "1", 1}, {"1", "o o", 1}, {"o", "o", 2}}));
    CHECK(coproduct(F("o[l:o[l:o],r:o]")) == T({{"1", "o[l:o[l:o],r:o]", 1},
                                                 {"o[l:o[l:o],r:o]", "1", 1},
                                                 {"o", "o[l:o,r:o]", 1},
                                                 {"o[l:o]", "o[r:o]", 1},
                                                 {"o", "o[l:o[l:o]]", 1},
                                                 {"o o", "o[l:o]", 1},
                                                 {"o[l:o] o", "o", 1}}));
}

TEST_CASE("coproduct agrees with the brute-force cut oracle") {
    for (std::size_t n = 0; n <= 6; ++n) {
        for (const auto& f : enumerate_forests(n)) CHECK(rendered(coproduct(f)) == oracle::coproduct(render(f)));
    }
}

TEST_CASE("counit, reduced coproduct, antipode") {
    CHECK(counit(X("1")) == 1);
    CHECK(counit(X("o")) == 0);
    CHECK(counit(X("3 1 + 5 o o")) == 3);
    CHECK(reduced_coproduct(X("o")).is_zero());
    CHECK(reduced_coproduct(X("o o")) == T({{"o", "o", 2}}));
    CHECK(reduced_coproduct(X("o[l:o]")) == T({{"o", "o", 1}}));
    CHECK_THROWS_AS(reduced_coproduct(X("1 + o")), DomainError);
    CHECK(antipode(F("1")) == X("1"));
    CHECK(antipode(F("o")) == X("-o"));
    CHECK(antipode(F("o o")) == X("o o"));
}

TEST_CASE("Hopf axioms up to degree 4") {
    for (std::size_t n = 0; n <= 4; ++n) {
        for (const auto& f : enumerate_forests(n)) {
            const Tensor2 d = coproduct(f);
            // Counit laws.
            LinComb left, right;
            for (const auto& [k, c] : d) {
                if (k.first.empty()) left.add(k.second, c);
                if (k.second.empty()) right.add(k.first, c);
            }
            CHECK(left == LinComb(f));
            CHECK(right == LinComb(f));
            // Antipode: m(S ⊗ id)Δ = ε.
            LinComb conv;
            for (const auto& [k, c] : d) {
                LinComb term = concat(antipode(k.first), LinComb(k.second));
                term *= c;
                conv += term;
            }
            CHECK(conv == (n == 0 ? X("1") : LinComb{}));
            // Compatibility with the mirror involution.
            const Tensor2 mirrored = map_tensor(d, [](const Forest& a) { return LinComb(dagger(a)); },
                                                [](const Forest& b) { return LinComb(dagger(b)); });
            CHECK(coproduct(dagger(f)) == mirrored);
        }
    }
}

TEST_CASE("signed root split and pairing split") {
    CHECK(signed_root_split(F("o")) == T({{"1", "1", 1}}));
    CHECK(signed_root_split(F("o[r:o]")) == T({{"1", "o", -1}}));
    CHECK(signed_root_split(F("o[l:o]")) == T({{"o", "1", 1}}));
    CHECK_THROWS_AS(signed_root_split(F("o o")), DomainError);
    CHECK_THROWS_AS(signed_root_split(F("1")), DomainError);
    CHECK(pairing_split(F("o")) == T({{"1", "1", 1}}));
    CHECK(pairing_split(F("o o")) == T({{"o", "1", 1}, {"1", "o", 1}}));
    CHECK(pairing_split(F("1")).is_zero());
}

TEST_CASE("pairing examples") {
    CHECK(pairing(F("o o"), F("o o")) == 2);
    CHECK(pairing(F("o[r:o]"), F("o[r:o]")) == -1);
    CHECK(pairing(F("o[r:o,r:o]"), F("o[r:o,r:o]")) == 2);
    CHECK(pairing(F("1"), F("1")) == 1);
}

TEST_CASE("Gram matrices in degrees 1 and 2") {
    const IntMatrix g1 = gram_matrix(1);
    CHECK(g1.rows() == 1);
    CHECK(g1(0, 0) == 1);
    // enumerate_forests(2) is o o, o[l:o], o[r:o].
    const IntMatrix g2 = gram_matrix(2);
    const long expected[3][3] = {{2, 1, 1}, {1, 1, 0}, {1, 0, -1}};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) CHECK(g2(i, j) == expected[i][j]);
    }
    CHECK_THROWS_AS(gram_matrix(6), BoundError);
}

TEST_CASE("degree-3 pairing values frozen from the oracle") {
    for (std::size_t i = 0; i < degree3_basis.size(); ++i) {
        for (std::size_t j = 0; j < degree3_basis.size(); ++j) {
            CHECK(oracle::pairing(degree3_basis[i], degree3_basis[j]) == degree3_gram[i][j]);
            CHECK(pairing(F(degree3_basis[i]), F(degree3_basis[j])) == degree3_gram[i][j]);
        }
    }
    // ⟨o[l:o,l:o], o[l:o,l:o]⟩ reduces to ⟨o o, o o⟩ through the root split.
    CHECK(pairing(F("o[l:o,l:o]"), F("o[l:o,l:o]")) == pairing(F("o o"), F("o o")));
}

TEST_CASE("pairing agrees with the oracle up to degree 4") {
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto fs = enumerate_forests(n);
        for (const auto& x : fs) {
            for (const auto& y : fs) CHECK(pairing(x, y) == oracle::pairing(render(x), render(y)));
        }
    }
}

TEST_CASE("pairing symmetry, orthogonality, antipode adjointness") {
    std::vector<Forest> all;
    for (std::size_t n = 0; n <= 3; ++n) {
        for (const auto& f : enumerate_forests(n)) all.push_back(f);
    }
    for (const auto& x : all) {
        for (const auto& y : all) {
            const Scalar v = pairing(x, y);
            CHECK(v == pairing(y, x));
            if (degree(x) != degree(y)) CHECK(v == 0);
            CHECK(pairing(antipode(x), LinComb(y)) == pairing(LinComb(x), antipode(y)));
        }
    }
}

TEST_CASE("Gram ranks frozen from the oracle") {
    // Full rank up to degree 3; two-dimensional kernel in degree 4.
    const std::size_t expected[] = {1, 3, 12, 53};
    for (std::size_t n = 1; n <= 4; ++n) {
        const IntMatrix g = gram_matrix(n);
        CHECK(rank(g) == expected[n - 1]);
        std::vector<std::vector<long>> rows;
        for (std::size_t i = 0; i < g.rows(); ++i) {
            std::vector<long> row;
            for (std::size_t j = 0; j < g.cols(); ++j) row.push_back(g(i, j).get_si());
            rows.push_back(std::move(row));
        }
        CHECK(oracle::rational_rank(rows) == expected[n - 1]);
    }
}

TEST_CASE("a degree-4 element orthogonal to everything") {
    const std::vector<std::pair<const char*, long>> kernel = {
        {"o o[r:o,r:o]", 1},        {"o o[l:o,r:o]", -2},       {"o o[l:o,l:o]", 1},
        {"o[r:o,r:o] o", -1},       {"o[l:o,r:o] o", 2},        {"o[l:o,l:o] o", -1},
        {"o[r:o,r:o,r:o]", 1},      {"o[r:o[r:o,r:o]]", -1},    {"o[r:o[l:o,r:o]]", 2},
        {"o[r:o[l:o,l:o]]", -1},    {"o[l:o,r:o,r:o]", -3},     {"o[l:o,l:o,r:o]", 3},
        {"o[l:o,l:o,l:o]", -1},     {"o[l:o[r:o,r:o]]", 1},     {"o[l:o[l:o,r:o]]", -2},
        {"o[l:o[l:o,l:o]]", 1},
    };
    LinComb v;
    for (const auto& [text, c] : kernel) v.add(F(text), c);
    for (const auto& y : enumerate_forests(4)) {
        CHECK(pairing(v, LinComb(y)) == 0);
        Scalar by_oracle = 0;
        for (const auto& [text, c] : kernel) by_oracle += c * oracle::pairing(text, render(y));
        CHECK(by_oracle == 0);
    }
}

TEST_CASE("deconcatenation") {
    CHECK(reduced_coproduct_ass(X("o o")) == T({{"o", "o", 1}}));
    CHECK(reduced_coproduct_ass(X("o[l:o[r:o]]")).is_zero());
    CHECK(reduced_coproduct_ass(X("o o[l:o] o")) == T({{"o", "o[l:o] o", 1}, {"o o[l:o]", "o", 1}}));
    CHECK(coproduct_ass(X("o")) == T({{"o", "1", 1}, {"1", "o", 1}}));
}

TEST_CASE("primitives of the deconcatenation are the trees") {
    const std::size_t expected[] = {0, 1, 2, 7, 30, 143};
    for (std::size_t n = 1; n <= 5; ++n) {
        const PrimitiveRank p = primitive_rank_check(n);
        CHECK(p.kernel_dimension == expected[n]);
        CHECK(p.tree_count == expected[n]);
        CHECK(p.trees_in_kernel);
    }
}
