#include <doctest.h>

#include "bigraft/bigraft.hpp"
#include "bigraft/errors.hpp"
#include "bigraft/homology.hpp"
#include "helpers.hpp"

using namespace bigraft;

namespace {

DecoratedGenerator G(DualShape s, std::vector<std::string> decorations) {
    std::vector<Forest> v;
    for (const auto& d : decorations) v.push_back(F(d));
    return make_generator(s, std::move(v));
}

}  // namespace

TEST_CASE("differential examples") {
    CHECK(differential(G({0, 1, 0}, {"o[l:o]"})).is_zero());
    const Forest a = F("o"), b = F("o[l:o]"), c = F("o o");
    const DecoratedGenerator g{{1, 1, 1}, {a, b, c}};
    ChainElement expected;
    expected.add(DecoratedGenerator{{1, 1, 0}, {a, graft_right(b, c)}}, -1);
    expected.add(DecoratedGenerator{{0, 1, 1}, {graft_left(a, b), c}}, 1);
    CHECK(differential(g) == expected);
    CHECK(differential(DecoratedGenerator{{0, 2, 0}, {a, b}}) ==
          ChainElement(DecoratedGenerator{{0, 1, 0}, {concat(a, b)}}));
}

TEST_CASE("generator validation") {
    CHECK_THROWS_AS(G({1, 1, 0}, {"o"}), DomainError);
    CHECK_THROWS_AS(G({1, 0, 0}, {"o"}), DomainError);
    CHECK_THROWS_AS(G({0, 1, 0}, {"1"}), DomainError);
    CHECK(render(G({1, 1, 0}, {"o", "o[r:o]"})) == "(o[l:o]; o; o[r:o])");
}

TEST_CASE("d matrices") {
    const IntMatrix d11 = d_matrix(1, 1);
    CHECK(d11.rows() == 0);
    CHECK(d11.cols() == 1);
    // Weight 2: the three skeletons with o, o map to o o, o[l:o], o[r:o].
    const IntMatrix d22 = d_matrix(2, 2);
    CHECK(d22.rows() == 3);
    CHECK(d22.cols() == 3);
    CHECK(rank(d22) == 3);
    const auto rows = chain_basis(1, 2);
    const auto cols = chain_basis(2, 2);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Forest o = F("o");
        const DualShape s = cols[j].skeleton;
        const Forest image = s == DualShape{0, 2, 0} ? concat(o, o) : s == DualShape{1, 1, 0} ? graft_left(o, o) : graft_right(o, o);
        for (std::size_t i = 0; i < rows.size(); ++i) CHECK(d22(i, j) == (rows[i].decorations[0] == image ? 1 : 0));
    }
    CHECK_THROWS_AS(d_matrix(2, 6), BoundError);
}

TEST_CASE("d squared vanishes up to weight 5") {
    for (std::size_t w = 3; w <= 5; ++w) {
        for (std::size_t k = 3; k <= w; ++k) CHECK((d_matrix(k - 1, w) * d_matrix(k, w)).is_zero());
    }
}

TEST_CASE("a product breaking a relation makes d squared nonzero") {
    AlgebraProducts broken = AlgebraProducts::free_algebra();
    // Grafting on the last tree instead of the first breaks (x≻y)z = x≻(yz).
    broken.left = [](const Forest& g, const Forest& f) {
        Forest out = f;
        out.trees.back().left = concat(g, out.trees.back().left);
        return out;
    };
    bool nonzero = false;
    for (std::size_t k = 3; k <= 4; ++k) {
        nonzero = nonzero || !(d_matrix(k - 1, 4, broken) * d_matrix(k, 4, broken)).is_zero();
    }
    CHECK(nonzero);
}

TEST_CASE("chain dimensions") {
    CHECK(chain_basis(1, 1).size() == 1);
    CHECK(chain_basis(2, 3).size() == 18);
    CHECK(chain_basis(3, 3).size() == 6);
    CHECK(chain_basis(4, 4).size() == 10);
    CHECK(chain_basis(2, 4).size() == 99);
    CHECK(chain_basis(5, 4).empty());
}

TEST_CASE("homology of the free algebra") {
    const HomologyReport w1 = homology(1);
    CHECK(w1.homology == std::vector<std::size_t>{1});
    for (std::size_t w = 2; w <= 4; ++w) {
        const HomologyReport r = homology(w);
        CHECK(r.d_squared_zero);
        CHECK(r.euler_characteristic == 0);
        for (auto h : r.homology) CHECK(h == 0);
    }
    CHECK(homology(4).component_dims == std::vector<std::size_t>{55, 99, 54, 10});
    CHECK_THROWS_AS(homology(6), BoundError);
}

TEST_CASE("splitting maps") {
    const DecoratedGenerator g = G({1, 2, 1}, {"o", "o[l:o]", "o o", "o[r:o]"});
    const DecoratedGenerator unit{};
    ChainTensor spine;
    spine.add({unit, g}, 1);
    spine.add({G({1, 1, 0}, {"o", "o[l:o]"}), G({0, 1, 1}, {"o o", "o[r:o]"})}, 1);
    spine.add({g, unit}, 1);
    CHECK(split(g, Splitting::Spine) == spine);
    ChainTensor left;
    left.add({unit, g}, 1);
    left.add({G({0, 1, 0}, {"o"}), G({0, 2, 1}, {"o[l:o]", "o o", "o[r:o]"})}, 1);
    CHECK(split(g, Splitting::Left) == left);
    ChainTensor right;
    right.add({g, unit}, 1);
    right.add({G({1, 2, 0}, {"o", "o[l:o]", "o o"}), G({0, 1, 0}, {"o[r:o]"})}, 1);
    CHECK(split(g, Splitting::Right) == right);
}

TEST_CASE("d is a coderivation for the three splittings") {
    const CoderivationReport r = coderivation_check(4);
    CHECK(r.ok());
    CHECK(r.checked > 0);
}
