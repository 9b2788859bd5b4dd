#include <doctest.h>

#include "bigraft/bigraft.hpp"
#include "bigraft/errors.hpp"
#include "bigraft/hopf.hpp"
#include "helpers.hpp"

using namespace bigraft;

namespace {

std::vector<Forest> forests_up_to(std::size_t n) {
    std::vector<Forest> out;
    for (std::size_t d = 1; d <= n; ++d) {
        for (const auto& f : enumerate_forests(d)) out.push_back(f);
    }
    return out;
}

BarTensor B(std::initializer_list<std::tuple<const char*, const char*, long>> terms) { return BarTensor(T(terms)); }

}  // namespace

TEST_CASE("left graft examples") {
    CHECK(render(graft_left(F("o[r:o]"), F("o"))) == "o[l:o[r:o]]");
    CHECK(render(graft_left(F("o o"), F("o[r:o]"))) == "o[l:o,l:o,r:o]");
    CHECK(render(graft_left(F("o"), F("o[l:o[r:o]] o[r:o]"))) == "o[l:o,l:o[r:o]] o[r:o]");
    CHECK_THROWS_AS(graft_left(F("1"), F("o")), DomainError);
    CHECK_THROWS_AS(graft_left(X("o + 1"), X("o")), DomainError);
}

TEST_CASE("right graft examples") {
    CHECK(render(graft_right(F("o o"), F("o o"))) == "o o[r:o,r:o]");
    CHECK(render(graft_right(F("o[l:o,r:o]"), F("o"))) == "o[l:o,r:o,r:o]");
    CHECK(render(graft_right(F("o"), F("o[l:o,r:o]"))) == "o[r:o[l:o,r:o]]");
    CHECK_THROWS_AS(graft_right(F("o"), F("1")), DomainError);
}

TEST_CASE("the six relations hold on all triples of total degree at most 5") {
    const auto fs = forests_up_to(3);
    for (const auto& x : fs) {
        for (const auto& y : fs) {
            for (const auto& z : fs) {
                if (degree(x) + degree(y) + degree(z) > 5) continue;
                for (const auto& r : bg_residuals(LinComb(x), LinComb(y), LinComb(z))) CHECK(r.is_zero());
            }
        }
    }
    for (const auto& r : bg_residuals(X("o"), X("o o"), X("o"))) CHECK(r.is_zero());
}

TEST_CASE("grafts are not Δ-compatible without the extended tensor rules") {
    // Δ((o o) ≺ o) contains o o ⊗ o, which a naive (a⊗b)≺(c⊗d) = ac ⊗ (b≺d)
    // with the unit conventions cannot produce.
    const Tensor2 lhs = coproduct(graft_right(F("o o"), F("o")));
    CHECK(lhs.coeff({F("o o"), F("o")}) == 1);
}

TEST_CASE("extended tensor product rules") {
    CHECK(bar_op(B({{"o", "1", 1}}), B({{"o", "1", 1}}), Op::Left) == B({{"o[l:o]", "1", 1}}));
    CHECK(bar_op(B({{"o", "o", 1}}), B({{"1", "o", 1}}), Op::Right) == B({{"o", "o[r:o]", 1}}));
    CHECK(bar_op(B({{"1", "o", 1}}), B({{"o", "1", 1}}), Op::Left).value().is_zero());
    CHECK_THROWS_AS(BarTensor(T({{"1", "1", 1}})), DomainError);
    CHECK_THROWS_AS(unital_apply(Op::Left, F("1"), F("1")), DomainError);
    CHECK(unital_apply(Op::Left, F("1"), F("o")) == X("o"));
    CHECK(unital_apply(Op::Right, F("o"), F("1")) == X("o"));
    CHECK(unital_apply(Op::Right, F("1"), F("o")).is_zero());
    CHECK(bar_op(B({{"o", "1", 1}}), B({{"o", "o", 1}}), Op::Left, BarRule::Dipterous) ==
          B({{"o[l:o]", "o", 1}}));
}

TEST_CASE("Δ(F ≻ T ≺ G) = Δ(F) ≻ Δ(T) ≺ Δ(G) for trees T") {
    const auto fs = forests_up_to(4);
    for (const auto& t : fs) {
        if (t.length() != 1) continue;
        const BarTensor dt(coproduct(t));
        for (const auto& f : fs) {
            if (degree(f) + degree(t) > 5) continue;
            const BarTensor df(coproduct(f));
            CHECK(bar_op(df, dt, Op::Left).value() == coproduct(graft_left(f, t)));
            CHECK(bar_op(dt, df, Op::Right).value() == coproduct(graft_right(t, f)));
            for (const auto& g : fs) {
                if (degree(f) + degree(t) + degree(g) > 5) continue;
                const BarTensor lhs = bar_op(bar_op(df, dt, Op::Left), BarTensor(coproduct(g)), Op::Right);
                CHECK(lhs.value() == coproduct(graft_right(graft_left(f, t), g)));
            }
        }
    }
}

TEST_CASE("the graft identity fails for some forest middles") {
    std::size_t failures = 0;
    for (const auto& x : forests_up_to(2)) {
        for (const auto& y : forests_up_to(2)) {
            if (y.length() < 2) continue;
            const BarTensor product = bar_op(BarTensor(coproduct(x)), BarTensor(coproduct(y)), Op::Left);
            failures += product.value() != coproduct(graft_left(x, y));
        }
    }
    CHECK(failures > 0);
}

TEST_CASE("infinitesimal compatibilities on all pairs of total degree at most 5") {
    const auto fs = forests_up_to(4);
    for (const auto& x : fs) {
        for (const auto& y : fs) {
            if (degree(x) + degree(y) > 5) continue;
            for (const auto& r : infinitesimal_residuals(x, y)) CHECK(r.is_zero());
        }
    }
}

TEST_CASE("primitive products") {
    CHECK(render(Forest(primitive_graft(parse_tree("o"), parse_tree("o"), Op::Left))) == "o[l:o]");
    CHECK(render(Forest(primitive_graft(parse_tree("o"), parse_tree("o"), Op::Right))) == "o[r:o]");
    const Tree a = primitive_graft(primitive_graft(leaf(), leaf(), Op::Left), leaf(), Op::Right);
    const Tree b = primitive_graft(leaf(), primitive_graft(leaf(), leaf(), Op::Right), Op::Left);
    CHECK(a == b);
    CHECK(render(Forest(a)) == "o[l:o,r:o]");
    CHECK_THROWS_AS(primitive_graft(leaf(), leaf(), Op::Concat), DomainError);
}

TEST_CASE("trees are closed under the grafts") {
    for (std::size_t n = 2; n <= 5; ++n) {
        for (std::size_t a = 1; a < n; ++a) {
            for (const auto& t : enumerate_trees(a)) {
                for (const auto& u : enumerate_trees(n - a)) {
                    CHECK(apply(Op::Left, Forest(t), Forest(u)).length() == 1);
                    CHECK(apply(Op::Right, Forest(t), Forest(u)).length() == 1);
                }
            }
        }
    }
}

TEST_CASE("enveloping products") {
    const Tree o = leaf();
    // (o o) ≻ (o o) = (o ≻ (o ≻ o)) o, and o ≻ (o ≻ o) = o ≻ o[l:o] = o[l:o,l:o].
    CHECK(render(Forest(enveloping_product({o, o}, {o, o}, Op::Left))) == "o[l:o,l:o] o");
    CHECK(enveloping_product({o}, {o}, Op::Right) == std::vector<Tree>{primitive_graft(o, o, Op::Right)});
    const Tree a1 = parse_tree("o[l:o]");
    const Tree a2 = parse_tree("o[r:o]");
    const Tree b1 = parse_tree("o");
    CHECK(enveloping_product({a1, a2}, {b1}, Op::Right) ==
          std::vector<Tree>{a1, primitive_graft(a2, b1, Op::Right)});
    CHECK_THROWS_AS(enveloping_product({}, {o}, Op::Left), DomainError);
    // The products on words agree with the products on forests.
    for (std::size_t n = 2; n <= 4; ++n) {
        for (std::size_t a = 1; a < n; ++a) {
            for (const auto& x : enumerate_forests(a)) {
                for (const auto& y : enumerate_forests(n - a)) {
                    for (Op op : all_ops) {
                        CHECK(Forest(enveloping_product(x.trees, y.trees, op)) == apply(op, x, y));
                    }
                }
            }
        }
    }
}
