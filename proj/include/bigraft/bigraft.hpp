#pragma once

#include <array>
#include <vector>

#include "bigraft/linear.hpp"
#include "bigraft/ops.hpp"

namespace bigraft {

// G ≻ F: G is grafted on the root of the first tree of F by l-edges, to the
// left of its existing l-children. Both arguments must be nonempty.
Forest graft_left(const Forest& g, const Forest& f);
// G ≺ F: F is grafted on the root of the last tree of G by r-edges, to the
// right of its existing r-children. Both arguments must be nonempty.
Forest graft_right(const Forest& g, const Forest& f);

LinComb graft_left(const LinComb& g, const LinComb& f);
LinComb graft_right(const LinComb& g, const LinComb& f);

// Applies one of the three products on nonempty forests.
Forest apply(Op op, const Forest& a, const Forest& b);
LinComb apply(Op op, const LinComb& a, const LinComb& b);

// Left-minus-right of the six defining relations, in this order:
// (xy)z = x(yz), (xy)≻z = x≻(y≻z), (x≻y)z = x≻(yz), (x≺y)≺z = x≺(yz),
// (xy)≺z = x(y≺z), (x≻y)≺z = x≻(y≺z).
std::array<LinComb, 6> bg_residuals(const LinComb& x, const LinComb& y, const LinComb& z);

// Which extension of the products to A ⊗̄ A is used.
enum class BarRule {
    // Grafts act on the second factor unless both second factors are 1:
    // (a⊗b) ≻ (a'⊗b') = aa' ⊗ (b ≻ b'), (a⊗1) ≻ (a'⊗1) = (a ≻ a') ⊗ 1.
    Entangled,
    // ≻ acts on the first factor: (a⊗b) ≻ (a'⊗b') = (a ≻ a') ⊗ bb' when a or
    // a' is not 1, and (1⊗b) ≻ (1⊗b') = 1 ⊗ (b ≻ b'). ≺ is as in Entangled.
    Dipterous,
};

// Element of A ⊗̄ A = (A⊗K) ⊕ (A⊗A) ⊕ (K⊗A): a Tensor2 whose keys may use
// the empty forest for K, except on both sides at once.
class BarTensor {
public:
    BarTensor() = default;
    explicit BarTensor(Tensor2 t);

    const Tensor2& value() const noexcept { return value_; }
    friend bool operator==(const BarTensor& a, const BarTensor& b) { return a.value_ == b.value_; }

private:
    Tensor2 value_;
};

// Unit conventions used inside A ⊗̄ A: a ≻ 1 = 0, 1 ≻ a = a, a ≺ 1 = a,
// 1 ≺ a = 0, and 1 is the unit of concatenation.
LinComb unital_apply(Op op, const Forest& a, const Forest& b);

BarTensor bar_op(const BarTensor& x, const BarTensor& y, Op op, BarRule rule = BarRule::Entangled);

// Residuals of the compatibilities between the reduced deconcatenation and
// the three products, with ≻ and ≺ extended to A ⊗̄ A by BarRule::Dipterous:
// Δ(xy) = (x⊗1)Δ(y) + Δ(x)(1⊗y) + x⊗y, Δ(x≻y) = (x⊗1) ≻ Δ(y),
// Δ(x≺y) = Δ(x) ≺ (1⊗y). Both forests must be nonempty.
std::array<Tensor2, 3> infinitesimal_residuals(const Forest& x, const Forest& y);

// ≻ or ≺ on two trees; the result is again a tree.
Tree primitive_graft(const Tree& t, const Tree& u, Op op);

// Products on words of trees (elements of the tensor algebra over the
// primitives): (a1...ap) ≻ (b1...bq) = (a1 ≻ (... (ap ≻ b1))) b2...bq and
// (a1...ap) ≺ (b1...bq) = a1...a(p-1) ((...(ap ≺ b1) ≺ ...) ≺ bq).
std::vector<Tree> enveloping_product(const std::vector<Tree>& a, const std::vector<Tree>& b, Op op);

}  // namespace bigraft
