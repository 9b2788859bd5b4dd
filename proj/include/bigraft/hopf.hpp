#pragma once

#include <map>
#include <utility>

#include "bigraft/linear.hpp"
#include "bigraft/matrix.hpp"

namespace bigraft {

LinComb concat(const LinComb& x, const LinComb& y);

// Admissible-cut coproduct, computed through the recursion on B and memoized
// per tree.
Tensor2 coproduct(const Forest& f);
Tensor2 coproduct(const LinComb& x);

Scalar counit(const LinComb& x);

// Δ(x) - x ⊗ 1 - 1 ⊗ x; requires counit(x) = 0.
Tensor2 reduced_coproduct(const LinComb& x);

LinComb antipode(const Forest& f);
LinComb antipode(const LinComb& x);

// B(F ⊗ G) ↦ (-1)^{|G|} F ⊗ G. Throws DomainError unless f is a single tree.
Tensor2 signed_root_split(const Forest& f);
Tensor2 signed_root_split(const Tree& t);

// For T1...Tn: Δ(T1)...Δ(T(n-1)) times the signed root split of Tn; zero on 1.
Tensor2 pairing_split(const Forest& f);
Tensor2 pairing_split(const LinComb& x);

// The pairing defined by ⟨1, x⟩ = ε(x), splitting against Δ for forests of
// length at least two and against pairing_split for trees. Each instance owns
// its memo table; share an instance only within one thread.
class Pairing {
public:
    Scalar operator()(const Forest& x, const Forest& y);
    Scalar operator()(const LinComb& x, const LinComb& y);

private:
    std::map<std::pair<Forest, Forest>, Scalar> memo_;
};

Scalar pairing(const Forest& x, const Forest& y);
Scalar pairing(const LinComb& x, const LinComb& y);

inline constexpr std::size_t default_gram_bound = 5;

// Pairing values over enumerate_forests(n), in that order.
IntMatrix gram_matrix(std::size_t n, std::size_t bound = default_gram_bound);

// Deconcatenation F ↦ Σ F1 ⊗ F2 over F1 F2 = F.
Tensor2 coproduct_ass(const LinComb& x);
// Deconcatenation without the two trivial splittings; requires counit(x) = 0.
Tensor2 reduced_coproduct_ass(const LinComb& x);

struct PrimitiveRank {
    std::size_t degree = 0;
    std::size_t kernel_dimension = 0;
    std::size_t tree_count = 0;
    bool trees_in_kernel = false;
};

// Kernel dimension of the reduced deconcatenation on degree-n forests.
PrimitiveRank primitive_rank_check(std::size_t n, std::size_t bound = default_enumeration_bound);

}  // namespace bigraft
