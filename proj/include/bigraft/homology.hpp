#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "bigraft/forest.hpp"
#include "bigraft/linear.hpp"
#include "bigraft/matrix.hpp"

namespace bigraft {

// A dual-basis skeleton whose vertices, taken in vertex order, carry nonempty
// forests of the free algebra. The unit skeleton {0,0,0} carries nothing.
struct DecoratedGenerator {
    DualShape skeleton;
    std::vector<Forest> decorations;

    std::size_t arity() const noexcept { return skeleton.degree(); }
    std::size_t weight() const;

    friend auto operator<=>(const DecoratedGenerator&, const DecoratedGenerator&) = default;
};

// Throws DomainError unless the decoration count matches the skeleton and no
// decoration is empty.
DecoratedGenerator make_generator(DualShape skeleton, std::vector<Forest> decorations);

std::string render(const DecoratedGenerator& g);

using ChainElement = FreeModule<DecoratedGenerator>;
using ChainTensor = FreeModule<std::pair<DecoratedGenerator, DecoratedGenerator>>;

// The three products of the algebra the complex is built on. Swapping one of
// them for a map that breaks a relation makes d² nonzero.
struct AlgebraProducts {
    using Product = std::function<Forest(const Forest&, const Forest&)>;
    Product concat;
    Product left;
    Product right;

    static AlgebraProducts free_algebra();
};

// Merges adjacent decorations i, i+1 with sign (-1)^(i-1): by ∗ inside the
// l-block, by ≻ from the last l-leaf onto the first root, by ∗ along the
// spine, by ≺ from the last root onto the first r-leaf, and by ∗ inside the
// r-block. Zero on arity one.
ChainElement differential(const DecoratedGenerator& g,
                          const AlgebraProducts& products = AlgebraProducts::free_algebra());
ChainElement differential(const ChainElement& x,
                          const AlgebraProducts& products = AlgebraProducts::free_algebra());

inline constexpr std::size_t default_weight_bound = 5;

// All generators of the given arity and weight, sorted.
std::vector<DecoratedGenerator> chain_basis(std::size_t arity, std::size_t weight,
                                            std::size_t bound = default_weight_bound);

// Matrix of d from arity k to arity k-1 at fixed weight, indexed by chain_basis.
IntMatrix d_matrix(std::size_t arity, std::size_t weight,
                   const AlgebraProducts& products = AlgebraProducts::free_algebra(),
                   std::size_t bound = default_weight_bound);

struct HomologyReport {
    std::size_t weight = 0;
    std::vector<std::size_t> component_dims;  // [k-1] = dim of arity k, k = 1..weight
    std::vector<std::size_t> ranks;           // [k-1] = rank of d out of arity k
    std::vector<std::size_t> homology;        // [n] = dim H_n, computed on arity n+1
    long long euler_characteristic = 0;       // Σ (-1)^k dim of arity k
    bool d_squared_zero = true;
};

HomologyReport homology(std::size_t weight, std::size_t bound = default_weight_bound);

enum class Splitting {
    Spine,  // cut along the roots
    Left,   // peel l-leaves off into a spine
    Right,  // peel r-leaves off into a spine
};

// Basis-level splitting coproducts; the unit skeleton stands for 1.
ChainTensor split(const DecoratedGenerator& g, Splitting kind);

struct CoderivationReport {
    std::size_t checked = 0;
    std::vector<std::string> violations;
    bool ok() const noexcept { return violations.empty(); }
};

// Checks Δ(d x) = (d ⊗ id + θ ⊗ d) Δ(x), θ = (-1)^arity, for each splitting on
// every generator of weight at most max_weight.
CoderivationReport coderivation_check(std::size_t max_weight);

}  // namespace bigraft
