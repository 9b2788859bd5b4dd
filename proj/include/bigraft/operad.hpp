#pragma once

#include <span>
#include <string>
#include <vector>

#include "bigraft/linear.hpp"

namespace bigraft {

// Homogeneous combination of forests of degree `arity`.
class OperadElement {
public:
    OperadElement(std::size_t arity, LinComb value);
    explicit OperadElement(const Forest& f);

    std::size_t arity() const noexcept { return arity_; }
    const LinComb& value() const noexcept { return value_; }

private:
    std::size_t arity_;
    LinComb value_;
};

// Composition on basis forests: arguments are assigned to vertices in
// vertex_order, o ∘ (H) = H, FG ∘ (...) = (F ∘ first |F|)(G ∘ rest), and
// B(F ⊗ G) ∘ (...) = ((F ∘ ...) ≻ H) ≺ (G ∘ ...) with H at the root.
Forest compose(const Forest& f, std::span<const Forest> args);
OperadElement compose(const OperadElement& f, const std::vector<OperadElement>& args);

struct AxiomReport {
    std::size_t checked = 0;
    std::vector<std::string> violations;
    bool ok() const noexcept { return violations.empty(); }
};

// Exhaustive unit and associativity check on all basis choices whose final
// degree is at most max_total_degree.
AxiomReport check_operad_axioms(std::size_t max_total_degree);

// Kills every forest outside the dual basis.
LinComb dual_project(const LinComb& x);

LinComb dual_compose(const Forest& f, std::span<const Forest> args);
OperadElement dual_compose(const OperadElement& f, const std::vector<OperadElement>& args);

}  // namespace bigraft
