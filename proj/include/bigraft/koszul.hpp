#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bigraft/forest.hpp"
#include "bigraft/linear.hpp"
#include "bigraft/ops.hpp"

namespace bigraft {

// Planar binary tree whose internal nodes carry one of the three generators;
// leaves are the inputs 1..n from left to right. Stored in prefix order.
class OpMonomial {
public:
    static OpMonomial input();
    static OpMonomial node(Op op, const OpMonomial& left, const OpMonomial& right);

    bool is_input() const noexcept { return code_.front() < 0; }
    Op op() const;
    OpMonomial left() const;
    OpMonomial right() const;

    std::size_t arity() const noexcept;
    std::size_t weight() const noexcept { return code_.size() - arity(); }
    const std::vector<std::int8_t>& code() const noexcept { return code_; }

    // "I" for an input, "m" for m(I,I), otherwise "op(left,right)".
    std::string render() const;

    friend auto operator<=>(const OpMonomial&, const OpMonomial&) = default;

private:
    explicit OpMonomial(std::vector<std::int8_t> code) : code_(std::move(code)) {}
    friend class RewriteSystem;

    std::vector<std::int8_t> code_;  // -1 for an input, otherwise the Op value
};

using OpComb = FreeModule<OpMonomial>;

std::string to_string(const OpComb& x);

// Grammar: sum of [integer] term; term := "I" | "x" | op ["(" term "," term ")"]
// with op one of ">", "m", "<". A bare op stands for op(I,I).
OpMonomial parse_monomial(std::string_view text);
OpComb parse_op_combination(std::string_view text);

enum class Slot : std::uint8_t { First, Second };

// Weight-two monomial outer ∘ (inner, I) or outer ∘ (I, inner).
struct Quadratic {
    Op outer;
    Op inner;
    Slot slot;

    OpMonomial monomial() const;
    friend auto operator<=>(const Quadratic&, const Quadratic&) = default;
};

// Path-lexicographic order: compare generator labels in prefix order with
// ≻ < m < ≺, then shapes, with the left comb greatest.
std::strong_ordering path_lex_compare(const OpMonomial& a, const OpMonomial& b);

struct Rule {
    std::string name;
    Quadratic lhs;
    std::vector<std::pair<Quadratic, Scalar>> rhs;  // empty for a zero rule
};

struct Match {
    std::size_t position;  // index of the outer node in the prefix code
    std::size_t rule;
};

class RewriteSystem {
public:
    RewriteSystem(std::string name, std::vector<Rule> rules);

    const std::string& name() const noexcept { return name_; }
    const std::vector<Rule>& rules() const noexcept { return rules_; }

    std::vector<Match> matches(const OpMonomial& m) const;
    bool is_normal(const OpMonomial& m) const { return matches(m).empty(); }
    OpComb rewrite_at(const OpMonomial& m, const Match& match) const;

    // Rewrites the leftmost match of the smallest reducible term until no
    // term is reducible. The chain lists every intermediate combination,
    // starting with x and ending with its normal form.
    std::vector<OpComb> reduction_chain(const OpComb& x) const;
    OpComb normal_form(const OpComb& x) const;

private:
    std::string name_;
    std::vector<Rule> rules_;
};

enum class Orientation {
    // Leading terms chosen by path_lex_compare, as in the printed rule table.
    Printed,
    // Same as Printed except that (xy)≺z = x(y≺z) is rewritten from right to left.
    Confluent,
};

// The six binomial relations of the bigraft operad, each written as left
// comb minus right comb.
std::vector<OpComb> bg_relations();
// The twelve relations of the dual operad: the six binomials, then the six
// monomials ≻(≻,I), ≻(≺,I), m(≺,I), ≺(I,≺), ≺(I,≻), m(I,≻).
std::vector<OpComb> bg_dual_relations();

RewriteSystem bg_dual_system(Orientation orientation = Orientation::Printed);
// The bigraft operad oriented by the complement of the dual leading terms.
RewriteSystem bg_system(Orientation orientation = Orientation::Printed);

// +1 on matching first-slot monomials, -1 on matching second-slot ones.
Scalar weight3_pairing(const OpComb& x, const OpComb& y);

struct AnnihilatorReport {
    std::vector<std::vector<Scalar>> values;  // values[i][j] = ⟨dual relation i, relation j⟩
    std::size_t relation_rank = 0;
    std::size_t dual_relation_rank = 0;
    std::size_t space_dimension = 18;
    std::size_t annihilator_dimension = 0;
    bool ok() const;
};

AnnihilatorReport annihilator_check();

struct Branch {
    std::string rule;
    std::size_t position;
    std::vector<OpComb> chain;  // monomial, one-step rewrite, ..., normal form
};

struct CriticalMonomial {
    OpMonomial monomial;
    std::vector<Branch> branches;
    bool joinable = false;
    // Left comb a(b(c,I),I) where both overlapping rules are nonzero rules.
    bool left_comb_of_binomial_rules = false;
};

std::vector<CriticalMonomial> critical_pairs(const RewriteSystem& system);

// The eleven left combs a(b(c,I),I) given as (a, b, c) in the printed list.
std::vector<OpMonomial> listed_critical_monomials();

std::vector<OpMonomial> enumerate_monomials(std::size_t arity);

// Number of arity-n monomials containing no rule left-hand side.
Scalar count_normal_forms(std::size_t arity, const RewriteSystem& system);

// Evaluates a monomial on copies of the single-vertex forest.
Forest evaluate_on_generator(const OpMonomial& m);

}  // namespace bigraft
