#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace bigraft {

// The three binary products. Enumerator order is the generator order used by
// the rewriting engine: left graft < concatenation < right graft.
enum class Op : std::uint8_t { Left = 0, Concat = 1, Right = 2 };

inline constexpr std::array<Op, 3> all_ops{Op::Left, Op::Concat, Op::Right};

// Symbol used in operad monomials: ">", "m", "<".
constexpr std::string_view op_symbol(Op op) {
    switch (op) {
        case Op::Left: return ">";
        case Op::Concat: return "m";
        case Op::Right: return "<";
    }
    return "?";
}

// Symbol used in forest expressions: "|>", "*", "<|".
constexpr std::string_view op_infix(Op op) {
    switch (op) {
        case Op::Left: return "|>";
        case Op::Concat: return "*";
        case Op::Right: return "<|";
    }
    return "?";
}

}  // namespace bigraft
