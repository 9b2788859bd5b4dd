#pragma once

#include <string>

#include "bigraft/expression.hpp"
#include "bigraft/forest.hpp"
#include "bigraft/linear.hpp"
#include "oracles.hpp"

inline bigraft::Forest F(const std::string& s) { return bigraft::parse_forest(s); }
inline bigraft::LinComb X(const std::string& s) { return bigraft::evaluate(s); }

inline bigraft::Tensor2 T(std::initializer_list<std::tuple<const char*, const char*, long>> terms) {
    bigraft::Tensor2 out;
    for (const auto& [a, b, c] : terms) out.add({F(a), F(b)}, c);
    return out;
}

inline oracle::Terms rendered(const bigraft::Tensor2& t) {
    oracle::Terms out;
    for (const auto& [k, c] : t) out[{bigraft::render(k.first), bigraft::render(k.second)}] += c.get_si();
    return out;
}
