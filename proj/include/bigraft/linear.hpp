#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bigraft/forest.hpp"
#include "bigraft/scalar.hpp"

namespace bigraft {

// Finite integer combination of basis keys. Zero coefficients are never stored,
// so equality is term-wise.
template <class Key>
class FreeModule {
public:
    using Terms = std::map<Key, Scalar>;

    FreeModule() = default;
    FreeModule(const Key& k) { add(k, 1); }
    FreeModule(const Key& k, const Scalar& c) { add(k, c); }

    void add(const Key& k, const Scalar& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Scalar coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const Terms& terms() const noexcept { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    FreeModule& operator+=(const FreeModule& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    FreeModule& operator-=(const FreeModule& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    FreeModule& operator*=(const Scalar& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    friend FreeModule operator+(FreeModule a, const FreeModule& b) { return a += b; }
    friend FreeModule operator-(FreeModule a, const FreeModule& b) { return a -= b; }
    friend FreeModule operator-(FreeModule a) { return a *= Scalar(-1); }
    friend FreeModule operator*(const Scalar& s, FreeModule a) { return a *= s; }
    friend bool operator==(const FreeModule& a, const FreeModule& b) { return a.terms_ == b.terms_; }

    // Applies a linear map given on basis keys.
    template <class Out, class F>
    Out map_linear(F&& f) const {
        Out out;
        for (const auto& [k, c] : terms_) {
            Out image = f(k);
            image *= c;
            out += image;
        }
        return out;
    }

private:
    Terms terms_;
};

using LinComb = FreeModule<Forest>;
using ForestPair = std::pair<Forest, Forest>;
using Tensor2 = FreeModule<ForestPair>;

// Product in BT ⊗ BT: (a ⊗ b)(c ⊗ d) = ac ⊗ bd.
Tensor2 tensor_product(const Tensor2& x, const Tensor2& y);

Tensor2 tensor(const LinComb& x, const LinComb& y);

// Applies f ⊗ g to every term.
template <class F, class G>
Tensor2 map_tensor(const Tensor2& t, F&& f, G&& g) {
    Tensor2 out;
    for (const auto& [k, c] : t) {
        const LinComb a = f(k.first);
        const LinComb b = g(k.second);
        for (const auto& [fa, ca] : a) {
            for (const auto& [fb, cb] : b) out.add({fa, fb}, c * ca * cb);
        }
    }
    return out;
}

// Text rendering with terms sorted by rendered forest, e.g. "2 o o - o[l:o]".
std::string to_string(const LinComb& x);
std::string to_string(const Tensor2& x);

}  // namespace bigraft
