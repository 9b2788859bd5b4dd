#pragma once

#include <cstddef>
#include <vector>

#include "bigraft/scalar.hpp"

namespace bigraft {

// Power series truncated at x^order; coefficient i is the coefficient of x^i.
class IntSeries {
public:
    explicit IntSeries(std::size_t order) : coeffs_(order + 1) {}
    IntSeries(std::size_t order, const std::vector<Scalar>& coeffs);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    Scalar& operator[](std::size_t i) { return coeffs_.at(i); }
    const Scalar& operator[](std::size_t i) const { return coeffs_.at(i); }
    const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }

    static IntSeries x(std::size_t order);
    static IntSeries constant(std::size_t order, const Scalar& c);

    IntSeries& operator+=(const IntSeries& o);
    IntSeries& operator-=(const IntSeries& o);
    friend IntSeries operator+(IntSeries a, const IntSeries& b) { return a += b; }
    friend IntSeries operator-(IntSeries a, const IntSeries& b) { return a -= b; }
    friend IntSeries operator-(IntSeries a);
    friend IntSeries operator*(const IntSeries& a, const IntSeries& b);
    friend IntSeries operator*(const Scalar& s, IntSeries a);
    friend bool operator==(const IntSeries& a, const IntSeries& b) { return a.coeffs_ == b.coeffs_; }

    // f(g) for g without constant term.
    IntSeries compose(const IntSeries& g) const;
    // f(-x).
    IntSeries negate_argument() const;
    // 1/(1-f) for f without constant term.
    IntSeries geometric() const;

private:
    std::vector<Scalar> coeffs_;
};

inline constexpr std::size_t max_series_order = 30;
inline constexpr std::size_t max_dual_order = 1000;

// t_1..t_N from t_n = 2 Σ t_i t_j - Σ t_i t_j t_k.
std::vector<Scalar> tree_counts(std::size_t n);
// f_1..f_N, the coefficients of 1/(1 - T) - 1.
std::vector<Scalar> forest_counts(std::size_t n);
// n(n+1)/2 for n = 1..N.
std::vector<Scalar> dual_counts(std::size_t n);
// 1, then n for n >= 2.
std::vector<Scalar> dual_tree_counts(std::size_t n);

// Series Σ c_i x^(i+1) from counts c_0, c_1, ...
IntSeries series_from_counts(const std::vector<Scalar>& counts);

struct SeriesCheck {
    bool inverse = false;  // F_BG(-F_BG!(-x)) = x mod x^(N+1)
    bool cubic = false;    // T^3 - 2T^2 + T = x mod x^(N+1)
    bool ok() const noexcept { return inverse && cubic; }
};

SeriesCheck inverse_identity_check(std::size_t order);

}  // namespace bigraft
