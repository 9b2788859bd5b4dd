#include "bigraft/series.hpp"

#include "bigraft/errors.hpp"

namespace bigraft {

IntSeries::IntSeries(std::size_t order, const std::vector<Scalar>& coeffs) : coeffs_(order + 1) {
    for (std::size_t i = 0; i < coeffs.size() && i <= order; ++i) coeffs_[i] = coeffs[i];
}

IntSeries IntSeries::x(std::size_t order) {
    IntSeries s(order);
    if (order >= 1) s[1] = 1;
    return s;
}

IntSeries IntSeries::constant(std::size_t order, const Scalar& c) {
    IntSeries s(order);
    s[0] = c;
    return s;
}

IntSeries& IntSeries::operator+=(const IntSeries& o) {
    for (std::size_t i = 0; i < coeffs_.size() && i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

IntSeries& IntSeries::operator-=(const IntSeries& o) {
    for (std::size_t i = 0; i < coeffs_.size() && i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

IntSeries operator-(IntSeries a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

IntSeries operator*(const IntSeries& a, const IntSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    IntSeries out(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j <= order; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
}

IntSeries operator*(const Scalar& s, IntSeries a) {
    for (auto& c : a.coeffs_) c *= s;
    return a;
}

IntSeries IntSeries::compose(const IntSeries& g) const {
    if (g[0] != 0) throw DomainError("composition needs a series without constant term");
    const std::size_t n = std::min(order(), g.order());
    // Horner: f0 + g(f1 + g(f2 + ...)).
    IntSeries out = constant(n, coeffs_[n]);
    for (std::size_t i = n; i-- > 0;) out = constant(n, coeffs_[i]) + g * out;
    return out;
}

IntSeries IntSeries::negate_argument() const {
    IntSeries out = *this;
    for (std::size_t i = 1; i < out.coeffs_.size(); i += 2) out.coeffs_[i] = -out.coeffs_[i];
    return out;
}

IntSeries IntSeries::geometric() const {
    if (coeffs_[0] != 0) throw DomainError("1/(1-f) needs a series without constant term");
    IntSeries out = constant(order(), 1);
    IntSeries power = constant(order(), 1);
    for (std::size_t i = 1; i <= order(); ++i) {
        power = power * *this;
        out += power;
    }
    return out;
}

std::vector<Scalar> tree_counts(std::size_t n) {
    check_bound(n, max_series_order, "series order");
    std::vector<Scalar> t(n + 1);
    if (n >= 1) t[1] = 1;
    for (std::size_t m = 2; m <= n; ++m) {
        Scalar pairs = 0;
        for (std::size_t i = 1; i < m; ++i) pairs += t[i] * t[m - i];
        Scalar triples = 0;
        for (std::size_t i = 1; i < m; ++i) {
            for (std::size_t j = 1; i + j < m; ++j) triples += t[i] * t[j] * t[m - i - j];
        }
        t[m] = 2 * pairs - triples;
    }
    return {t.begin() + 1, t.end()};
}

IntSeries series_from_counts(const std::vector<Scalar>& counts) {
    IntSeries s(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) s[i + 1] = counts[i];
    return s;
}

std::vector<Scalar> forest_counts(std::size_t n) {
    const IntSeries f = series_from_counts(tree_counts(n)).geometric();
    return {f.coefficients().begin() + 1, f.coefficients().end()};
}

std::vector<Scalar> dual_counts(std::size_t n) {
    check_bound(n, max_dual_order, "dual series order");
    std::vector<Scalar> out;
    for (std::size_t m = 1; m <= n; ++m) out.emplace_back(static_cast<unsigned long>(m * (m + 1) / 2));
    return out;
}

std::vector<Scalar> dual_tree_counts(std::size_t n) {
    check_bound(n, max_dual_order, "dual series order");
    std::vector<Scalar> out;
    for (std::size_t m = 1; m <= n; ++m) out.emplace_back(static_cast<unsigned long>(m == 1 ? 1 : m));
    return out;
}

SeriesCheck inverse_identity_check(std::size_t order) {
    check_bound(order, max_series_order, "series order");
    const IntSeries x = IntSeries::x(order);
    const IntSeries f_bg = series_from_counts(forest_counts(order));
    const IntSeries f_dual = series_from_counts(dual_counts(order));
    const IntSeries t = series_from_counts(tree_counts(order));
    SeriesCheck result;
    result.inverse = f_bg.compose(-f_dual.negate_argument()) == x;
    result.cubic = t * t * t - Scalar(2) * (t * t) + t == x;
    return result;
}

}  // namespace bigraft
