#include "bigraft/hopf.hpp"

#include <algorithm>

#include "bigraft/errors.hpp"

namespace bigraft {

Tensor2 tensor_product(const Tensor2& x, const Tensor2& y) {
    Tensor2 out;
    for (const auto& [a, ca] : x) {
        for (const auto& [b, cb] : y) {
            out.add({concat(a.first, b.first), concat(a.second, b.second)}, ca * cb);
        }
    }
    return out;
}

Tensor2 tensor(const LinComb& x, const LinComb& y) {
    Tensor2 out;
    for (const auto& [a, ca] : x) {
        for (const auto& [b, cb] : y) out.add({a, b}, ca * cb);
    }
    return out;
}

LinComb concat(const LinComb& x, const LinComb& y) {
    LinComb out;
    for (const auto& [a, ca] : x) {
        for (const auto& [b, cb] : y) out.add(concat(a, b), ca * cb);
    }
    return out;
}

namespace {

const Tensor2& tree_coproduct(const Tree& t) {
    thread_local std::map<Tree, Tensor2> memo;
    if (auto it = memo.find(t); it != memo.end()) return it->second;
    Tensor2 out(ForestPair{Forest(t), Forest{}});
    const Tensor2 dl = coproduct(t.left);
    const Tensor2 dr = coproduct(t.right);
    for (const auto& [l, cl] : dl) {
        for (const auto& [r, cr] : dr) {
            out.add({concat(l.first, r.first), Forest(b_plus(l.second, r.second))}, cl * cr);
        }
    }
    return memo.emplace(t, std::move(out)).first->second;
}

const Tensor2 unit_tensor{ForestPair{Forest{}, Forest{}}};

}  // namespace

Tensor2 coproduct(const Forest& f) {
    Tensor2 out = unit_tensor;
    for (const auto& t : f.trees) out = tensor_product(out, tree_coproduct(t));
    return out;
}

Tensor2 coproduct(const LinComb& x) {
    return x.map_linear<Tensor2>([](const Forest& f) { return coproduct(f); });
}

Scalar counit(const LinComb& x) { return x.coeff(Forest{}); }

Tensor2 reduced_coproduct(const LinComb& x) {
    if (counit(x) != 0) throw DomainError("reduced coproduct needs an element with zero counit");
    Tensor2 out = coproduct(x);
    out -= tensor(x, LinComb(Forest{}));
    out -= tensor(LinComb(Forest{}), x);
    return out;
}

LinComb antipode(const Forest& f) {
    thread_local std::map<Forest, LinComb> memo;
    if (f.empty()) return LinComb(Forest{});
    if (auto it = memo.find(f); it != memo.end()) return it->second;
    LinComb out(f, -1);
    for (const auto& [pair, c] : reduced_coproduct(LinComb(f))) {
        LinComb term = concat(antipode(pair.first), LinComb(pair.second));
        term *= c;
        out -= term;
    }
    return memo.emplace(f, std::move(out)).first->second;
}

LinComb antipode(const LinComb& x) {
    return x.map_linear<LinComb>([](const Forest& f) { return antipode(f); });
}

Tensor2 signed_root_split(const Tree& t) {
    const Scalar sign = degree(t.right) % 2 == 0 ? 1 : -1;
    return Tensor2(ForestPair{t.left, t.right}, sign);
}

Tensor2 signed_root_split(const Forest& f) {
    if (f.length() != 1) throw DomainError("signed root split needs a single tree, got " + render(f));
    return signed_root_split(f.trees.front());
}

Tensor2 pairing_split(const Forest& f) {
    if (f.empty()) return {};
    Tensor2 out = unit_tensor;
    for (std::size_t i = 0; i + 1 < f.length(); ++i) {
        out = tensor_product(out, tree_coproduct(f.trees[i]));
    }
    return tensor_product(out, signed_root_split(f.trees.back()));
}

Tensor2 pairing_split(const LinComb& x) {
    return x.map_linear<Tensor2>([](const Forest& f) { return pairing_split(f); });
}

Scalar Pairing::operator()(const Forest& x, const Forest& y) {
    if (x.empty()) return y.empty() ? 1 : 0;
    const std::size_t dx = degree(x);
    if (dx != degree(y)) return 0;
    const auto key = std::make_pair(x, y);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Scalar total = 0;
    if (x.length() >= 2) {
        const Forest head(x.trees.front());
        const Forest tail(std::vector<Tree>(x.trees.begin() + 1, x.trees.end()));
        const std::size_t dh = degree(head);
        for (const auto& [pair, c] : coproduct(y)) {
            if (degree(pair.first) != dh) continue;
            const Scalar a = (*this)(head, pair.first);
            if (a == 0) continue;
            total += c * a * (*this)(tail, pair.second);
        }
    } else {
        const Tree& t = x.trees.front();
        for (const auto& [pair, c] : pairing_split(y)) {
            const Scalar a = (*this)(t.left, pair.first);
            if (a == 0) continue;
            total += c * a * (*this)(t.right, pair.second);
        }
    }
    memo_.emplace(key, total);
    return total;
}

Scalar Pairing::operator()(const LinComb& x, const LinComb& y) {
    Scalar total = 0;
    for (const auto& [a, ca] : x) {
        for (const auto& [b, cb] : y) total += ca * cb * (*this)(a, b);
    }
    return total;
}

namespace {

Pairing& thread_pairing() {
    thread_local Pairing p;
    return p;
}

}  // namespace

Scalar pairing(const Forest& x, const Forest& y) { return thread_pairing()(x, y); }

Scalar pairing(const LinComb& x, const LinComb& y) { return thread_pairing()(x, y); }

IntMatrix gram_matrix(std::size_t n, std::size_t bound) {
    check_bound(n, bound, "gram degree");
    const auto basis = enumerate_forests(n);
    IntMatrix g(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = pairing(basis[i], basis[j]);
    }
    return g;
}

Tensor2 coproduct_ass(const LinComb& x) {
    Tensor2 out;
    for (const auto& [f, c] : x) {
        for (std::size_t i = 0; i <= f.length(); ++i) {
            Forest a(std::vector<Tree>(f.trees.begin(), f.trees.begin() + i));
            Forest b(std::vector<Tree>(f.trees.begin() + i, f.trees.end()));
            out.add({std::move(a), std::move(b)}, c);
        }
    }
    return out;
}

Tensor2 reduced_coproduct_ass(const LinComb& x) {
    if (counit(x) != 0) throw DomainError("reduced deconcatenation needs zero counit");
    Tensor2 out = coproduct_ass(x);
    out -= tensor(x, LinComb(Forest{}));
    out -= tensor(LinComb(Forest{}), x);
    return out;
}

PrimitiveRank primitive_rank_check(std::size_t n, std::size_t bound) {
    check_bound(n, bound, "degree");
    const auto basis = enumerate_forests(n);
    std::map<ForestPair, std::size_t> rows;
    std::vector<Tensor2> images;
    images.reserve(basis.size());
    for (const auto& f : basis) {
        images.push_back(reduced_coproduct_ass(LinComb(f)));
        for (const auto& [pair, c] : images.back()) rows.try_emplace(pair, rows.size());
    }
    IntMatrix m(rows.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        for (const auto& [pair, c] : images[j]) m(rows.at(pair), j) = c;
    }
    PrimitiveRank out;
    out.degree = n;
    out.kernel_dimension = basis.size() - rank(m);
    out.trees_in_kernel = true;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (basis[j].length() == 1) {
            ++out.tree_count;
            out.trees_in_kernel = out.trees_in_kernel && images[j].is_zero();
        }
    }
    return out;
}

}  // namespace bigraft
