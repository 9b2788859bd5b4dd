#include "bigraft/bigraft.hpp"

#include "bigraft/errors.hpp"
#include "bigraft/hopf.hpp"

namespace bigraft {

namespace {

void require_nonempty(const Forest& f, const char* op) {
    if (f.empty()) throw DomainError(std::string(op) + " is defined on nonempty forests only");
}

void require_augmented(const LinComb& x, const char* op) {
    if (counit(x) != 0) {
        throw DomainError(std::string(op) + " is defined on the augmentation ideal only");
    }
}

template <class F>
LinComb bilinear(const LinComb& x, const LinComb& y, F&& f) {
    LinComb out;
    for (const auto& [a, ca] : x) {
        for (const auto& [b, cb] : y) out.add(f(a, b), ca * cb);
    }
    return out;
}

}  // namespace

Forest graft_left(const Forest& g, const Forest& f) {
    require_nonempty(g, "|>");
    require_nonempty(f, "|>");
    Forest out = f;
    Tree& first = out.trees.front();
    first.left = concat(g, first.left);
    return out;
}

Forest graft_right(const Forest& g, const Forest& f) {
    require_nonempty(g, "<|");
    require_nonempty(f, "<|");
    Forest out = g;
    Tree& last = out.trees.back();
    last.right = concat(last.right, f);
    return out;
}

LinComb graft_left(const LinComb& g, const LinComb& f) {
    require_augmented(g, "|>");
    require_augmented(f, "|>");
    return bilinear(g, f, [](const Forest& a, const Forest& b) { return graft_left(a, b); });
}

LinComb graft_right(const LinComb& g, const LinComb& f) {
    require_augmented(g, "<|");
    require_augmented(f, "<|");
    return bilinear(g, f, [](const Forest& a, const Forest& b) { return graft_right(a, b); });
}

Forest apply(Op op, const Forest& a, const Forest& b) {
    switch (op) {
        case Op::Left: return graft_left(a, b);
        case Op::Right: return graft_right(a, b);
        case Op::Concat: break;
    }
    return concat(a, b);
}

LinComb apply(Op op, const LinComb& a, const LinComb& b) {
    switch (op) {
        case Op::Left: return graft_left(a, b);
        case Op::Right: return graft_right(a, b);
        case Op::Concat: break;
    }
    return concat(a, b);
}

std::array<LinComb, 6> bg_residuals(const LinComb& x, const LinComb& y, const LinComb& z) {
    const auto m = [](const LinComb& a, const LinComb& b) { return concat(a, b); };
    const auto gl = [](const LinComb& a, const LinComb& b) { return graft_left(a, b); };
    const auto gr = [](const LinComb& a, const LinComb& b) { return graft_right(a, b); };
    return {
        m(m(x, y), z) - m(x, m(y, z)),
        gl(m(x, y), z) - gl(x, gl(y, z)),
        m(gl(x, y), z) - gl(x, m(y, z)),
        gr(gr(x, y), z) - gr(x, m(y, z)),
        gr(m(x, y), z) - m(x, gr(y, z)),
        gr(gl(x, y), z) - gl(x, gr(y, z)),
    };
}

BarTensor::BarTensor(Tensor2 t) : value_(std::move(t)) {
    for (const auto& [pair, c] : value_) {
        if (pair.first.empty() && pair.second.empty()) {
            throw DomainError("1 ⊗ 1 is not an element of the extended tensor product");
        }
    }
}

LinComb unital_apply(Op op, const Forest& a, const Forest& b) {
    if (op == Op::Concat) return LinComb(concat(a, b));
    if (a.empty() && b.empty()) {
        throw DomainError(std::string("1 ") + std::string(op_infix(op)) + " 1 is undefined");
    }
    if (op == Op::Left) {
        if (b.empty()) return {};
        if (a.empty()) return LinComb(b);
        return LinComb(graft_left(a, b));
    }
    if (a.empty()) return {};
    if (b.empty()) return LinComb(a);
    return LinComb(graft_right(a, b));
}

namespace {

void add_product(Tensor2& out, const LinComb& first, const LinComb& second, const Scalar& c) {
    for (const auto& [f, cf] : first) {
        for (const auto& [s, cs] : second) out.add({f, s}, c * cf * cs);
    }
}

}  // namespace

BarTensor bar_op(const BarTensor& x, const BarTensor& y, Op op, BarRule rule) {
    Tensor2 out;
    for (const auto& [p, cp] : x.value()) {
        for (const auto& [q, cq] : y.value()) {
            const Scalar c = cp * cq;
            const Forest& a = p.first;
            const Forest& b = p.second;
            const Forest& a2 = q.first;
            const Forest& b2 = q.second;
            if (op == Op::Concat) {
                out.add({concat(a, a2), concat(b, b2)}, c);
                continue;
            }
            const bool on_first = (op == Op::Left && rule == BarRule::Dipterous)
                                      ? !(a.empty() && a2.empty())
                                      : (b.empty() && b2.empty());
            if (on_first) {
                add_product(out, unital_apply(op, a, a2), LinComb(concat(b, b2)), c);
            } else {
                add_product(out, LinComb(concat(a, a2)), unital_apply(op, b, b2), c);
            }
        }
    }
    return BarTensor(std::move(out));
}

std::array<Tensor2, 3> infinitesimal_residuals(const Forest& x, const Forest& y) {
    const Tensor2 dx = reduced_coproduct_ass(LinComb(x));
    const Tensor2 dy = reduced_coproduct_ass(LinComb(y));
    const BarTensor x1(Tensor2(ForestPair{x, Forest{}}));
    const BarTensor y1(Tensor2(ForestPair{Forest{}, y}));

    const Tensor2 product = tensor_product(Tensor2(ForestPair{x, Forest{}}), dy) +
                            tensor_product(dx, Tensor2(ForestPair{Forest{}, y})) +
                            Tensor2(ForestPair{x, y});
    return {
        reduced_coproduct_ass(LinComb(concat(x, y))) - product,
        reduced_coproduct_ass(LinComb(graft_left(x, y))) -
            bar_op(x1, BarTensor(dy), Op::Left, BarRule::Dipterous).value(),
        reduced_coproduct_ass(LinComb(graft_right(x, y))) -
            bar_op(BarTensor(dx), y1, Op::Right, BarRule::Dipterous).value(),
    };
}

Tree primitive_graft(const Tree& t, const Tree& u, Op op) {
    if (op == Op::Concat) throw DomainError("concatenation of two trees is not a tree");
    const Forest r = apply(op, Forest(t), Forest(u));
    return r.trees.front();
}

std::vector<Tree> enveloping_product(const std::vector<Tree>& a, const std::vector<Tree>& b, Op op) {
    if (a.empty() || b.empty()) throw DomainError("enveloping products need nonempty words");
    if (op == Op::Concat) {
        std::vector<Tree> out = a;
        out.insert(out.end(), b.begin(), b.end());
        return out;
    }
    if (op == Op::Left) {
        Tree acc = b.front();
        for (auto it = a.rbegin(); it != a.rend(); ++it) acc = primitive_graft(*it, acc, Op::Left);
        std::vector<Tree> out{acc};
        out.insert(out.end(), b.begin() + 1, b.end());
        return out;
    }
    Tree acc = a.back();
    for (const auto& t : b) acc = primitive_graft(acc, t, Op::Right);
    std::vector<Tree> out(a.begin(), a.end() - 1);
    out.push_back(acc);
    return out;
}

}  // namespace bigraft
