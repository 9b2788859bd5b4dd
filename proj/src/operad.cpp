#include "bigraft/operad.hpp"

#include <functional>

#include "bigraft/bigraft.hpp"
#include "bigraft/errors.hpp"

namespace bigraft {

OperadElement::OperadElement(std::size_t arity, LinComb value) : arity_(arity), value_(std::move(value)) {
    for (const auto& [f, c] : value_) {
        if (degree(f) != arity_) {
            throw DomainError("operad element of arity " + std::to_string(arity_) +
                              " contains " + render(f));
        }
    }
}

OperadElement::OperadElement(const Forest& f) : OperadElement(degree(f), LinComb(f)) {}

namespace {

Forest compose_forest(const Forest& f, std::span<const Forest> args);

Forest compose_tree(const Tree& t, std::span<const Forest> args) {
    const std::size_t nl = degree(t.left);
    const Forest left = compose_forest(t.left, args.subspan(0, nl));
    const Forest right = compose_forest(t.right, args.subspan(nl + 1));
    Forest out = args[nl];
    if (!left.empty()) out = graft_left(left, out);
    if (!right.empty()) out = graft_right(out, right);
    return out;
}

Forest compose_forest(const Forest& f, std::span<const Forest> args) {
    Forest out;
    std::size_t offset = 0;
    for (const auto& t : f.trees) {
        const std::size_t d = degree(t);
        const Forest part = compose_tree(t, args.subspan(offset, d));
        out.trees.insert(out.trees.end(), part.trees.begin(), part.trees.end());
        offset += d;
    }
    return out;
}

void check_arguments(const Forest& f, std::span<const Forest> args) {
    if (args.size() != degree(f)) {
        throw DomainError("composition of arity " + std::to_string(degree(f)) + " given " +
                          std::to_string(args.size()) + " arguments");
    }
    for (const auto& a : args) {
        if (a.empty()) throw DomainError("composition arguments must be nonempty forests");
    }
}

// Visits every tuple of `count` nonempty forests whose degrees sum to `total`.
void for_each_tuple(std::size_t count, std::size_t total,
                    const std::function<void(const std::vector<Forest>&)>& visit) {
    std::vector<Forest> current;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t remaining) {
        if (left == 0) {
            if (remaining == 0) visit(current);
            return;
        }
        for (std::size_t d = 1; d + (left - 1) <= remaining; ++d) {
            for_each_forest(d, [&](const Forest& f) {
                current.push_back(f);
                rec(left - 1, remaining - d);
                current.pop_back();
            });
        }
    };
    rec(count, total);
}

template <class Compose>
OperadElement expand(const OperadElement& f, const std::vector<OperadElement>& args, Compose&& basis) {
    if (args.size() != f.arity()) {
        throw DomainError("composition of arity " + std::to_string(f.arity()) + " given " +
                          std::to_string(args.size()) + " arguments");
    }
    std::size_t arity = 0;
    for (const auto& a : args) arity += a.arity();
    LinComb out;
    std::vector<Forest> chosen(args.size());
    std::function<void(std::size_t, const Scalar&)> rec = [&](std::size_t i, const Scalar& c) {
        if (i == args.size()) {
            for (const auto& [g, cg] : f.value()) {
                LinComb image = basis(g, std::span<const Forest>(chosen));
                image *= c * cg;
                out += image;
            }
            return;
        }
        for (const auto& [a, ca] : args[i].value()) {
            chosen[i] = a;
            rec(i + 1, c * ca);
        }
    };
    rec(0, Scalar(1));
    return OperadElement(arity, std::move(out));
}

}  // namespace

Forest compose(const Forest& f, std::span<const Forest> args) {
    check_arguments(f, args);
    return compose_forest(f, args);
}

OperadElement compose(const OperadElement& f, const std::vector<OperadElement>& args) {
    return expand(f, args, [](const Forest& g, std::span<const Forest> a) { return LinComb(compose(g, a)); });
}

AxiomReport check_operad_axioms(std::size_t max_total_degree) {
    AxiomReport report;
    const Forest unit_op(leaf());
    auto fail = [&](const std::string& what) { report.violations.push_back(what); };

    for (std::size_t n = 1; n <= max_total_degree; ++n) {
        for_each_forest(n, [&](const Forest& f) {
            ++report.checked;
            const std::vector<Forest> single{f};
            if (compose(unit_op, single) != f) fail("o ∘ (" + render(f) + ") != " + render(f));
            const std::vector<Forest> units(n, unit_op);
            if (compose(f, units) != f) fail(render(f) + " ∘ (o,...,o) != " + render(f));
        });
    }

    for (std::size_t n = 1; n <= max_total_degree; ++n) {
        for_each_forest(n, [&](const Forest& f) {
            for (std::size_t m = n; m <= max_total_degree; ++m) {
                for_each_tuple(n, m, [&](const std::vector<Forest>& gs) {
                    const Forest fg = compose(f, gs);
                    for (std::size_t total = m; total <= max_total_degree; ++total) {
                        for_each_tuple(m, total, [&](const std::vector<Forest>& hs) {
                            ++report.checked;
                            std::vector<Forest> inner;
                            std::size_t offset = 0;
                            for (const auto& g : gs) {
                                const std::size_t d = degree(g);
                                inner.push_back(compose(g, std::span<const Forest>(hs).subspan(offset, d)));
                                offset += d;
                            }
                            if (compose(fg, hs) != compose(f, inner)) {
                                fail("associativity fails for " + render(f));
                            }
                        });
                    }
                });
            }
        });
    }
    return report;
}

LinComb dual_project(const LinComb& x) {
    LinComb out;
    for (const auto& [f, c] : x) {
        if (is_dual_basis(f)) out.add(f, c);
    }
    return out;
}

LinComb dual_compose(const Forest& f, std::span<const Forest> args) {
    if (!is_dual_basis(f)) throw DomainError("not a dual-basis forest: " + render(f));
    for (const auto& a : args) {
        if (!is_dual_basis(a)) throw DomainError("not a dual-basis forest: " + render(a));
    }
    return dual_project(LinComb(compose(f, args)));
}

OperadElement dual_compose(const OperadElement& f, const std::vector<OperadElement>& args) {
    return expand(f, args, [](const Forest& g, std::span<const Forest> a) { return dual_compose(g, a); });
}

}  // namespace bigraft
