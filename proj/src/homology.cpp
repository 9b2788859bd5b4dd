#include "bigraft/homology.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "bigraft/bigraft.hpp"
#include "bigraft/errors.hpp"

namespace bigraft {

std::size_t DecoratedGenerator::weight() const {
    std::size_t w = 0;
    for (const auto& f : decorations) w += degree(f);
    return w;
}

DecoratedGenerator make_generator(DualShape skeleton, std::vector<Forest> decorations) {
    if (decorations.size() != skeleton.degree()) {
        throw DomainError("skeleton of degree " + std::to_string(skeleton.degree()) + " given " +
                          std::to_string(decorations.size()) + " decorations");
    }
    if (skeleton.spine == 0 && skeleton.degree() != 0) {
        throw DomainError("a nonempty skeleton needs at least one root");
    }
    for (const auto& f : decorations) {
        if (f.empty()) throw DomainError("decorations must be nonempty forests");
    }
    return DecoratedGenerator{skeleton, std::move(decorations)};
}

std::string render(const DecoratedGenerator& g) {
    std::ostringstream out;
    out << "(" << render(g.skeleton.to_forest());
    for (const auto& f : g.decorations) out << "; " << render(f);
    out << ")";
    return out.str();
}

AlgebraProducts AlgebraProducts::free_algebra() {
    return {
        [](const Forest& a, const Forest& b) { return bigraft::concat(a, b); },
        [](const Forest& a, const Forest& b) { return graft_left(a, b); },
        [](const Forest& a, const Forest& b) { return graft_right(a, b); },
    };
}

ChainElement differential(const DecoratedGenerator& g, const AlgebraProducts& products) {
    const auto [p, k, q] = g.skeleton;
    const std::size_t n = g.arity();
    ChainElement out;
    for (std::size_t i = 1; i < n; ++i) {
        const AlgebraProducts::Product* op = &products.concat;
        DualShape s = g.skeleton;
        if (i <= p) {
            if (i == p) op = &products.left;
            --s.left;
        } else if (i < p + k) {
            --s.spine;
        } else {
            if (i == p + k) op = &products.right;
            --s.right;
        }
        std::vector<Forest> v;
        v.reserve(n - 1);
        v.insert(v.end(), g.decorations.begin(), g.decorations.begin() + (i - 1));
        v.push_back((*op)(g.decorations[i - 1], g.decorations[i]));
        v.insert(v.end(), g.decorations.begin() + (i + 1), g.decorations.end());
        out.add(DecoratedGenerator{s, std::move(v)}, i % 2 == 1 ? 1 : -1);
    }
    return out;
}

ChainElement differential(const ChainElement& x, const AlgebraProducts& products) {
    return x.map_linear<ChainElement>([&](const DecoratedGenerator& g) { return differential(g, products); });
}

namespace {

void for_each_composition(std::size_t total, std::size_t parts,
                          const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> current;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t remaining) {
        if (left == 0) {
            if (remaining == 0) visit(current);
            return;
        }
        for (std::size_t a = 1; a + (left - 1) <= remaining; ++a) {
            current.push_back(a);
            rec(left - 1, remaining - a);
            current.pop_back();
        }
    };
    rec(parts, total);
}

std::vector<DualShape> skeletons(std::size_t arity) {
    std::vector<DualShape> out;
    for (std::size_t p = 0; p < arity; ++p) {
        for (std::size_t k = 1; p + k <= arity; ++k) out.push_back({p, k, arity - p - k});
    }
    return out;
}

}  // namespace

std::vector<DecoratedGenerator> chain_basis(std::size_t arity, std::size_t weight, std::size_t bound) {
    check_bound(weight, bound, "weight");
    std::vector<DecoratedGenerator> out;
    if (arity == 0 || arity > weight) return out;
    std::vector<std::vector<Forest>> by_degree(weight + 1);
    for (std::size_t d = 1; d <= weight; ++d) by_degree[d] = enumerate_forests(d);
    for (const auto& s : skeletons(arity)) {
        for_each_composition(weight, arity, [&](const std::vector<std::size_t>& degrees) {
            std::vector<Forest> v(arity);
            std::function<void(std::size_t)> rec = [&](std::size_t i) {
                if (i == arity) {
                    out.push_back(DecoratedGenerator{s, v});
                    return;
                }
                for (const auto& f : by_degree[degrees[i]]) {
                    v[i] = f;
                    rec(i + 1);
                }
            };
            rec(0);
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

IntMatrix d_matrix(std::size_t arity, std::size_t weight, const AlgebraProducts& products,
                   std::size_t bound) {
    const auto cols = chain_basis(arity, weight, bound);
    const auto rows = arity > 1 ? chain_basis(arity - 1, weight, bound) : std::vector<DecoratedGenerator>{};
    std::map<DecoratedGenerator, std::size_t> index;
    for (std::size_t i = 0; i < rows.size(); ++i) index.emplace(rows[i], i);
    IntMatrix m(rows.size(), cols.size());
    if (arity <= 1) return m;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        for (const auto& [g, c] : differential(cols[j], products)) m(index.at(g), j) = c;
    }
    return m;
}

HomologyReport homology(std::size_t weight, std::size_t bound) {
    check_bound(weight, bound, "weight");
    HomologyReport report;
    report.weight = weight;
    std::vector<IntMatrix> d(weight + 2);
    for (std::size_t k = 1; k <= weight; ++k) {
        d[k] = d_matrix(k, weight, AlgebraProducts::free_algebra(), bound);
        report.component_dims.push_back(d[k].cols());
        report.ranks.push_back(rank(d[k]));
        report.euler_characteristic += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(d[k].cols());
    }
    for (std::size_t k = 3; k <= weight; ++k) {
        if (!(d[k - 1] * d[k]).is_zero()) report.d_squared_zero = false;
    }
    for (std::size_t n = 0; n < weight; ++n) {
        const std::size_t outgoing = report.ranks[n];
        const std::size_t incoming = n + 1 < weight ? report.ranks[n + 1] : 0;
        report.homology.push_back(report.component_dims[n] - outgoing - incoming);
    }
    return report;
}

namespace {

const DecoratedGenerator& unit_generator() {
    static const DecoratedGenerator unit{};
    return unit;
}

DecoratedGenerator slice(const DecoratedGenerator& g, DualShape s, std::size_t from) {
    if (s.degree() == 0) return unit_generator();
    return DecoratedGenerator{s, std::vector<Forest>(g.decorations.begin() + from,
                                                     g.decorations.begin() + from + s.degree())};
}

}  // namespace

ChainTensor split(const DecoratedGenerator& g, Splitting kind) {
    ChainTensor out;
    const auto [p, k, q] = g.skeleton;
    if (g.arity() == 0) {
        out.add({g, g}, 1);
        return out;
    }
    switch (kind) {
        case Splitting::Spine:
            out.add({unit_generator(), g}, 1);
            for (std::size_t i = 1; i < k; ++i) {
                const DualShape a{p, i, 0};
                out.add({slice(g, a, 0), slice(g, DualShape{0, k - i, q}, a.degree())}, 1);
            }
            out.add({g, unit_generator()}, 1);
            break;
        case Splitting::Left:
            for (std::size_t i = 0; i <= p; ++i) {
                const DualShape a{0, i, 0};
                out.add({slice(g, a, 0), slice(g, DualShape{p - i, k, q}, i)}, 1);
            }
            break;
        case Splitting::Right:
            for (std::size_t i = 0; i <= q; ++i) {
                const DualShape b{p, k, q - i};
                out.add({slice(g, b, 0), slice(g, DualShape{0, i, 0}, b.degree())}, 1);
            }
            break;
    }
    return out;
}

namespace {

ChainTensor split(const ChainElement& x, Splitting kind) {
    ChainTensor out;
    for (const auto& [g, c] : x) {
        ChainTensor t = split(g, kind);
        t *= c;
        out += t;
    }
    return out;
}

ChainElement differential_or_zero(const DecoratedGenerator& g) {
    return g.arity() == 0 ? ChainElement{} : differential(g);
}

}  // namespace

CoderivationReport coderivation_check(std::size_t max_weight) {
    CoderivationReport report;
    const char* names[] = {"spine", "left", "right"};
    for (std::size_t w = 1; w <= max_weight; ++w) {
        for (std::size_t k = 1; k <= w; ++k) {
            for (const auto& g : chain_basis(k, w, std::max(max_weight, default_weight_bound))) {
                for (Splitting kind : {Splitting::Spine, Splitting::Left, Splitting::Right}) {
                    ++report.checked;
                    const ChainTensor lhs = split(differential(g), kind);
                    ChainTensor rhs;
                    for (const auto& [pair, c] : split(g, kind)) {
                        const auto& [a, b] = pair;
                        for (const auto& [da, cd] : differential_or_zero(a)) rhs.add({da, b}, c * cd);
                        const Scalar theta = a.arity() % 2 == 0 ? 1 : -1;
                        for (const auto& [db, cd] : differential_or_zero(b)) rhs.add({a, db}, theta * c * cd);
                    }
                    if (lhs != rhs) {
                        report.violations.push_back(std::string(names[static_cast<int>(kind)]) +
                                                    " splitting fails on " + render(g));
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace bigraft
