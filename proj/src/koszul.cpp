#include "bigraft/koszul.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

#include "bigraft/bigraft.hpp"
#include "bigraft/errors.hpp"
#include "bigraft/matrix.hpp"

namespace bigraft {

namespace {

using Code = std::vector<std::int8_t>;

std::size_t subtree_end(const Code& code, std::size_t i) {
    std::size_t pending = 1;
    while (pending > 0) {
        pending += code[i] < 0 ? -1 : 1;
        ++i;
    }
    return i;
}

void render_into(const Code& code, std::size_t& i, std::string& out) {
    const std::int8_t c = code[i++];
    if (c < 0) {
        out += 'I';
        return;
    }
    out += op_symbol(static_cast<Op>(c));
    if (code[i] < 0 && code[i + 1] < 0) {
        i += 2;
        return;
    }
    out += '(';
    render_into(code, i, out);
    out += ',';
    render_into(code, i, out);
    out += ')';
}

}  // namespace

OpMonomial OpMonomial::input() { return OpMonomial(Code{-1}); }

OpMonomial OpMonomial::node(Op op, const OpMonomial& left, const OpMonomial& right) {
    Code code{static_cast<std::int8_t>(op)};
    code.insert(code.end(), left.code_.begin(), left.code_.end());
    code.insert(code.end(), right.code_.begin(), right.code_.end());
    return OpMonomial(std::move(code));
}

Op OpMonomial::op() const {
    if (is_input()) throw DomainError("an input has no generator");
    return static_cast<Op>(code_.front());
}

OpMonomial OpMonomial::left() const {
    if (is_input()) throw DomainError("an input has no children");
    return OpMonomial(Code(code_.begin() + 1, code_.begin() + subtree_end(code_, 1)));
}

OpMonomial OpMonomial::right() const {
    if (is_input()) throw DomainError("an input has no children");
    return OpMonomial(Code(code_.begin() + subtree_end(code_, 1), code_.end()));
}

std::size_t OpMonomial::arity() const noexcept {
    return static_cast<std::size_t>(std::count(code_.begin(), code_.end(), std::int8_t{-1}));
}

std::string OpMonomial::render() const {
    std::string out;
    std::size_t i = 0;
    render_into(code_, i, out);
    return out;
}

std::string to_string(const OpComb& x) {
    if (x.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : x) {
        Scalar a = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (a != 1) out << a.get_str() << " ";
        out << m.render();
        first = false;
    }
    return out.str();
}

namespace {

class OpParser {
public:
    explicit OpParser(std::string_view text) : text_(text) {}

    OpComb parse_sum() {
        OpComb out;
        skip();
        bool first = true;
        while (!at_end()) {
            Scalar sign = 1;
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = -1;
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            Scalar coeff = 1;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                const std::size_t start = pos_;
                while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
                coeff = Scalar(std::string(text_.substr(start, pos_ - start)));
                skip();
                if (peek() == '*') {
                    ++pos_;
                    skip();
                }
            }
            out.add(parse_term(), sign * coeff);
            skip();
            first = false;
        }
        if (first) fail("empty expression");
        return out;
    }

    OpMonomial parse_single() {
        skip();
        OpMonomial m = parse_term();
        skip();
        if (!at_end()) fail("unexpected trailing input");
        return m;
    }

private:
    OpMonomial parse_term() {
        const char c = peek();
        if (c == 'I' || c == 'x') {
            ++pos_;
            return OpMonomial::input();
        }
        Op op;
        if (c == '>') {
            op = Op::Left;
        } else if (c == 'm') {
            op = Op::Concat;
        } else if (c == '<') {
            op = Op::Right;
        } else {
            fail("expected 'I', '>', 'm' or '<'");
        }
        ++pos_;
        skip();
        if (peek() != '(') return OpMonomial::node(op, OpMonomial::input(), OpMonomial::input());
        ++pos_;
        skip();
        OpMonomial left = parse_term();
        skip();
        if (peek() != ',') fail("expected ','");
        ++pos_;
        skip();
        OpMonomial right = parse_term();
        skip();
        if (peek() != ')') fail("expected ')'");
        ++pos_;
        return OpMonomial::node(op, left, right);
    }

    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    bool at_end() const { return pos_ >= text_.size(); }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

OpMonomial parse_monomial(std::string_view text) { return OpParser(text).parse_single(); }

OpComb parse_op_combination(std::string_view text) { return OpParser(text).parse_sum(); }

OpMonomial Quadratic::monomial() const {
    const OpMonomial x = OpMonomial::input();
    const OpMonomial in = OpMonomial::node(inner, x, x);
    return slot == Slot::First ? OpMonomial::node(outer, in, x) : OpMonomial::node(outer, x, in);
}

std::strong_ordering path_lex_compare(const OpMonomial& a, const OpMonomial& b) {
    auto labels = [](const OpMonomial& m) {
        std::vector<std::int8_t> out;
        for (auto c : m.code()) {
            if (c >= 0) out.push_back(c);
        }
        return out;
    };
    auto shape = [](const OpMonomial& m) {
        std::vector<std::size_t> out;
        const Code& code = m.code();
        for (std::size_t i = 0; i < code.size(); ++i) {
            if (code[i] < 0) continue;
            const std::size_t end = subtree_end(code, i + 1);
            out.push_back(static_cast<std::size_t>(
                std::count(code.begin() + i + 1, code.begin() + end, std::int8_t{-1})));
        }
        return out;
    };
    if (auto c = labels(a) <=> labels(b); c != 0) return c;
    return shape(a) <=> shape(b);
}

RewriteSystem::RewriteSystem(std::string name, std::vector<Rule> rules)
    : name_(std::move(name)), rules_(std::move(rules)) {}

std::vector<Match> RewriteSystem::matches(const OpMonomial& m) const {
    std::vector<Match> out;
    const Code& code = m.code_;
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (code[i] < 0) continue;
        const std::size_t right_child = subtree_end(code, i + 1);
        for (std::size_t r = 0; r < rules_.size(); ++r) {
            const Quadratic& q = rules_[r].lhs;
            if (code[i] != static_cast<std::int8_t>(q.outer)) continue;
            const std::size_t child = q.slot == Slot::First ? i + 1 : right_child;
            if (code[child] == static_cast<std::int8_t>(q.inner)) out.push_back({i, r});
        }
    }
    return out;
}

OpComb RewriteSystem::rewrite_at(const OpMonomial& m, const Match& match) const {
    const Code& code = m.code_;
    const Rule& rule = rules_.at(match.rule);
    const std::size_t i = match.position;
    const std::size_t end = subtree_end(code, i);
    // Split the matched subtree into its three arguments x, y, z.
    Code x, y, z;
    if (rule.lhs.slot == Slot::First) {
        const std::size_t xe = subtree_end(code, i + 2);
        const std::size_t ye = subtree_end(code, xe);
        x.assign(code.begin() + i + 2, code.begin() + xe);
        y.assign(code.begin() + xe, code.begin() + ye);
        z.assign(code.begin() + ye, code.begin() + end);
    } else {
        const std::size_t xe = subtree_end(code, i + 1);
        const std::size_t ye = subtree_end(code, xe + 1);
        x.assign(code.begin() + i + 1, code.begin() + xe);
        y.assign(code.begin() + xe + 1, code.begin() + ye);
        z.assign(code.begin() + ye, code.begin() + end);
    }
    OpComb out;
    for (const auto& [q, c] : rule.rhs) {
        Code sub{static_cast<std::int8_t>(q.outer)};
        if (q.slot == Slot::First) {
            sub.push_back(static_cast<std::int8_t>(q.inner));
            sub.insert(sub.end(), x.begin(), x.end());
            sub.insert(sub.end(), y.begin(), y.end());
            sub.insert(sub.end(), z.begin(), z.end());
        } else {
            sub.insert(sub.end(), x.begin(), x.end());
            sub.push_back(static_cast<std::int8_t>(q.inner));
            sub.insert(sub.end(), y.begin(), y.end());
            sub.insert(sub.end(), z.begin(), z.end());
        }
        Code whole(code.begin(), code.begin() + i);
        whole.insert(whole.end(), sub.begin(), sub.end());
        whole.insert(whole.end(), code.begin() + end, code.end());
        out.add(OpMonomial(std::move(whole)), c);
    }
    return out;
}

std::vector<OpComb> RewriteSystem::reduction_chain(const OpComb& x) const {
    constexpr std::size_t max_steps = 1'000'000;
    std::vector<OpComb> chain{x};
    OpComb current = x;
    for (std::size_t step = 0; step < max_steps; ++step) {
        bool rewrote = false;
        for (const auto& [m, c] : current) {
            const auto ms = matches(m);
            if (ms.empty()) continue;
            OpComb next = current;
            next.add(m, -c);
            OpComb image = rewrite_at(m, ms.front());
            image *= c;
            next += image;
            current = std::move(next);
            rewrote = true;
            break;
        }
        if (!rewrote) return chain;
        chain.push_back(current);
    }
    throw std::runtime_error("rewriting in " + name_ + " did not terminate");
}

OpComb RewriteSystem::normal_form(const OpComb& x) const { return reduction_chain(x).back(); }

namespace {

Quadratic first(Op outer, Op inner) { return {outer, inner, Slot::First}; }
Quadratic second(Op outer, Op inner) { return {outer, inner, Slot::Second}; }

OpComb binomial(Quadratic a, Quadratic b) {
    OpComb out(a.monomial());
    out.add(b.monomial(), -1);
    return out;
}

constexpr Op L = Op::Left;
constexpr Op M = Op::Concat;
constexpr Op R = Op::Right;

std::vector<std::pair<Quadratic, Quadratic>> binomial_pairs() {
    return {
        {first(L, M), second(L, L)},  // (xy)≻z = x≻(y≻z)
        {first(M, L), second(L, M)},  // (x≻y)z = x≻(yz)
        {first(R, R), second(R, M)},  // (x≺y)≺z = x≺(yz)
        {first(R, M), second(M, R)},  // (xy)≺z = x(y≺z)
        {first(R, L), second(L, R)},  // (x≻y)≺z = x≻(y≺z)
        {first(M, M), second(M, M)},  // (xy)z = x(yz)
    };
}

std::vector<Quadratic> dual_monomials() {
    return {first(L, L), first(L, R), first(M, R), second(R, R), second(R, L), second(M, L)};
}

Quadratic quadratic_of(const OpMonomial& m) {
    const OpMonomial l = m.left();
    if (!l.is_input()) return first(m.op(), l.op());
    return second(m.op(), m.right().op());
}

// Orients a relation with its path-lex leading term as left-hand side.
Rule orient(const std::string& name, const OpComb& relation) {
    auto lead = relation.begin();
    for (auto it = relation.begin(); it != relation.end(); ++it) {
        if (path_lex_compare(it->first, lead->first) > 0) lead = it;
    }
    Rule rule{name, quadratic_of(lead->first), {}};
    const Scalar lc = lead->second;
    for (const auto& [m, c] : relation) {
        if (m == lead->first) continue;
        rule.rhs.emplace_back(quadratic_of(m), -c / lc);
    }
    return rule;
}

Rule reversed(const Rule& rule) {
    if (rule.rhs.size() != 1) throw DomainError("only binomial rules can be reversed");
    const Scalar c = rule.rhs.front().second;
    return Rule{rule.name, rule.rhs.front().first, {{rule.lhs, 1 / c}}};
}

}  // namespace

std::vector<OpComb> bg_relations() {
    std::vector<OpComb> out;
    for (const auto& [a, b] : binomial_pairs()) out.push_back(binomial(a, b));
    return out;
}

std::vector<OpComb> bg_dual_relations() {
    std::vector<OpComb> out = bg_relations();
    for (const auto& q : dual_monomials()) out.emplace_back(q.monomial());
    return out;
}

RewriteSystem bg_dual_system(Orientation orientation) {
    const auto relations = bg_dual_relations();
    std::vector<Rule> rules;
    for (std::size_t i = 0; i < relations.size(); ++i) {
        rules.push_back(orient("r" + std::to_string(i + 1), relations[i]));
    }
    if (orientation == Orientation::Confluent) rules[3] = reversed(rules[3]);
    return RewriteSystem(orientation == Orientation::Printed ? "bgdual-printed" : "bgdual-confluent",
                         std::move(rules));
}

RewriteSystem bg_system(Orientation orientation) {
    const RewriteSystem dual = bg_dual_system(orientation);
    std::vector<Rule> rules;
    for (std::size_t i = 0; i < 6; ++i) rules.push_back(reversed(dual.rules()[i]));
    return RewriteSystem(orientation == Orientation::Printed ? "bg-printed" : "bg-confluent",
                         std::move(rules));
}

Scalar weight3_pairing(const OpComb& x, const OpComb& y) {
    Scalar total = 0;
    for (const auto& [m, c] : x) {
        if (m.arity() != 3) throw DomainError("weight-3 pairing needs arity-3 monomials");
        const Scalar d = y.coeff(m);
        if (d == 0) continue;
        const Scalar sign = m.left().is_input() ? -1 : 1;
        total += sign * c * d;
    }
    return total;
}

bool AnnihilatorReport::ok() const {
    for (const auto& row : values) {
        for (const auto& v : row) {
            if (v != 0) return false;
        }
    }
    return relation_rank + dual_relation_rank == space_dimension &&
           annihilator_dimension == dual_relation_rank;
}

namespace {

std::vector<OpMonomial> all_quadratics() {
    std::vector<OpMonomial> out;
    for (Op a : all_ops) {
        for (Op b : all_ops) {
            out.push_back(first(a, b).monomial());
            out.push_back(second(a, b).monomial());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

IntMatrix coefficient_matrix(const std::vector<OpComb>& rows, const std::vector<OpMonomial>& basis) {
    IntMatrix m(rows.size(), basis.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) m(i, j) = rows[i].coeff(basis[j]);
    }
    return m;
}

}  // namespace

AnnihilatorReport annihilator_check() {
    const auto rel = bg_relations();
    const auto dual = bg_dual_relations();
    const auto basis = all_quadratics();
    AnnihilatorReport report;
    report.space_dimension = basis.size();
    for (const auto& d : dual) {
        std::vector<Scalar> row;
        for (const auto& r : rel) row.push_back(weight3_pairing(d, r));
        report.values.push_back(std::move(row));
    }
    report.relation_rank = rank(coefficient_matrix(rel, basis));
    report.dual_relation_rank = rank(coefficient_matrix(dual, basis));
    // The annihilator of the relations is the kernel of the pairing matrix
    // between the relations and the whole basis.
    std::vector<OpComb> basis_combs(basis.begin(), basis.end());
    IntMatrix pairing_matrix(rel.size(), basis.size());
    for (std::size_t i = 0; i < rel.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            pairing_matrix(i, j) = weight3_pairing(basis_combs[j], rel[i]);
        }
    }
    report.annihilator_dimension = basis.size() - rank(pairing_matrix);
    return report;
}

std::vector<OpMonomial> enumerate_monomials(std::size_t arity) {
    if (arity == 0) return {};
    if (arity == 1) return {OpMonomial::input()};
    std::vector<OpMonomial> out;
    for (std::size_t k = 1; k < arity; ++k) {
        const auto lefts = enumerate_monomials(k);
        const auto rights = enumerate_monomials(arity - k);
        for (Op op : all_ops) {
            for (const auto& l : lefts) {
                for (const auto& r : rights) out.push_back(OpMonomial::node(op, l, r));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CriticalMonomial> critical_pairs(const RewriteSystem& system) {
    std::vector<CriticalMonomial> out;
    for (const auto& m : enumerate_monomials(4)) {
        const auto ms = system.matches(m);
        if (ms.size() < 2) continue;
        CriticalMonomial cm{m, {}, true, false};
        for (const auto& match : ms) {
            Branch b{system.rules()[match.rule].name, match.position, {}};
            b.chain.emplace_back(m);
            const auto rest = system.reduction_chain(system.rewrite_at(m, match));
            b.chain.insert(b.chain.end(), rest.begin(), rest.end());
            cm.branches.push_back(std::move(b));
        }
        for (const auto& b : cm.branches) {
            cm.joinable = cm.joinable && b.chain.back() == cm.branches.front().chain.back();
        }
        const Code& code = m.code();
        const bool left_comb = code[1] >= 0 && code[2] >= 0;
        cm.left_comb_of_binomial_rules =
            left_comb && std::all_of(ms.begin(), ms.end(), [&](const Match& x) {
                return !system.rules()[x.rule].rhs.empty();
            });
        out.push_back(std::move(cm));
    }
    return out;
}

std::vector<OpMonomial> listed_critical_monomials() {
    const std::vector<std::array<Op, 3>> labels = {
        {R, R, R}, {R, R, M}, {R, R, L}, {R, M, M}, {R, M, L}, {R, L, M},
        {M, M, M}, {M, L, M}, {L, M, M}, {M, M, L}, {L, M, L},
    };
    const OpMonomial x = OpMonomial::input();
    std::vector<OpMonomial> out;
    for (const auto& [a, b, c] : labels) {
        out.push_back(OpMonomial::node(a, OpMonomial::node(b, OpMonomial::node(c, x, x), x), x));
    }
    return out;
}

Scalar count_normal_forms(std::size_t arity, const RewriteSystem& system) {
    if (arity == 0) return 0;
    if (arity == 1) return 1;
    auto forbidden = [&](Op outer, Op inner, Slot slot) {
        return std::any_of(system.rules().begin(), system.rules().end(), [&](const Rule& r) {
            return r.lhs.outer == outer && r.lhs.inner == inner && r.lhs.slot == slot;
        });
    };
    // rooted[n][op]: normal monomials of arity n with root label op.
    std::vector<std::array<Scalar, 3>> rooted(arity + 1);
    auto child_count = [&](Op outer, std::size_t n, Slot slot) {
        if (n == 1) return Scalar(1);
        Scalar total = 0;
        for (Op inner : all_ops) {
            if (!forbidden(outer, inner, slot)) total += rooted[n][static_cast<std::size_t>(inner)];
        }
        return total;
    };
    for (std::size_t n = 2; n <= arity; ++n) {
        for (Op op : all_ops) {
            Scalar total = 0;
            for (std::size_t k = 1; k < n; ++k) {
                total += child_count(op, k, Slot::First) * child_count(op, n - k, Slot::Second);
            }
            rooted[n][static_cast<std::size_t>(op)] = total;
        }
    }
    return rooted[arity][0] + rooted[arity][1] + rooted[arity][2];
}

Forest evaluate_on_generator(const OpMonomial& m) {
    if (m.is_input()) return Forest(leaf());
    return apply(m.op(), evaluate_on_generator(m.left()), evaluate_on_generator(m.right()));
}

}  // namespace bigraft
