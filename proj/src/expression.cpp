#include "bigraft/expression.hpp"

#include <cctype>
#include <functional>
#include <string>

#include "bigraft/bigraft.hpp"
#include "bigraft/errors.hpp"
#include "bigraft/hopf.hpp"
#include "bigraft/operad.hpp"

namespace bigraft {

namespace {

class ExpressionParser {
public:
    explicit ExpressionParser(std::string_view text) : text_(text) {}

    Expression parse() {
        Expression e = parse_sum();
        skip();
        if (!at_end()) fail("unexpected '" + std::string(1, peek()) + "'");
        return e;
    }

private:
    Expression parse_sum() {
        skip();
        Expression lhs;
        if (peek() == '-') {
            const std::size_t at = pos_++;
            lhs = node(Expression::Kind::Negate, at, {parse_term()});
        } else {
            if (peek() == '+') ++pos_;
            lhs = parse_term();
        }
        for (;;) {
            skip();
            const char c = peek();
            if (c != '+' && c != '-') return lhs;
            const std::size_t at = pos_++;
            Expression rhs = parse_term();
            lhs = node(c == '+' ? Expression::Kind::Add : Expression::Kind::Subtract, at,
                       {std::move(lhs), std::move(rhs)});
        }
    }

    // [integer] concatenation, or a bare integer.
    Expression parse_term() {
        skip();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) return parse_concat();
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        const std::string digits(text_.substr(start, pos_ - start));
        skip();
        // A lone 1 that is not a coefficient is the empty forest.
        if (digits == "1" && !starts_operand()) {
            pos_ = start;
            return parse_concat();
        }
        Expression scaled;
        scaled.kind = Expression::Kind::Scale;
        scaled.position = start;
        scaled.scalar = Scalar(digits);
        if (starts_operand()) {
            scaled.children.push_back(parse_concat());
        } else {
            Expression one;
            one.position = start;
            scaled.children.push_back(std::move(one));
        }
        return scaled;
    }

    Expression parse_concat() {
        Expression lhs = parse_graft();
        for (;;) {
            skip();
            if (peek() != '*') return lhs;
            const std::size_t at = pos_++;
            lhs = product(Op::Concat, at, std::move(lhs), parse_graft());
        }
    }

    Expression parse_graft() {
        Expression lhs = parse_compose();
        for (;;) {
            skip();
            Op op;
            if (text_.substr(pos_, 2) == "|>") {
                op = Op::Left;
            } else if (text_.substr(pos_, 2) == "<|") {
                op = Op::Right;
            } else {
                return lhs;
            }
            const std::size_t at = pos_;
            pos_ += 2;
            lhs = product(op, at, std::move(lhs), parse_compose());
        }
    }

    Expression parse_compose() {
        Expression lhs = parse_primary();
        for (;;) {
            skip();
            if (peek() != '@') return lhs;
            const std::size_t at = pos_++;
            skip();
            expect('(');
            std::vector<Expression> children{std::move(lhs)};
            children.push_back(parse_sum());
            skip();
            while (peek() == ',') {
                ++pos_;
                children.push_back(parse_sum());
                skip();
            }
            expect(')');
            lhs = node(Expression::Kind::Compose, at, std::move(children));
        }
    }

    Expression parse_primary() {
        skip();
        const std::size_t start = pos_;
        if (peek() == '(') {
            ++pos_;
            Expression inner = parse_sum();
            skip();
            expect(')');
            return inner;
        }
        Expression lit;
        lit.position = start;
        if (peek() == '1') {
            ++pos_;
            return lit;
        }
        if (peek() != 'o') fail("expected a forest, '1' or '('");
        while (peek() == 'o') {
            lit.literal.trees.push_back(parse_one_tree());
            const std::size_t save = pos_;
            skip();
            if (peek() != 'o') {
                pos_ = save;
                break;
            }
        }
        return lit;
    }

    // Finds the extent of one tree literal and hands it to the forest parser.
    Tree parse_one_tree() {
        const std::size_t start = pos_++;
        std::size_t save = pos_;
        skip();
        if (peek() != '[') {
            pos_ = save;
            return leaf();
        }
        std::size_t depth = 0;
        do {
            if (at_end()) fail("unbalanced '['");
            if (peek() == '[') ++depth;
            if (peek() == ']') --depth;
            ++pos_;
        } while (depth > 0);
        try {
            return parse_tree(text_.substr(start, pos_ - start));
        } catch (const ParseError& e) {
            throw ParseError("invalid tree literal", start + e.position());
        }
    }

    bool starts_operand() const {
        const char c = peek();
        return c == 'o' || c == '(' || c == '1';
    }

    static Expression node(Expression::Kind kind, std::size_t at, std::vector<Expression> children) {
        Expression e;
        e.kind = kind;
        e.position = at;
        e.children = std::move(children);
        return e;
    }

    static Expression product(Op op, std::size_t at, Expression lhs, Expression rhs) {
        Expression e = node(Expression::Kind::Product, at, {});
        e.op = op;
        e.children.push_back(std::move(lhs));
        e.children.push_back(std::move(rhs));
        return e;
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
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

// Multilinear extension of forest composition; every term of f must have
// arity equal to the number of arguments.
LinComb compose_terms(const LinComb& f, const std::vector<LinComb>& args) {
    LinComb out;
    std::vector<Forest> chosen(args.size());
    std::function<void(std::size_t, const Scalar&, const Forest&)> rec = [&](std::size_t i, const Scalar& c,
                                                                          const Forest& g) {
        if (i == args.size()) {
            out.add(compose(g, chosen), c);
            return;
        }
        for (const auto& [h, d] : args[i]) {
            chosen[i] = h;
            rec(i + 1, c * d, g);
        }
    };
    for (const auto& [g, c] : f) {
        if (degree(g) != args.size()) {
            throw DomainError(render(g) + " has arity " + std::to_string(degree(g)) + ", given " +
                              std::to_string(args.size()) + " arguments");
        }
        rec(0, c, g);
    }
    return out;
}

}  // namespace

Expression parse_expression(std::string_view text) { return ExpressionParser(text).parse(); }

LinComb evaluate(const Expression& e) {
    switch (e.kind) {
        case Expression::Kind::Literal:
            return LinComb(e.literal);
        case Expression::Kind::Scale:
            return e.scalar * evaluate(e.children[0]);
        case Expression::Kind::Add:
            return evaluate(e.children[0]) + evaluate(e.children[1]);
        case Expression::Kind::Subtract:
            return evaluate(e.children[0]) - evaluate(e.children[1]);
        case Expression::Kind::Negate:
            return -evaluate(e.children[0]);
        case Expression::Kind::Product:
            return apply(e.op, evaluate(e.children[0]), evaluate(e.children[1]));
        case Expression::Kind::Compose: {
            std::vector<LinComb> args;
            for (std::size_t i = 1; i < e.children.size(); ++i) args.push_back(evaluate(e.children[i]));
            return compose_terms(evaluate(e.children[0]), args);
        }
    }
    return {};
}

LinComb evaluate(std::string_view text) { return evaluate(parse_expression(text)); }

}  // namespace bigraft
