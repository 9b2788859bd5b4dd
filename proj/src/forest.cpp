#include "bigraft/forest.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "bigraft/errors.hpp"

namespace bigraft {

void check_bound(std::size_t value, std::size_t bound, const char* what) {
    if (value > bound) {
        throw BoundError(std::string(what) + " " + std::to_string(value) +
                         " exceeds the configured bound " + std::to_string(bound));
    }
}

Forest::Forest(std::vector<Tree> ts) : trees(std::move(ts)) {}
Forest::Forest(Tree t) { trees.push_back(std::move(t)); }

bool operator==(const Forest& a, const Forest& b) { return a.trees == b.trees; }
bool operator==(const Tree& a, const Tree& b) { return a.left == b.left && a.right == b.right; }

std::strong_ordering operator<=>(const Forest& a, const Forest& b) {
    const std::size_t n = std::min(a.trees.size(), b.trees.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = a.trees[i] <=> b.trees[i]; c != 0) return c;
    }
    return a.trees.size() <=> b.trees.size();
}

std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
    if (auto c = a.left <=> b.left; c != 0) return c;
    return a.right <=> b.right;
}

std::size_t degree(const Tree& t) { return 1 + degree(t.left) + degree(t.right); }

std::size_t degree(const Forest& f) {
    std::size_t d = 0;
    for (const auto& t : f.trees) d += degree(t);
    return d;
}

Tree b_plus(Forest left, Forest right) { return Tree{std::move(left), std::move(right)}; }

std::pair<Forest, Forest> b_minus(const Tree& t) { return {t.left, t.right}; }

Forest concat(const Forest& a, const Forest& b) {
    Forest out = a;
    out.trees.insert(out.trees.end(), b.trees.begin(), b.trees.end());
    return out;
}

Tree dagger(const Tree& t) { return Tree{dagger(t.right), dagger(t.left)}; }

Forest dagger(const Forest& f) {
    Forest out;
    out.trees.reserve(f.trees.size());
    for (auto it = f.trees.rbegin(); it != f.trees.rend(); ++it) out.trees.push_back(dagger(*it));
    return out;
}

namespace {

void render_into(const Tree& t, std::string& out) {
    out += 'o';
    if (t.left.empty() && t.right.empty()) return;
    out += '[';
    bool first = true;
    auto emit = [&](const Forest& block, char tag) {
        for (const auto& child : block.trees) {
            if (!first) out += ',';
            first = false;
            out += tag;
            out += ':';
            render_into(child, out);
        }
    };
    emit(t.left, 'l');
    emit(t.right, 'r');
    out += ']';
}

class ForestParser {
public:
    explicit ForestParser(std::string_view text) : text_(text) {}

    Forest parse_forest() {
        skip_space();
        if (peek() == '1') {
            ++pos_;
            skip_space();
            expect_end();
            return Forest{};
        }
        Forest out;
        out.trees.push_back(parse_tree());
        while (true) {
            const std::size_t before = pos_;
            skip_space();
            if (at_end()) break;
            if (pos_ == before) fail("expected whitespace between trees");
            out.trees.push_back(parse_tree());
        }
        return out;
    }

    Tree parse_single_tree() {
        skip_space();
        Tree t = parse_tree();
        skip_space();
        expect_end();
        return t;
    }

private:
    Tree parse_tree() {
        const std::size_t start = pos_;
        if (peek() != 'o') fail("expected 'o'");
        ++pos_;
        Tree t;
        if (peek() != '[') return t;
        ++pos_;
        bool seen_right = false;
        while (true) {
            skip_space();
            const char tag = peek();
            if (tag != 'l' && tag != 'r') fail("expected 'l' or 'r'");
            ++pos_;
            skip_space();
            if (peek() != ':') fail("expected ':'");
            ++pos_;
            skip_space();
            Tree child = parse_tree();
            if (tag == 'l') {
                if (seen_right) {
                    throw ParseError("l-edge after an r-edge below the vertex starting", start);
                }
                t.left.trees.push_back(std::move(child));
            } else {
                seen_right = true;
                t.right.trees.push_back(std::move(child));
            }
            skip_space();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            if (peek() == ']') {
                ++pos_;
                break;
            }
            fail("expected ',' or ']'");
        }
        return t;
    }

    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    bool at_end() const { return pos_ >= text_.size(); }
    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    void expect_end() {
        if (!at_end()) fail("unexpected trailing input");
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string render(const Tree& t) {
    std::string out;
    render_into(t, out);
    return out;
}

std::string render(const Forest& f) {
    if (f.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < f.trees.size(); ++i) {
        if (i) out += ' ';
        render_into(f.trees[i], out);
    }
    return out;
}

Forest parse_forest(std::string_view text) { return ForestParser(text).parse_forest(); }

Tree parse_tree(std::string_view text) { return ForestParser(text).parse_single_tree(); }

namespace {

bool is_leaf(const Tree& t) { return t.left.empty() && t.right.empty(); }

bool is_corolla(const Tree& t) {
    return std::all_of(t.left.trees.begin(), t.left.trees.end(), is_leaf) &&
           std::all_of(t.right.trees.begin(), t.right.trees.end(), is_leaf);
}

}  // namespace

bool is_dual_basis(const Forest& f) {
    const std::size_t n = f.trees.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Tree& t = f.trees[i];
        if (!is_corolla(t)) return false;
        if (i != 0 && !t.left.empty()) return false;
        if (i + 1 != n && !t.right.empty()) return false;
    }
    return true;
}

Forest DualShape::to_forest() const {
    auto leaves = [](std::size_t count) {
        return Forest(std::vector<Tree>(count, leaf()));
    };
    if (spine == 0) {
        if (left || right) throw DomainError("dual shape without roots must be empty");
        return Forest{};
    }
    if (spine == 1) return Forest(b_plus(leaves(left), leaves(right)));
    Forest out;
    out.trees.push_back(b_plus(leaves(left), Forest{}));
    for (std::size_t i = 2; i < spine; ++i) out.trees.push_back(leaf());
    out.trees.push_back(b_plus(Forest{}, leaves(right)));
    return out;
}

DualShape DualShape::from_forest(const Forest& f) {
    if (!is_dual_basis(f)) throw DomainError("not a dual-basis forest: " + render(f));
    if (f.empty()) return {};
    return DualShape{f.trees.front().left.length(), f.length(), f.trees.back().right.length()};
}

namespace {

std::size_t number_vertices(const Tree& t, std::size_t start, std::size_t parent, Decoration edge,
                            std::size_t depth, std::vector<VertexInfo>& out) {
    const std::size_t root = start + degree(t.left);
    out[root] = VertexInfo{parent, edge, depth};
    std::size_t pos = start;
    for (const auto& c : t.left.trees) {
        pos += number_vertices(c, pos, root, Decoration::L, depth + 1, out);
    }
    pos = root + 1;
    for (const auto& c : t.right.trees) {
        pos += number_vertices(c, pos, root, Decoration::R, depth + 1, out);
    }
    return pos - start;
}

struct TreeCut {
    std::vector<std::size_t> vertices;
    Forest lea;
    std::optional<Tree> roo;
};

std::vector<TreeCut> tree_cuts(const Tree& t, std::size_t start);

// Cuts of the children of one block, combined left to right.
struct BlockCut {
    std::vector<std::size_t> vertices;
    Forest lea;
    Forest roo;
};

std::vector<BlockCut> block_cuts(const Forest& block, std::size_t start) {
    std::vector<BlockCut> acc{BlockCut{}};
    std::size_t pos = start;
    for (const auto& child : block.trees) {
        const auto options = tree_cuts(child, pos);
        std::vector<BlockCut> next;
        next.reserve(acc.size() * options.size());
        for (const auto& a : acc) {
            for (const auto& o : options) {
                BlockCut c = a;
                c.vertices.insert(c.vertices.end(), o.vertices.begin(), o.vertices.end());
                c.lea.trees.insert(c.lea.trees.end(), o.lea.trees.begin(), o.lea.trees.end());
                if (o.roo) c.roo.trees.push_back(*o.roo);
                next.push_back(std::move(c));
            }
        }
        acc = std::move(next);
        pos += degree(child);
    }
    return acc;
}

std::vector<TreeCut> tree_cuts(const Tree& t, std::size_t start) {
    const std::size_t root = start + degree(t.left);
    std::vector<TreeCut> out;
    const auto lefts = block_cuts(t.left, start);
    const auto rights = block_cuts(t.right, root + 1);
    for (const auto& l : lefts) {
        for (const auto& r : rights) {
            TreeCut c;
            c.vertices = l.vertices;
            c.vertices.insert(c.vertices.end(), r.vertices.begin(), r.vertices.end());
            c.lea = concat(l.lea, r.lea);
            c.roo = b_plus(l.roo, r.roo);
            out.push_back(std::move(c));
        }
    }
    out.push_back(TreeCut{{root}, Forest(t), std::nullopt});
    return out;
}

}  // namespace

std::vector<VertexInfo> vertex_order(const Forest& f) {
    std::vector<VertexInfo> out(degree(f));
    std::size_t pos = 0;
    for (const auto& t : f.trees) {
        pos += number_vertices(t, pos, VertexInfo::npos, Decoration::L, 0, out);
    }
    return out;
}

std::vector<Cut> admissible_cuts(const Forest& f) {
    const auto combos = block_cuts(f, 0);
    std::vector<Cut> out;
    out.reserve(combos.size());
    for (const auto& c : combos) {
        auto vertices = c.vertices;
        std::sort(vertices.begin(), vertices.end());
        out.push_back(Cut{std::move(vertices), c.lea, c.roo});
    }
    return out;
}

}  // namespace bigraft
