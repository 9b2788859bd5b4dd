#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bigraft {

enum class Decoration : std::uint8_t { L, R };

struct Tree;

// Ordered sequence of trees; the empty forest is the unit 1.
struct Forest {
    std::vector<Tree> trees;

    Forest() = default;
    explicit Forest(std::vector<Tree> ts);
    explicit Forest(Tree t);

    bool empty() const noexcept { return trees.empty(); }
    std::size_t length() const noexcept { return trees.size(); }
};

// A vertex with its l-children followed by its r-children. Storing the two
// blocks separately makes the l-before-r rule hold by construction.
struct Tree {
    Forest left;
    Forest right;
};

bool operator==(const Forest& a, const Forest& b);
bool operator==(const Tree& a, const Tree& b);
std::strong_ordering operator<=>(const Forest& a, const Forest& b);
std::strong_ordering operator<=>(const Tree& a, const Tree& b);

inline Tree leaf() { return Tree{}; }
inline Forest unit_forest() { return Forest{}; }

std::size_t degree(const Tree& t);
std::size_t degree(const Forest& f);

Tree b_plus(Forest left, Forest right);
std::pair<Forest, Forest> b_minus(const Tree& t);

Forest concat(const Forest& a, const Forest& b);

Tree dagger(const Tree& t);
Forest dagger(const Forest& f);

std::string render(const Tree& t);
std::string render(const Forest& f);

// Grammar: forest := "1" | tree (" " tree)*; tree := "o" ["[" child ("," child)* "]"];
// child := ("l"|"r") ":" tree. Whitespace inside brackets is ignored.
Forest parse_forest(std::string_view text);
Tree parse_tree(std::string_view text);

// Corolla forest whose l-edges sit only on the first tree and r-edges only on
// the last tree.
bool is_dual_basis(const Forest& f);

// Parameters (l-leaves on the first root, number of roots, r-leaves on the
// last root) of a dual-basis forest. The unit is {0, 0, 0}.
struct DualShape {
    std::size_t left = 0;
    std::size_t spine = 0;
    std::size_t right = 0;

    std::size_t degree() const noexcept { return left + spine + right; }
    Forest to_forest() const;
    static DualShape from_forest(const Forest& f);

    friend auto operator<=>(const DualShape&, const DualShape&) = default;
};

// One entry per vertex in the recursive order: earlier trees first, and for
// B(G ⊗ H) the vertices of G, then the root, then the vertices of H.
struct VertexInfo {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t parent = npos;
    Decoration edge = Decoration::L;  // meaningless for roots
    std::size_t depth = 0;
};

std::vector<VertexInfo> vertex_order(const Forest& f);

struct Cut {
    std::vector<std::size_t> vertices;  // positions in vertex_order
    Forest lea;                         // the part above the cut
    Forest roo;                         // the part containing the roots
};

// Every admissible cut, including the empty cut and the total cut (all roots).
std::vector<Cut> admissible_cuts(const Forest& f);

// All trees of degree n, in generation order (not sorted).
const std::vector<Tree>& trees_of_degree(std::size_t n);

// Visits every forest of degree n once, in generation order.
void for_each_forest(std::size_t n, const std::function<void(const Forest&)>& visit);

inline constexpr std::size_t default_enumeration_bound = 10;

// All degree-n forests (or dual-basis forests), sorted by rendered string.
std::vector<Forest> enumerate_forests(std::size_t n, bool dual_only = false,
                                      std::size_t bound = default_enumeration_bound);

std::vector<Tree> enumerate_trees(std::size_t n, std::size_t bound = default_enumeration_bound);

}  // namespace bigraft
