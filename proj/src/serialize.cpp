#include "bigraft/serialize.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "bigraft/errors.hpp"

namespace bigraft {

namespace {

std::string render_key(const ForestPair& p) { return render(p.first) + " ⊗ " + render(p.second); }
std::string render_key(const Forest& f) { return render(f); }

// Terms of x sorted by their rendered key.
template <class Key>
std::vector<std::pair<std::string, const std::pair<const Key, Scalar>*>> sorted_terms(const FreeModule<Key>& x) {
    std::vector<std::pair<std::string, const std::pair<const Key, Scalar>*>> out;
    for (const auto& term : x) out.emplace_back(render_key(term.first), &term);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

template <class Key>
std::string join_terms(const FreeModule<Key>& x) {
    if (x.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [text, term] : sorted_terms(x)) {
        const Scalar& c = term->second;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const Scalar a = abs(c);
        if (a != 1) out << a.get_str() << " ";
        out << text;
        first = false;
    }
    return out.str();
}

void require(bool condition, const std::string& what) {
    if (!condition) throw DomainError("malformed JSON: " + what);
}

}  // namespace

std::string to_string(const LinComb& x) { return join_terms(x); }
std::string to_string(const Tensor2& x) { return join_terms(x); }

Json to_json(const Tree& t) {
    Json children = Json::array();
    for (const auto& c : t.left.trees) children.push_back(Json::array({"l", to_json(c)}));
    for (const auto& c : t.right.trees) children.push_back(Json::array({"r", to_json(c)}));
    return Json{{"c", children}};
}

Json to_json(const Forest& f) {
    Json out = Json::array();
    for (const auto& t : f.trees) out.push_back(to_json(t));
    return out;
}

Tree tree_from_json(const Json& j) {
    require(j.is_object() && j.contains("c") && j["c"].is_array(), "tree must be {\"c\": [...]}");
    Tree t;
    bool seen_right = false;
    for (const auto& child : j["c"]) {
        require(child.is_array() && child.size() == 2 && child[0].is_string(), "child must be [edge, tree]");
        const std::string edge = child[0].get<std::string>();
        if (edge == "l") {
            require(!seen_right, "l-edge after r-edge");
            t.left.trees.push_back(tree_from_json(child[1]));
        } else {
            require(edge == "r", "edge must be \"l\" or \"r\"");
            seen_right = true;
            t.right.trees.push_back(tree_from_json(child[1]));
        }
    }
    return t;
}

Forest forest_from_json(const Json& j) {
    require(j.is_array(), "forest must be an array");
    Forest f;
    for (const auto& t : j) f.trees.push_back(tree_from_json(t));
    return f;
}

Json to_json(const Scalar& c) {
    if (c.fits_slong_p() && sizeof(long) >= 8) return Json(c.get_si());
    return Json(c.get_str());
}

Scalar scalar_from_json(const Json& j) {
    if (j.is_number_integer()) return Scalar(std::to_string(j.get<long long>()));
    require(j.is_string(), "coefficient must be an integer or a decimal string");
    try {
        return Scalar(j.get<std::string>());
    } catch (const std::invalid_argument&) {
        require(false, "coefficient is not a decimal integer");
    }
    return {};
}

Json to_json(const LinComb& x) {
    Json terms = Json::array();
    for (const auto& [text, term] : sorted_terms(x)) {
        terms.push_back({{"forest", to_json(term->first)}, {"text", text}, {"coeff", to_json(term->second)}});
    }
    return Json{{"terms", terms}};
}

LinComb lincomb_from_json(const Json& j) {
    require(j.is_object() && j.contains("terms") && j["terms"].is_array(), "expected {\"terms\": [...]}");
    LinComb out;
    for (const auto& t : j["terms"]) out.add(forest_from_json(t.at("forest")), scalar_from_json(t.at("coeff")));
    return out;
}

Json to_json(const Tensor2& x) {
    Json terms = Json::array();
    for (const auto& [text, term] : sorted_terms(x)) {
        terms.push_back({{"left", to_json(term->first.first)},
                         {"right", to_json(term->first.second)},
                         {"text", text},
                         {"coeff", to_json(term->second)}});
    }
    return Json{{"terms", terms}};
}

Tensor2 tensor_from_json(const Json& j) {
    require(j.is_object() && j.contains("terms") && j["terms"].is_array(), "expected {\"terms\": [...]}");
    Tensor2 out;
    for (const auto& t : j["terms"]) {
        out.add({forest_from_json(t.at("left")), forest_from_json(t.at("right"))}, scalar_from_json(t.at("coeff")));
    }
    return out;
}

Json to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
        rows.push_back(row);
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

IntMatrix matrix_from_json(const Json& j) {
    require(j.is_object() && j.contains("rows") && j.contains("cols") && j.contains("entries"),
            "expected {\"rows\", \"cols\", \"entries\"}");
    IntMatrix m(j["rows"].get<std::size_t>(), j["cols"].get<std::size_t>());
    require(j["entries"].size() == m.rows(), "row count mismatch");
    for (std::size_t i = 0; i < m.rows(); ++i) {
        require(j["entries"][i].size() == m.cols(), "column count mismatch");
        for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = scalar_from_json(j["entries"][i][k]);
    }
    return m;
}

}  // namespace bigraft
