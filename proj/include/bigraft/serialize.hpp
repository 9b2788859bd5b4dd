#pragma once

#include <json.hpp>

#include "bigraft/forest.hpp"
#include "bigraft/linear.hpp"
#include "bigraft/matrix.hpp"

namespace bigraft {

using Json = nlohmann::json;

// tree = {"c": [["l", tree], ["r", tree], ...]}, forest = [tree, ...].
Json to_json(const Tree& t);
Json to_json(const Forest& f);
Tree tree_from_json(const Json& j);
Forest forest_from_json(const Json& j);

// Coefficients are JSON integers when they fit in 64 bits and decimal strings
// otherwise; both spellings are accepted on input.
Json to_json(const Scalar& c);
Scalar scalar_from_json(const Json& j);

// {"terms": [{"forest": forest, "text": "...", "coeff": c}, ...]} sorted by text.
Json to_json(const LinComb& x);
LinComb lincomb_from_json(const Json& j);

// {"terms": [{"left": forest, "right": forest, "text": "...", "coeff": c}, ...]}.
Json to_json(const Tensor2& x);
Tensor2 tensor_from_json(const Json& j);

// {"rows": r, "cols": c, "entries": [[...], ...]}.
Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

}  // namespace bigraft
