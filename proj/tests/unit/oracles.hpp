#pragma once

// Independent reference implementations. They work on rendered forest text
// and flat vertex arrays and never call into the library.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Terms = std::map<std::pair<std::string, std::string>, long>;

// Coproduct by brute force over every subset of vertices that is an antichain.
// The empty subset gives 1 ⊗ F, the set of all roots gives F ⊗ 1.
Terms coproduct(const std::string& forest);

// Number of antichains of vertices (the admissible cuts).
std::size_t cut_count(const std::string& forest);

// Pairing computed from the brute-force coproduct.
long pairing(const std::string& x, const std::string& y);

// Rank by Gaussian elimination over the rationals.
std::size_t rational_rank(const std::vector<std::vector<long>>& rows);

// Number of vertices.
std::size_t degree(const std::string& forest);

}  // namespace oracle
