#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace blocklab {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct CanonicalForm {
  IntMatrix matrix;
  std::vector<std::size_t> order;  // matrix[a][b] = input[order[a]][order[b]]
  std::size_t nodes = 0;
};

/// Lexicographically least matrix under simultaneous row/column permutation, found by
/// equitable refinement and individualization with automorphism pruning. Symmetric input.
/// Throws std::runtime_error when the search exceeds node_budget.
CanonicalForm canonical_form(const IntMatrix& m, std::size_t node_budget = 2'000'000);

/// FNV-1a over the dimension and entries.
std::string matrix_hash(const IntMatrix& m);

}  // namespace blocklab
