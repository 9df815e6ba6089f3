#pragma once

#include <vector>

#include "legsurg/algebra/integer_matrix.hpp"

namespace legsurg::algebra {

/// U * A * V = D with U, V unimodular and D diagonal, nonnegative, and each
/// diagonal entry dividing the next.
struct SmithDecomposition {
  IntegerMatrix u;
  IntegerMatrix d;
  IntegerMatrix v;

  // Diagonal of D, length min(rows, cols).
  std::vector<Integer> diagonal() const;
  // Number of nonzero diagonal entries.
  std::size_t rank() const;
};

// Pivot rule: smallest nonzero |entry| in the remaining block, ties broken by
// lowest row, then lowest column. Throws UsageError on an empty matrix.
SmithDecomposition smith_normal_form(const IntegerMatrix& a);

}  // namespace legsurg::algebra
