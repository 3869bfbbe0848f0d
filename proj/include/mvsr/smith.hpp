#pragma once

#include <vector>

#include "mvsr/rational.hpp"

namespace mvsr {

using IntMatrix = std::vector<std::vector<BigInt>>;

IntMatrix int_identity(std::size_t n);
IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b, std::size_t inner);
/// Fraction-free (Bareiss) determinant of a square matrix.
BigInt determinant(const IntMatrix& m);

struct SmithResult {
  std::size_t rows = 0;
  std::size_t cols = 0;
  IntMatrix d;  ///< rows x cols, diagonal
  IntMatrix u;  ///< rows x rows, unimodular
  IntMatrix v;  ///< cols x cols, unimodular
  /// Nonzero diagonal entries d_1 | d_2 | ..., all positive.
  std::vector<BigInt> invariants;
  /// U m V = D, |det U| = |det V| = 1 and the divisibility chain, checked.
  bool verified = false;
};

/// Pivots on the entry of least absolute value. `cols` is needed when the
/// matrix has no rows.
SmithResult smith_normal_form(const IntMatrix& m, std::size_t cols);
SmithResult smith_normal_form(const IntMatrix& m);

}  // namespace mvsr
