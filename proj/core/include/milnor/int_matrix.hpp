#pragma once

#include <vector>

#include "milnor/integer.hpp"

namespace milnor {

/// Dense square integer matrix, row major.
using IntMatrix = std::vector<std::vector<Int>>;

/// Fraction-free (Bareiss) determinant.
Int determinant(IntMatrix a);

/// Solves M x = rhs over the integers for unimodular M (|det| = 1).
/// Throws InternalInconsistencyError when the determinant is not +-1.
std::vector<Int> solve_unimodular(const IntMatrix& m, const std::vector<Int>& rhs);

}  // namespace milnor
