#pragma once

#include <vector>

#include "multdyn/complexmp.hpp"

namespace multdyn {

using ComplexMatrix = std::vector<std::vector<Complex>>;

struct DeterminantResult {
  Complex det;
  // First-order bound on |computed - exact| from the rounding-error
  // propagation tracked alongside the elimination; inputs are assumed
  // accurate to a few ulp.
  Real error_bound;
};

// Determinant by Gaussian elimination with partial pivoting at working
// precision. A per-entry error magnitude is propagated through the same
// elimination and combined into a bound for the pivot product.
DeterminantResult determinant_with_error(ComplexMatrix a);

}  // namespace multdyn
