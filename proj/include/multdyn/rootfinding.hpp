#pragma once

#include <cstdint>
#include <vector>

#include "multdyn/complexmp.hpp"

namespace multdyn {

struct RootFindOptions {
  unsigned max_iterations = 600;
  // Stop when every Aberth correction is below tol * (1 + |root|).
  // Non-positive value means: derive from the working precision.
  Real tolerance = Real(0);
};

// All complex roots (with multiplicity) of the dense polynomial
// sum coeffs[i] x^i, by the Aberth-Ehrlich simultaneous iteration.
// Exact zero roots (trailing zero coefficients) are split off first.
std::vector<Complex> find_roots(const std::vector<Complex>& coeffs,
                                const RootFindOptions& options = {});

struct RootCluster {
  Complex center;
  unsigned multiplicity = 1;
};

// Merges roots closer than `tol` into clusters (connected components of the
// proximity graph); cluster center is the component mean.
std::vector<RootCluster> merge_root_clusters(const std::vector<Complex>& roots,
                                             const Real& tol);

}  // namespace multdyn
