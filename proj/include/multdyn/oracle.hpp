#pragma once

#include <span>
#include <vector>

#include "multdyn/dynamics.hpp"

namespace multdyn {

struct ContinuationSettings {
  Real initial_step{"1e-2"};
  Real min_step{"1e-9"};
  Real newton_tol{"1e-25"};
  unsigned max_newton_iters = 40;
  Real fd_step{"1e-15"};
  // |multiplier - 1| below this is treated as a multiple orbit.
  Real singular_threshold{"1e-12"};
  // A corrected orbit moving farther than this in one accepted step is
  // treated as a path-tracking failure (possible orbit jump).
  Real max_point_jump{"0.25"};
};

// Newton iteration on the cycle system
//   (p(w_0) - w_1, ..., p(w_{m-1}) - w_0)
// from an approximate orbit. Throws NewtonDiverged / SingularJacobian.
std::vector<Complex> refine_orbit(const CenteredPolynomial& p,
                                  std::span<const Complex> approx_orbit,
                                  const ContinuationSettings& settings = {});

// Tracks the orbit along the straight coefficient segment p_from -> p_to
// with adaptive step halving; throws PathStalled when the step falls below
// min_step.
std::vector<Complex> continue_orbit(const CenteredPolynomial& p_from,
                                    std::span<const Complex> orbit,
                                    const CenteredPolynomial& p_to,
                                    const ContinuationSettings& settings = {});

// Central finite differences of the multiplier with respect to a_j for each
// requested j; each evaluation re-refines the orbit at the shifted
// parameter. A real step suffices for a holomorphic multiplier.
std::vector<Complex> fd_gradient(const CenteredPolynomial& p,
                                 std::span<const Complex> orbit,
                                 std::span<const unsigned> indices,
                                 const ContinuationSettings& settings = {});

}  // namespace multdyn
