#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "multdyn/dynamics.hpp"
#include "multdyn/numbertheory.hpp"
#include "multdyn/sparsepoly.hpp"

namespace multdyn {

// d(multiplier)/d(a_j) at the power map z -> z^n, evaluated at the orbit of
// the given exact-period-m point. Closed form; exponents are reduced modulo
// n^m - 1 before exponentiation, which is valid because the point is a root
// of unity of that order.
Complex power_map_multiplier_derivative(unsigned n, unsigned m, unsigned j,
                                        const PowerMapOrbitPoint& point);

// The integer polynomial D with d(multiplier)/d(a_j) = (1/z) * D(1/z) for
// every nonzero period-m point z of the power map.
SparsePolynomial derivative_polynomial(unsigned n, unsigned j, unsigned m);

// Degree of derivative_polynomial(n, j, m) in closed form.
std::uint64_t derivative_polynomial_degree(unsigned n, unsigned j, unsigned m);

inline const Real& default_simple_orbit_threshold() {
  static const Real t("1e-12");
  return t;
}

// d(multiplier)/d(a_j) for each requested index j at an arbitrary parameter,
// via the orbit-point derivative quotient and the product rule. Requires a
// simple orbit (multiplier away from 1) and no critical point on the orbit.
std::vector<Complex> multiplier_gradient(
    const CenteredPolynomial& p, std::span<const Complex> orbit,
    std::span<const unsigned> indices,
    const Real& simple_threshold = default_simple_orbit_threshold());

}  // namespace multdyn
