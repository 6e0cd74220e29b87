#pragma once

#include <doctest.h>

#include <string>

#include "multdyn/complexmp.hpp"
#include "multdyn/precision.hpp"

namespace multdyn::testing {

inline void check_close(const Complex& actual, const Complex& expected,
                        const Real& tol) {
  Real err = abs(actual - expected);
  INFO("actual   = " << to_string(actual, 25));
  INFO("expected = " << to_string(expected, 25));
  INFO("abs err  = " << to_decimal_string(err, 6) << ", tol = "
                     << to_decimal_string(tol, 6));
  CHECK(err <= tol);
}

inline void check_rel_close(const Complex& actual, const Complex& expected,
                            const Real& rel_tol) {
  Real scale = abs(expected);
  if (scale == 0) scale = Real(1);
  Real err = abs(actual - expected) / scale;
  INFO("actual   = " << to_string(actual, 25));
  INFO("expected = " << to_string(expected, 25));
  INFO("rel err  = " << to_decimal_string(err, 6) << ", tol = "
                     << to_decimal_string(rel_tol, 6));
  CHECK(err <= rel_tol);
}

// 10^(-(decimal digits - slack)): the resolvable tolerance at the current
// working precision minus some headroom.
inline Real precision_tol(int slack) {
  return pow(Real(10), -(precision_decimal_digits() - slack));
}

}  // namespace multdyn::testing
