#pragma once

#include <cstdint>
#include <vector>

#include "multdyn/complexmp.hpp"
#include "multdyn/precision.hpp"
#include "multdyn/sparsepoly.hpp"

namespace multdyn {

// Dense univariate polynomial over Z, coefficient i belongs to x^i.
// Normalized: no trailing zero coefficients; zero polynomial has empty
// coefficient vector.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(BigInt constant);
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly monomial(std::size_t degree, BigInt coeff = BigInt(1));

  bool is_zero() const { return c_.empty(); }
  std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
  const BigInt& leading() const;
  BigInt coeff(std::size_t i) const;
  const std::vector<BigInt>& coeffs() const { return c_; }

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;

  IntPoly derivative() const;

  // Quotient of an exact division; throws if the division leaves a remainder.
  IntPoly divide_exact(const IntPoly& divisor) const;

  Complex evaluate(const Complex& x) const;

  SparsePolynomial to_sparse() const;

 private:
  void normalize();
  std::vector<BigInt> c_;
};

// Polynomial in z whose coefficients are integer polynomials in c.
// Coefficient index = z-exponent.
class BivarPoly {
 public:
  BivarPoly() = default;
  explicit BivarPoly(std::vector<IntPoly> z_coeffs);

  static BivarPoly zero();

  bool is_zero() const { return zc_.empty(); }
  std::size_t degree_z() const { return zc_.empty() ? 0 : zc_.size() - 1; }
  const std::vector<IntPoly>& z_coeffs() const { return zc_; }

  BivarPoly operator+(const BivarPoly& o) const;
  BivarPoly operator-(const BivarPoly& o) const;
  BivarPoly operator*(const BivarPoly& o) const;

  BivarPoly derivative_z() const;

  // Coefficients in z after substituting a numeric value for c.
  std::vector<Complex> evaluate_c(const Complex& c) const;

 private:
  void normalize();
  std::vector<IntPoly> zc_;
};

// z^n + c iterated m times, i.e. the m-th iterate of the unicritical map as
// an exact bivariate polynomial.
BivarPoly unicritical_iterate(unsigned n, unsigned m);

// unicritical_iterate(n, m) minus z.
BivarPoly unicritical_iterate_minus_z(unsigned n, unsigned m);

// Resultant of f and g with respect to z: determinant of the Sylvester
// matrix over Z[c], computed by fraction-free (Bareiss) elimination.
IntPoly resultant_z(const BivarPoly& f, const BivarPoly& g);

}  // namespace multdyn
