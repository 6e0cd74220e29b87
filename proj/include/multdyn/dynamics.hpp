#pragma once

#include <span>
#include <vector>

#include "multdyn/complexmp.hpp"

namespace multdyn {

// Monic degree-n polynomial with no z^{n-1} term:
//   p(z) = z^n + a_{n-2} z^{n-2} + ... + a_1 z + a_0.
// Stored as the coefficient vector (a_0, ..., a_{n-2}).
class CenteredPolynomial {
 public:
  CenteredPolynomial(unsigned degree, std::vector<Complex> coeffs);

  // p(z) = z^n.
  static CenteredPolynomial power_map(unsigned degree);

  unsigned degree() const { return n_; }
  const std::vector<Complex>& coeffs() const { return a_; }
  const Complex& coeff(unsigned j) const;

  CenteredPolynomial with_coeff(unsigned j, const Complex& value) const;

  Complex evaluate(const Complex& z) const;

  struct Jets {
    Complex value;
    Complex d1;
    Complex d2;
  };
  // p, p', p'' in one Horner pass.
  Jets evaluate_with_derivatives(const Complex& z) const;

  Complex iterate(Complex z, unsigned times) const;

 private:
  unsigned n_;
  std::vector<Complex> a_;
};

struct MultiplierRecord {
  Complex lambda;
  unsigned period = 0;
  std::vector<Complex> orbit;
};

inline const Real& default_orbit_tolerance() {
  static const Real tol("1e-20");
  return tol;
}

// (w, p(w), ..., p^{m-1}(w)); throws NotPeriodic when |p^m(w) - w| > tol.
std::vector<Complex> orbit_of(const CenteredPolynomial& p, const Complex& w,
                              unsigned m, const Real& tol = default_orbit_tolerance());

// Product of p' along the orbit.
MultiplierRecord multiplier(const CenteredPolynomial& p,
                            std::span<const Complex> orbit);

// A polynomial with k marked periodic points on pairwise distinct orbits.
class MarkedPolynomial {
 public:
  MarkedPolynomial(CenteredPolynomial poly, std::vector<unsigned> periods,
                   std::vector<Complex> points,
                   Real tolerance = default_orbit_tolerance());

  const CenteredPolynomial& poly() const { return poly_; }
  const std::vector<unsigned>& periods() const { return periods_; }
  const std::vector<Complex>& points() const { return points_; }
  const Real& tolerance() const { return tol_; }
  std::size_t marked_count() const { return points_.size(); }

  // Checks the orbit equations, exact periods (no proper divisor closes the
  // orbit within tolerance) and pairwise disjointness of the marked orbits.
  // Throws NotPeriodic / ShapeMismatch on violation.
  void certify() const;

 private:
  CenteredPolynomial poly_;
  std::vector<unsigned> periods_;
  std::vector<Complex> points_;
  Real tol_;
};

}  // namespace multdyn
