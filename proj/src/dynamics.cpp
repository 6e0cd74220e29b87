#include "multdyn/dynamics.hpp"

#include <utility>

#include "multdyn/error.hpp"
#include "multdyn/numbertheory.hpp"

namespace multdyn {

CenteredPolynomial::CenteredPolynomial(unsigned degree, std::vector<Complex> coeffs)
    : n_(degree), a_(std::move(coeffs)) {
  if (n_ < 2) raise(Errc::invalid_argument, "degree must be >= 2");
  if (a_.size() != n_ - 1) {
    raise(Errc::shape_mismatch, "centered degree-" + std::to_string(n_) +
                                    " polynomial needs " + std::to_string(n_ - 1) +
                                    " coefficients (a_0..a_{n-2})");
  }
}

CenteredPolynomial CenteredPolynomial::power_map(unsigned degree) {
  if (degree < 2) raise(Errc::invalid_argument, "degree must be >= 2");
  return CenteredPolynomial(degree, std::vector<Complex>(degree - 1));
}

const Complex& CenteredPolynomial::coeff(unsigned j) const {
  if (j > n_ - 2) raise(Errc::index_out_of_range, "coefficient index " + std::to_string(j));
  return a_[j];
}

CenteredPolynomial CenteredPolynomial::with_coeff(unsigned j, const Complex& value) const {
  if (j > n_ - 2) raise(Errc::index_out_of_range, "coefficient index " + std::to_string(j));
  std::vector<Complex> a = a_;
  a[j] = value;
  return CenteredPolynomial(n_, std::move(a));
}

Complex CenteredPolynomial::evaluate(const Complex& z) const {
  // Horner over (1, 0, a_{n-2}, ..., a_0).
  Complex acc(Real(1));
  acc = acc * z;  // accounts for the zero z^{n-1} coefficient
  for (unsigned j = n_ - 1; j-- > 0;) {
    acc = acc * z + a_[j];
  }
  return acc;
}

CenteredPolynomial::Jets CenteredPolynomial::evaluate_with_derivatives(
    const Complex& z) const {
  Complex v(Real(1));
  Complex d1, d2;
  auto step = [&](const Complex& coeff) {
    d2 = d2 * z + d1;
    d1 = d1 * z + v;
    v = v * z + coeff;
  };
  step(Complex());  // z^{n-1} coefficient is identically zero
  for (unsigned j = n_ - 1; j-- > 0;) step(a_[j]);
  d2 = Real(2) * d2;
  return Jets{v, d1, d2};
}

Complex CenteredPolynomial::iterate(Complex z, unsigned times) const {
  for (unsigned i = 0; i < times; ++i) z = evaluate(z);
  return z;
}

std::vector<Complex> orbit_of(const CenteredPolynomial& p, const Complex& w,
                              unsigned m, const Real& tol) {
  if (m < 1) raise(Errc::invalid_argument, "period must be >= 1");
  std::vector<Complex> orbit;
  orbit.reserve(m);
  Complex z = w;
  for (unsigned i = 0; i < m; ++i) {
    orbit.push_back(z);
    z = p.evaluate(z);
  }
  Real defect = abs(z - w);
  if (defect > tol) {
    raise(Errc::not_periodic, "orbit closure defect " + to_decimal_string(defect, 8) +
                                  " exceeds tolerance " + to_decimal_string(tol, 8));
  }
  return orbit;
}

MultiplierRecord multiplier(const CenteredPolynomial& p,
                            std::span<const Complex> orbit) {
  if (orbit.empty()) raise(Errc::shape_mismatch, "empty orbit");
  MultiplierRecord rec;
  rec.period = static_cast<unsigned>(orbit.size());
  rec.orbit.assign(orbit.begin(), orbit.end());
  rec.lambda = Complex(Real(1));
  for (const Complex& w : orbit) {
    rec.lambda *= p.evaluate_with_derivatives(w).d1;
  }
  return rec;
}

MarkedPolynomial::MarkedPolynomial(CenteredPolynomial poly,
                                   std::vector<unsigned> periods,
                                   std::vector<Complex> points, Real tolerance)
    : poly_(std::move(poly)),
      periods_(std::move(periods)),
      points_(std::move(points)),
      tol_(std::move(tolerance)) {
  if (periods_.size() != points_.size()) {
    raise(Errc::shape_mismatch, "periods and points must have equal length");
  }
}

void MarkedPolynomial::certify() const {
  std::vector<std::vector<Complex>> orbits;
  orbits.reserve(points_.size());
  for (std::size_t r = 0; r < points_.size(); ++r) {
    // Closure at the stated period...
    orbits.push_back(orbit_of(poly_, points_[r], periods_[r], tol_));
    // ...and no closure at any proper divisor (exact period).
    for (std::uint64_t s : divisors_of(periods_[r])) {
      if (s == periods_[r]) continue;
      Complex back = poly_.iterate(points_[r], static_cast<unsigned>(s));
      if (abs(back - points_[r]) <= tol_) {
        raise(Errc::not_periodic,
              "marked point " + std::to_string(r) + " has period dividing " +
                  std::to_string(s) + ", not exact period " +
                  std::to_string(periods_[r]));
      }
    }
  }
  for (std::size_t r = 0; r < orbits.size(); ++r) {
    for (std::size_t s = r + 1; s < orbits.size(); ++s) {
      for (const Complex& x : orbits[r]) {
        for (const Complex& y : orbits[s]) {
          if (abs(x - y) <= tol_) {
            raise(Errc::not_periodic,
                  "marked orbits " + std::to_string(r) + " and " +
                      std::to_string(s) + " are not disjoint");
          }
        }
      }
    }
  }
}

}  // namespace multdyn
