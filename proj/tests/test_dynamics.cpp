#include <doctest.h>

#include "multdyn/dynamics.hpp"
#include "multdyn/error.hpp"
#include "multdyn/numbertheory.hpp"
#include "test_helpers.hpp"

using namespace multdyn;

TEST_SUITE_BEGIN("dynamics");

TEST_CASE("jet evaluation on hand-checked polynomials") {
  auto cubic = CenteredPolynomial::power_map(3);
  auto jets = cubic.evaluate_with_derivatives(Complex(1.0, 0.0));
  testing::check_close(jets.value, Complex(1.0, 0.0), testing::precision_tol(5));
  testing::check_close(jets.d1, Complex(3.0, 0.0), testing::precision_tol(5));
  testing::check_close(jets.d2, Complex(6.0, 0.0), testing::precision_tol(5));

  CenteredPolynomial quad(2, {Complex(Real("0.37"))});
  jets = quad.evaluate_with_derivatives(Complex());
  testing::check_close(jets.value, Complex(Real("0.37")), testing::precision_tol(5));
  testing::check_close(jets.d1, Complex(), testing::precision_tol(5));
  testing::check_close(jets.d2, Complex(2.0, 0.0), testing::precision_tol(5));

  CenteredPolynomial quartic(4, {Complex(), Complex(2.0, 0.0), Complex()});
  jets = quartic.evaluate_with_derivatives(Complex(1.0, 0.0));
  testing::check_close(jets.value, Complex(3.0, 0.0), testing::precision_tol(5));
  testing::check_close(jets.d1, Complex(6.0, 0.0), testing::precision_tol(5));
  testing::check_close(jets.d2, Complex(12.0, 0.0), testing::precision_tol(5));
}

TEST_CASE("jets agree with central finite differences") {
  CenteredPolynomial p(4, {Complex(Real("0.02"), Real("0.01")),
                           Complex(Real("-0.3"), Real("0.2")),
                           Complex(Real("0.11"), Real("0"))});
  const Real h("1e-20");
  for (double re : {0.7, -1.2}) {
    Complex z(Real(re), Real("0.4"));
    auto jets = p.evaluate_with_derivatives(z);
    Complex right = p.evaluate(z + Complex(h, Real(0)));
    Complex left = p.evaluate(z - Complex(h, Real(0)));
    Complex fd1 = (right - left) * (Real(1) / (2 * h));
    Complex fd2 = (right - 2 * p.evaluate(z) + left) * (Real(1) / (h * h));
    testing::check_rel_close(jets.d1, fd1, Real("1e-8"));
    testing::check_rel_close(jets.d2, fd2, Real("1e-8"));
  }
}

TEST_CASE("orbit extraction") {
  auto square = CenteredPolynomial::power_map(2);
  Complex omega = unit_root(3, 1);
  auto orbit = orbit_of(square, omega, 2);
  REQUIRE(orbit.size() == 2);
  testing::check_close(orbit[1], unit_root(3, 2), testing::precision_tol(5));

  auto cubic = CenteredPolynomial::power_map(3);
  auto fixed = orbit_of(cubic, Complex(-1.0, 0.0), 1);
  REQUIRE(fixed.size() == 1);

  CHECK_THROWS_AS(orbit_of(square, Complex(Real("0.3")), 1), Error);
  try {
    orbit_of(square, Complex(Real("0.3")), 1);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_periodic);
  }
}

TEST_CASE("multiplier of hand-checked orbits") {
  auto cubic = CenteredPolynomial::power_map(3);
  std::vector<Complex> fixed{Complex(1.0, 0.0)};
  testing::check_close(multiplier(cubic, fixed).lambda, Complex(3.0, 0.0),
                       testing::precision_tol(5));

  auto square = CenteredPolynomial::power_map(2);
  std::vector<Complex> orbit{unit_root(3, 1), unit_root(3, 2)};
  testing::check_close(multiplier(square, orbit).lambda, Complex(4.0, 0.0),
                       testing::precision_tol(5));
}

TEST_CASE("power map multiplier identity over enumerated orbits") {
  const Real tol = testing::precision_tol(8);
  for (unsigned n = 2; n <= 4; ++n) {
    auto p = CenteredPolynomial::power_map(n);
    for (unsigned m = 1; m <= 3; ++m) {
      Complex expected(to_real(pow(BigInt(n), m)));
      for (const auto& rep : enumerate_orbit_representatives(n, m)) {
        std::vector<Complex> orbit;
        for (std::uint64_t t : rep.orbit_residues()) {
          orbit.push_back(unit_root(rep.modulus, t));
        }
        testing::check_close(multiplier(p, orbit).lambda, expected, tol);
      }
    }
  }
}

TEST_CASE("multiplier is invariant under cyclic shifts") {
  auto square = CenteredPolynomial::power_map(2);
  std::vector<Complex> orbit;
  auto reps = enumerate_orbit_representatives(2, 3);
  for (std::uint64_t t : reps[0].orbit_residues()) {
    orbit.push_back(unit_root(reps[0].modulus, t));
  }
  Complex base = multiplier(square, orbit).lambda;
  for (std::size_t shift = 1; shift < orbit.size(); ++shift) {
    std::vector<Complex> rotated(orbit.begin() + shift, orbit.end());
    rotated.insert(rotated.end(), orbit.begin(), orbit.begin() + shift);
    testing::check_close(multiplier(square, rotated).lambda, base,
                         testing::precision_tol(5));
  }
}

TEST_CASE("marked polynomial certification") {
  auto cubic = CenteredPolynomial::power_map(3);
  MarkedPolynomial good(cubic, {1, 1}, {Complex(1.0, 0.0), Complex(-1.0, 0.0)});
  CHECK_NOTHROW(good.certify());

  // A fixed point marked with period 2 fails the exact-period check.
  MarkedPolynomial not_exact(cubic, {2}, {Complex(1.0, 0.0)});
  CHECK_THROWS_AS(not_exact.certify(), Error);

  // Two markings on the same orbit are rejected.
  auto square = CenteredPolynomial::power_map(2);
  MarkedPolynomial overlapping(square, {2, 2}, {unit_root(3, 1), unit_root(3, 2)});
  CHECK_THROWS_AS(overlapping.certify(), Error);

  CHECK_THROWS_AS(MarkedPolynomial(square, {1, 1}, {Complex(1.0, 0.0)}), Error);
}

TEST_SUITE_END();
