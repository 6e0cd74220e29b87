#include "multdyn/derivatives.hpp"

#include "multdyn/error.hpp"

namespace multdyn {

namespace {

void check_index(unsigned n, unsigned j) {
  if (n < 2) raise(Errc::invalid_argument, "degree must be >= 2");
  if (j > n - 2) {
    raise(Errc::index_out_of_range,
          "coefficient index " + std::to_string(j) + " outside [0, " +
              std::to_string(n - 2) + "]");
  }
}

}  // namespace

Complex power_map_multiplier_derivative(unsigned n, unsigned m, unsigned j,
                                        const PowerMapOrbitPoint& point) {
  check_index(n, j);
  if (m < 1) raise(Errc::invalid_argument, "period must be >= 1");
  const std::uint64_t modulus = point.modulus;  // n^m - 1

  // (j n^{m-1} - n^m) * sum_i z^{n^i (j - n)}, exponent taken mod n^m - 1.
  BigInt factor = BigInt(j) * pow(BigInt(n), m - 1) - pow(BigInt(n), m);
  // j - n is negative; as a residue it is (modulus - (n - j) mod modulus).
  std::uint64_t neg = (n - j) % modulus;
  std::uint64_t exponent_base = (modulus - neg) % modulus;

  Complex sum;
  std::uint64_t n_power = 1 % modulus;
  for (unsigned i = 0; i < m; ++i) {
    std::uint64_t e = mulmod(n_power, exponent_base, modulus);
    sum += unit_root(modulus, mulmod(point.t % modulus, e, modulus));
    n_power = mulmod(n_power, n, modulus);
  }
  return to_real(factor) * sum;
}

SparsePolynomial derivative_polynomial(unsigned n, unsigned j, unsigned m) {
  check_index(n, j);
  if (m < 1) raise(Errc::invalid_argument, "period must be >= 1");
  SparsePolynomial poly;
  if (j == 0) {
    // -n^m * sum_i z^{n^i - 1}
    BigInt coeff = -pow(BigInt(n), m);
    BigInt n_power(1);
    for (unsigned i = 0; i < m; ++i) {
      BigInt e = n_power - 1;
      if (e > BigInt(std::uint64_t(1) << 62)) {
        raise(Errc::budget_exceeded, "polynomial exponent too large");
      }
      poly.add_term(e.convert_to<std::uint64_t>(), coeff);
      n_power *= n;
    }
  } else {
    // (j n^{m-1} - n^m) * sum_i z^{n^i (n - j) - 1}
    BigInt coeff = BigInt(j) * pow(BigInt(n), m - 1) - pow(BigInt(n), m);
    BigInt n_power(1);
    for (unsigned i = 0; i < m; ++i) {
      BigInt e = n_power * (n - j) - 1;
      if (e > BigInt(std::uint64_t(1) << 62)) {
        raise(Errc::budget_exceeded, "polynomial exponent too large");
      }
      poly.add_term(e.convert_to<std::uint64_t>(), coeff);
      n_power *= n;
    }
  }
  return poly;
}

std::uint64_t derivative_polynomial_degree(unsigned n, unsigned j, unsigned m) {
  check_index(n, j);
  if (m < 1) raise(Errc::invalid_argument, "period must be >= 1");
  if (j == 0) {
    BigInt d = pow(BigInt(n), m - 1) - 1;
    return d.convert_to<std::uint64_t>();
  }
  BigInt d = pow(BigInt(n), m) - BigInt(j) * pow(BigInt(n), m - 1) - 1;
  return d.convert_to<std::uint64_t>();
}

std::vector<Complex> multiplier_gradient(const CenteredPolynomial& p,
                                         std::span<const Complex> orbit,
                                         std::span<const unsigned> indices,
                                         const Real& simple_threshold) {
  const unsigned n = p.degree();
  const std::size_t m = orbit.size();
  if (m == 0) raise(Errc::shape_mismatch, "empty orbit");
  for (unsigned j : indices) check_index(n, j);

  std::vector<CenteredPolynomial::Jets> jets;
  jets.reserve(m);
  for (const Complex& w : orbit) jets.push_back(p.evaluate_with_derivatives(w));

  Complex lambda(Real(1));
  for (const auto& jet : jets) {
    if (jet.d1 == Complex()) {
      raise(Errc::critical_orbit, "orbit passes through a critical point");
    }
    lambda *= jet.d1;
  }
  Complex one(Real(1));
  if (abs(lambda - one) < simple_threshold) {
    raise(Errc::orbit_not_simple,
          "multiplier within " + to_decimal_string(simple_threshold, 6) +
              " of 1; orbit-point derivatives are singular");
  }

  auto point_power = [&](std::size_t i, unsigned e) {
    return pow_int(orbit[i], static_cast<std::int64_t>(e));
  };

  std::vector<Complex> gradient;
  gradient.reserve(indices.size());
  for (unsigned j : indices) {
    // dw_i = [sum_s w_{i+s}^j prod_{r>s} p'(w_{i+r})] / (1 - lambda)
    std::vector<Complex> dw(m);
    for (std::size_t i = 0; i < m; ++i) {
      Complex acc;
      Complex suffix(Real(1));  // prod of p'(w_{i+r}), r = s+1..m-1, built downward
      for (std::size_t s = m; s-- > 0;) {
        acc += point_power((i + s) % m, j) * suffix;
        suffix *= jets[(i + s) % m].d1;
      }
      dw[i] = acc / (one - lambda);
    }
    // dλ = λ * sum_i [p''(w_i) dw_i + j w_i^{j-1}] / p'(w_i)
    Complex total;
    for (std::size_t i = 0; i < m; ++i) {
      Complex numer = jets[i].d2 * dw[i];
      if (j > 0) numer += Real(j) * point_power(i, j - 1);
      total += numer / jets[i].d1;
    }
    gradient.push_back(lambda * total);
  }
  return gradient;
}

}  // namespace multdyn
