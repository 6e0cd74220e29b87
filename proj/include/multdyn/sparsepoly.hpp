#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "multdyn/complexmp.hpp"
#include "multdyn/precision.hpp"

namespace multdyn {

// Integer-coefficient polynomial stored as exponent -> coefficient. Zero
// coefficients are never stored.
class SparsePolynomial {
 public:
  SparsePolynomial() = default;

  void add_term(std::uint64_t exponent, const BigInt& coeff);
  void set_term(std::uint64_t exponent, const BigInt& coeff);

  bool is_zero() const { return terms_.empty(); }
  std::uint64_t degree() const;  // 0 for the zero polynomial
  std::size_t term_count() const { return terms_.size(); }
  BigInt coeff(std::uint64_t exponent) const;

  const std::map<std::uint64_t, BigInt>& terms() const { return terms_; }

  Complex evaluate(const Complex& z) const;

  // Value at the root of unity exp(2*pi*i * t / modulus); exponents are
  // reduced mod `modulus` so the phase arithmetic stays exact.
  Complex evaluate_at_unit_root(std::uint64_t modulus, std::uint64_t t) const;

 private:
  std::map<std::uint64_t, BigInt> terms_;
};

}  // namespace multdyn
