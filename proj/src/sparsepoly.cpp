#include "multdyn/sparsepoly.hpp"

namespace multdyn {

void SparsePolynomial::add_term(std::uint64_t exponent, const BigInt& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    terms_.emplace(exponent, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

void SparsePolynomial::set_term(std::uint64_t exponent, const BigInt& coeff) {
  if (coeff == 0) {
    terms_.erase(exponent);
  } else {
    terms_[exponent] = coeff;
  }
}

std::uint64_t SparsePolynomial::degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

BigInt SparsePolynomial::coeff(std::uint64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

Complex SparsePolynomial::evaluate(const Complex& z) const {
  Complex acc;
  for (const auto& [e, c] : terms_) {
    acc += to_real(c) * pow_int(z, static_cast<std::int64_t>(e));
  }
  return acc;
}

Complex SparsePolynomial::evaluate_at_unit_root(std::uint64_t modulus,
                                                std::uint64_t t) const {
  Complex acc;
  for (const auto& [e, c] : terms_) {
    std::uint64_t phase = mulmod(t % modulus, e % modulus, modulus);
    acc += to_real(c) * unit_root(modulus, phase);
  }
  return acc;
}

}  // namespace multdyn
