#include "multdyn/complexmp.hpp"

namespace multdyn {

Complex pow_int(const Complex& a, std::int64_t e) {
  if (e < 0) {
    Complex inv = Complex(Real(1)) / a;
    return pow_int(inv, -e);
  }
  Complex result(Real(1));
  Complex base = a;
  std::uint64_t k = static_cast<std::uint64_t>(e);
  while (k != 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

Complex unit_root(std::uint64_t modulus, std::uint64_t t) {
  t %= modulus;
  Real angle = 2 * pi_value() * Real(t) / Real(modulus);
  return Complex(cos(angle), sin(angle));
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::string to_string(const Complex& z, int digits) {
  return "(" + to_decimal_string(z.re, digits) + ", " +
         to_decimal_string(z.im, digits) + ")";
}

std::ostream& operator<<(std::ostream& os, const Complex& z) {
  return os << to_string(z, 20);
}

}  // namespace multdyn
