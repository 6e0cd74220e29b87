#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace multdyn {

// Arbitrary-precision real scalar. Working precision is process-global and
// set in bits via set_precision_bits(); freshly constructed values pick it up.
using Real = boost::multiprecision::mpfr_float;

// Exact arbitrary-size integer.
using BigInt = boost::multiprecision::mpz_int;

inline constexpr unsigned kDefaultPrecisionBits = 256;
inline constexpr unsigned kMinPrecisionBits = 64;

void set_precision_bits(unsigned bits);
unsigned precision_bits();

// Decimal digits representable at the current precision.
int precision_decimal_digits();

// 2^(1-bits): relative rounding unit at the current precision.
Real unit_roundoff();

Real pi_value();

// Exact conversion up to final rounding at working precision.
Real to_real(const BigInt& v);

// Parses a decimal string at working precision.
Real real_from_string(const std::string& s);

std::string to_decimal_string(const Real& v, int digits = 0);

// Restores the previous working precision on destruction.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned bits);
  ~ScopedPrecision();
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned saved_bits_;
};

}  // namespace multdyn
