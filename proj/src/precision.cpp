#include "multdyn/precision.hpp"

#include <mpfr.h>

#include <atomic>
#include <cmath>
#include <stdexcept>

namespace multdyn {

namespace {
std::atomic<unsigned> g_precision_bits{kDefaultPrecisionBits};

unsigned bits_to_digits10(unsigned bits) {
  // ceil(bits * log10(2)); boost maps digits back to >= bits of mantissa.
  return static_cast<unsigned>(std::ceil(bits * 0.3010299956639812)) + 1;
}
}  // namespace

void set_precision_bits(unsigned bits) {
  if (bits < kMinPrecisionBits) {
    throw std::invalid_argument("precision must be at least 64 bits");
  }
  g_precision_bits.store(bits, std::memory_order_relaxed);
  Real::default_precision(bits_to_digits10(bits));
}

unsigned precision_bits() { return g_precision_bits.load(std::memory_order_relaxed); }

int precision_decimal_digits() {
  return static_cast<int>(precision_bits() * 0.3010299956639812);
}

Real unit_roundoff() {
  return ldexp(Real(1), 1 - static_cast<int>(precision_bits()));
}

Real pi_value() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

Real to_real(const BigInt& v) {
  Real r;
  mpfr_set_z(r.backend().data(), v.backend().data(), MPFR_RNDN);
  return r;
}

Real real_from_string(const std::string& s) { return Real(s); }

std::string to_decimal_string(const Real& v, int digits) {
  // +3 so a default-precision string round-trips to the same binary value.
  if (digits <= 0) digits = precision_decimal_digits() + 3;
  return v.str(digits);
}

ScopedPrecision::ScopedPrecision(unsigned bits) : saved_bits_(precision_bits()) {
  set_precision_bits(bits);
}

ScopedPrecision::~ScopedPrecision() { set_precision_bits(saved_bits_); }

}  // namespace multdyn
