#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "multdyn/precision.hpp"

namespace multdyn {

// Complex number over the working-precision real type. std::complex is not
// usable with a variable-precision scalar, so the handful of operations we
// need live here.
struct Complex {
  Real re;
  Real im;

  Complex() : re(0), im(0) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(Real r) : re(std::move(r)), im(0) {}
  explicit Complex(double r) : re(r), im(0) {}
  Complex(double r, double i) : re(r), im(i) {}

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator/=(const Complex& o);
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator/(Complex a, const Complex& b) { return a /= b; }
inline Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }

inline Complex operator*(const Real& s, Complex a) {
  a.re *= s;
  a.im *= s;
  return a;
}
inline Complex operator*(Complex a, const Real& s) { return s * std::move(a); }

inline bool operator==(const Complex& a, const Complex& b) {
  return a.re == b.re && a.im == b.im;
}
inline bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

inline Complex conj(const Complex& a) { return Complex(a.re, -a.im); }

// |a|^2, exact in the formula (one rounding per op).
inline Real norm2(const Complex& a) { return a.re * a.re + a.im * a.im; }

inline Real abs(const Complex& a) { return hypot(a.re, a.im); }

inline Complex& Complex::operator/=(const Complex& o) {
  Real d = norm2(o);
  Real r = (re * o.re + im * o.im) / d;
  im = (im * o.re - re * o.im) / d;
  re = std::move(r);
  return *this;
}

// a^e by binary powering; e may be negative.
Complex pow_int(const Complex& a, std::int64_t e);

// exp(2*pi*i * t / modulus). Phase is reduced mod `modulus` first, so powers
// of roots of unity can be taken exactly in the exponent.
Complex unit_root(std::uint64_t modulus, std::uint64_t t);

// (a * b) mod m without overflow.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

// a^e mod m.
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

std::string to_string(const Complex& z, int digits = 0);

std::ostream& operator<<(std::ostream& os, const Complex& z);

}  // namespace multdyn
