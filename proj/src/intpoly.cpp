#include "multdyn/intpoly.hpp"

#include <utility>

#include "multdyn/error.hpp"

namespace multdyn {

IntPoly::IntPoly(BigInt constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::monomial(std::size_t degree, BigInt coeff) {
  if (coeff == 0) return IntPoly();
  std::vector<BigInt> c(degree + 1, BigInt(0));
  c[degree] = std::move(coeff);
  return IntPoly(std::move(c));
}

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& IntPoly::leading() const {
  static const BigInt zero(0);
  return c_.empty() ? zero : c_.back();
}

BigInt IntPoly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : BigInt(0);
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      r[i + j] += c_[i] * o.c_[j];
    }
  }
  return IntPoly(std::move(r));
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  std::vector<BigInt> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * BigInt(i);
  return IntPoly(std::move(r));
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
  if (divisor.is_zero()) raise(Errc::invalid_argument, "division by zero polynomial");
  if (is_zero()) return IntPoly();
  if (degree() < divisor.degree()) {
    raise(Errc::invalid_argument, "inexact polynomial division (degree)");
  }
  std::vector<BigInt> rem = c_;
  std::vector<BigInt> quot(degree() - divisor.degree() + 1, BigInt(0));
  const auto& d = divisor.c_;
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt top = rem[k + d.size() - 1];
    if (top == 0) continue;
    if (top % divisor.leading() != 0) {
      raise(Errc::invalid_argument, "inexact polynomial division (coefficient)");
    }
    BigInt q = top / divisor.leading();
    quot[k] = q;
    for (std::size_t i = 0; i < d.size(); ++i) rem[k + i] -= q * d[i];
  }
  for (const auto& x : rem) {
    if (x != 0) raise(Errc::invalid_argument, "inexact polynomial division (remainder)");
  }
  return IntPoly(std::move(quot));
}

Complex IntPoly::evaluate(const Complex& x) const {
  Complex acc;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * x + Complex(to_real(c_[i]));
  }
  return acc;
}

SparsePolynomial IntPoly::to_sparse() const {
  SparsePolynomial s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) s.set_term(i, c_[i]);
  }
  return s;
}

BivarPoly::BivarPoly(std::vector<IntPoly> z_coeffs) : zc_(std::move(z_coeffs)) {
  normalize();
}

BivarPoly BivarPoly::zero() { return BivarPoly(); }

void BivarPoly::normalize() {
  while (!zc_.empty() && zc_.back().is_zero()) zc_.pop_back();
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
  std::vector<IntPoly> r(std::max(zc_.size(), o.zc_.size()));
  for (std::size_t i = 0; i < zc_.size(); ++i) r[i] = r[i] + zc_[i];
  for (std::size_t i = 0; i < o.zc_.size(); ++i) r[i] = r[i] + o.zc_[i];
  return BivarPoly(std::move(r));
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const {
  std::vector<IntPoly> r(std::max(zc_.size(), o.zc_.size()));
  for (std::size_t i = 0; i < zc_.size(); ++i) r[i] = r[i] + zc_[i];
  for (std::size_t i = 0; i < o.zc_.size(); ++i) r[i] = r[i] - o.zc_[i];
  return BivarPoly(std::move(r));
}

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
  if (is_zero() || o.is_zero()) return BivarPoly();
  std::vector<IntPoly> r(zc_.size() + o.zc_.size() - 1);
  for (std::size_t i = 0; i < zc_.size(); ++i) {
    if (zc_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.zc_.size(); ++j) {
      r[i + j] = r[i + j] + zc_[i] * o.zc_[j];
    }
  }
  return BivarPoly(std::move(r));
}

BivarPoly BivarPoly::derivative_z() const {
  if (zc_.size() <= 1) return BivarPoly();
  std::vector<IntPoly> r(zc_.size() - 1);
  for (std::size_t i = 1; i < zc_.size(); ++i) {
    r[i - 1] = zc_[i] * IntPoly(BigInt(i));
  }
  return BivarPoly(std::move(r));
}

std::vector<Complex> BivarPoly::evaluate_c(const Complex& c) const {
  std::vector<Complex> out(zc_.size());
  for (std::size_t i = 0; i < zc_.size(); ++i) out[i] = zc_[i].evaluate(c);
  return out;
}

BivarPoly unicritical_iterate(unsigned n, unsigned m) {
  // q(z) = z^n + c; iterate f_{k+1} = f_k^n + c.
  std::vector<IntPoly> zlin(2);
  zlin[1] = IntPoly(BigInt(1));
  BivarPoly f{std::move(zlin)};  // f_0(z) = z
  std::vector<IntPoly> cterm(1);
  cterm[0] = IntPoly::monomial(1);  // the parameter c
  BivarPoly c_poly{std::move(cterm)};
  for (unsigned k = 0; k < m; ++k) {
    BivarPoly p = f;
    for (unsigned e = 1; e < n; ++e) p = p * f;
    f = p + c_poly;
  }
  return f;
}

BivarPoly unicritical_iterate_minus_z(unsigned n, unsigned m) {
  std::vector<IntPoly> zlin(2);
  zlin[1] = IntPoly(BigInt(1));
  return unicritical_iterate(n, m) - BivarPoly{std::move(zlin)};
}

namespace {

// Fraction-free determinant of a square matrix over Z[c]. Entries are
// consumed in place. Returns zero polynomial for singular matrices.
IntPoly bareiss_determinant(std::vector<std::vector<IntPoly>>& a) {
  const std::size_t k = a.size();
  if (k == 0) return IntPoly(BigInt(1));
  int sign = 1;
  IntPoly prev_pivot{BigInt(1)};
  for (std::size_t step = 0; step + 1 < k; ++step) {
    // Row pivoting: any nonzero entry works; prefer lowest degree to keep
    // intermediate sizes down.
    std::size_t pivot_row = step;
    bool found = false;
    for (std::size_t r = step; r < k; ++r) {
      if (a[r][step].is_zero()) continue;
      if (!found || a[r][step].degree() < a[pivot_row][step].degree()) {
        pivot_row = r;
        found = true;
      }
    }
    if (!found) return IntPoly();
    if (pivot_row != step) {
      std::swap(a[pivot_row], a[step]);
      sign = -sign;
    }
    const IntPoly& pivot = a[step][step];
    for (std::size_t r = step + 1; r < k; ++r) {
      for (std::size_t col = step + 1; col < k; ++col) {
        IntPoly num = pivot * a[r][col] - a[r][step] * a[step][col];
        a[r][col] = num.divide_exact(prev_pivot);
      }
      a[r][step] = IntPoly();
    }
    prev_pivot = pivot;
  }
  IntPoly det = a[k - 1][k - 1];
  return sign < 0 ? -det : det;
}

}  // namespace

IntPoly resultant_z(const BivarPoly& f, const BivarPoly& g) {
  if (f.is_zero() || g.is_zero()) return IntPoly();
  const std::size_t df = f.degree_z();
  const std::size_t dg = g.degree_z();
  if (df == 0 && dg == 0) return IntPoly(BigInt(1));
  const std::size_t size = df + dg;
  std::vector<std::vector<IntPoly>> sylvester(size, std::vector<IntPoly>(size));
  const auto& fc = f.z_coeffs();
  const auto& gc = g.z_coeffs();
  // Rows 0..dg-1 carry shifted copies of f, rows dg..dg+df-1 of g.
  for (std::size_t r = 0; r < dg; ++r) {
    for (std::size_t i = 0; i <= df; ++i) {
      sylvester[r][r + i] = fc[df - i];
    }
  }
  for (std::size_t r = 0; r < df; ++r) {
    for (std::size_t i = 0; i <= dg; ++i) {
      sylvester[dg + r][r + i] = gc[dg - i];
    }
  }
  return bareiss_determinant(sylvester);
}

}  // namespace multdyn
