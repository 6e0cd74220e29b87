#include "multdyn/linalg.hpp"

#include <utility>

#include "multdyn/error.hpp"
#include "multdyn/precision.hpp"

namespace multdyn {

DeterminantResult determinant_with_error(ComplexMatrix a) {
  const std::size_t k = a.size();
  for (const auto& row : a) {
    if (row.size() != k) raise(Errc::shape_mismatch, "matrix is not square");
  }
  const Real u = unit_roundoff();
  if (k == 0) return {Complex(Real(1)), u};

  // err[i][j] tracks a first-order magnitude bound on the accumulated
  // rounding error of a[i][j]; inputs are trusted to a few ulp.
  std::vector<std::vector<Real>> err(k, std::vector<Real>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) err[i][j] = 8 * u * abs(a[i][j]);
  }

  int sign = 1;
  std::vector<Real> pivot_abs(k);
  std::vector<Real> pivot_err(k);
  std::vector<Complex> pivots(k);

  for (std::size_t s = 0; s < k; ++s) {
    std::size_t pr = s;
    Real best = abs(a[s][s]);
    for (std::size_t r = s + 1; r < k; ++r) {
      Real m = abs(a[r][s]);
      if (m > best) {
        best = m;
        pr = r;
      }
    }
    if (pr != s) {
      std::swap(a[pr], a[s]);
      std::swap(err[pr], err[s]);
      sign = -sign;
    }
    pivots[s] = a[s][s];
    pivot_abs[s] = best;
    pivot_err[s] = err[s][s];

    if (best == 0) {
      // Exactly zero pivot column: determinant is exactly zero; the bound
      // still reflects the uncertainty that survived so far.
      Real bound = u;
      Real scale(1);
      for (std::size_t l = 0; l < s; ++l) scale *= pivot_abs[l];
      Real rem_err(0);
      for (std::size_t r = s; r < k; ++r) {
        for (std::size_t c = s; c < k; ++c) rem_err = max(rem_err, err[r][c]);
      }
      bound = 2 * scale * rem_err * Real(k - s) + u;
      return {Complex(), bound};
    }

    for (std::size_t r = s + 1; r < k; ++r) {
      Complex mul = a[r][s] / a[s][s];
      Real mul_abs = abs(mul);
      Real mul_err = (err[r][s] + mul_abs * pivot_err[s]) / pivot_abs[s] + u * mul_abs;
      for (std::size_t c = s + 1; c < k; ++c) {
        Complex prod = mul * a[s][c];
        a[r][c] -= prod;
        err[r][c] = err[r][c] + mul_abs * err[s][c] + mul_err * abs(a[s][c]) +
                    u * (abs(prod) + abs(a[r][c]));
      }
      a[r][s] = Complex();
      err[r][s] = Real(0);
    }
  }

  Complex det{Real(sign)};
  for (std::size_t s = 0; s < k; ++s) det *= pivots[s];

  // |d(det)| <= sum_s E_s * prod_{l != s} |p_l|, plus rounding of the product.
  Real bound(0);
  for (std::size_t s = 0; s < k; ++s) {
    Real contribution = pivot_err[s];
    for (std::size_t l = 0; l < k; ++l) {
      if (l != s) contribution *= pivot_abs[l];
    }
    bound += contribution;
  }
  Real prod(1);
  for (std::size_t s = 0; s < k; ++s) prod *= pivot_abs[s];
  bound += Real(2 * k) * u * prod;
  bound *= 2;  // headroom for the dropped second-order terms
  return {det, bound};
}

}  // namespace multdyn
