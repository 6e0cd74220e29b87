#include "multdyn/oracle.hpp"

#include <utility>

#include "multdyn/error.hpp"

namespace multdyn {

namespace {

struct NewtonOutcome {
  std::vector<Complex> orbit;
  Real last_residual;
};

// One Newton solve of the cyclic system. The Jacobian is bidiagonal with a
// corner entry; forward substitution expresses every correction through the
// first one, and the closing equation has factor (multiplier - 1).
NewtonOutcome newton_cycle(const CenteredPolynomial& p,
                           std::vector<Complex> w,
                           const ContinuationSettings& s) {
  const std::size_t m = w.size();
  const Complex one(Real(1));
  Real residual(0);
  for (unsigned iter = 0; iter < s.max_newton_iters; ++iter) {
    std::vector<Complex> values(m), d1(m), f(m);
    for (std::size_t i = 0; i < m; ++i) {
      auto jets = p.evaluate_with_derivatives(w[i]);
      values[i] = jets.value;
      d1[i] = jets.d1;
    }
    residual = Real(0);
    for (std::size_t i = 0; i < m; ++i) {
      f[i] = values[i] - w[(i + 1) % m];
      residual = max(residual, abs(f[i]));
    }
    if (residual < s.newton_tol) return {std::move(w), residual};

    // delta_{i+1} = p'(w_i) delta_i + f_i; closing row gives
    // (lambda - 1) delta_0 = -(f_{m-1} + p'(w_{m-1}) B_{m-1}).
    Complex a(Real(1)), b;  // delta_i = a * delta_0 + b
    for (std::size_t i = 0; i + 1 < m; ++i) {
      b = d1[i] * b + f[i];
      a = d1[i] * a;
    }
    Complex lambda = d1[m - 1] * a;
    Complex denom = lambda - one;
    if (abs(denom) < s.singular_threshold) {
      raise(Errc::singular_jacobian,
            "cycle multiplier within " + to_decimal_string(s.singular_threshold, 6) +
                " of 1");
    }
    Complex delta0 = -(f[m - 1] + d1[m - 1] * b) / denom;
    Complex delta = delta0;
    w[0] += delta;
    for (std::size_t i = 1; i < m; ++i) {
      delta = d1[i - 1] * delta + f[i - 1];
      w[i] += delta;
    }
  }
  raise(Errc::newton_diverged,
        "no convergence after " + std::to_string(s.max_newton_iters) +
            " iterations; residual " + to_decimal_string(residual, 6));
}

}  // namespace

std::vector<Complex> refine_orbit(const CenteredPolynomial& p,
                                  std::span<const Complex> approx_orbit,
                                  const ContinuationSettings& settings) {
  if (approx_orbit.empty()) raise(Errc::shape_mismatch, "empty orbit");
  std::vector<Complex> w(approx_orbit.begin(), approx_orbit.end());
  return newton_cycle(p, std::move(w), settings).orbit;
}

std::vector<Complex> continue_orbit(const CenteredPolynomial& p_from,
                                    std::span<const Complex> orbit,
                                    const CenteredPolynomial& p_to,
                                    const ContinuationSettings& settings) {
  if (p_from.degree() != p_to.degree()) {
    raise(Errc::shape_mismatch, "continuation endpoints have different degrees");
  }
  const unsigned n = p_from.degree();
  std::vector<Complex> current(orbit.begin(), orbit.end());

  auto poly_at = [&](const Real& t) {
    std::vector<Complex> a(n - 1);
    for (unsigned j = 0; j + 1 < n; ++j) {
      a[j] = p_from.coeffs()[j] + t * (p_to.coeffs()[j] - p_from.coeffs()[j]);
    }
    return CenteredPolynomial(n, std::move(a));
  };

  Real t(0);
  Real step = settings.initial_step;
  unsigned successes = 0;
  while (t < 1) {
    if (step > 1 - t) step = 1 - t;
    Real t_next = t + step;
    if (t_next > 1) t_next = Real(1);
    bool accepted = false;
    try {
      CenteredPolynomial p_next = poly_at(t_next);
      std::vector<Complex> refined = refine_orbit(p_next, current, settings);
      Real move(0);
      for (std::size_t i = 0; i < refined.size(); ++i) {
        move = max(move, abs(refined[i] - current[i]));
      }
      if (move <= settings.max_point_jump) {
        current = std::move(refined);
        accepted = true;
      }
    } catch (const Error& e) {
      if (e.code() != Errc::newton_diverged && e.code() != Errc::singular_jacobian) {
        throw;
      }
    }
    if (accepted) {
      t = t_next;
      if (++successes >= 3) {
        successes = 0;
        step = min(step * Real("1.5"), settings.initial_step);
      }
    } else {
      successes = 0;
      step /= 2;
      if (step < settings.min_step) {
        raise(Errc::path_stalled,
              "step fell below min_step at t = " + to_decimal_string(t, 10));
      }
    }
  }
  return current;
}

std::vector<Complex> fd_gradient(const CenteredPolynomial& p,
                                 std::span<const Complex> orbit,
                                 std::span<const unsigned> indices,
                                 const ContinuationSettings& settings) {
  const unsigned n = p.degree();
  Real floor_step = ldexp(Real(1), 16 - static_cast<int>(precision_bits()));
  if (settings.fd_step < floor_step) {
    raise(Errc::step_underflow,
          "fd_step " + to_decimal_string(settings.fd_step, 6) +
              " is below the precision floor " + to_decimal_string(floor_step, 6));
  }

  std::vector<Complex> base = refine_orbit(p, orbit, settings);
  std::vector<Complex> grad;
  grad.reserve(indices.size());
  const Real h = settings.fd_step;
  for (unsigned j : indices) {
    if (j > n - 2) raise(Errc::index_out_of_range, "coefficient index " + std::to_string(j));
    auto lambda_at = [&](const Real& offset) {
      Complex shifted = p.coeffs()[j] + Complex(offset);
      CenteredPolynomial q = p.with_coeff(j, shifted);
      std::vector<Complex> w = refine_orbit(q, base, settings);
      return multiplier(q, w).lambda;
    };
    Complex lp = lambda_at(h);
    Complex lm = lambda_at(-h);
    Complex diff = lp - lm;
    grad.push_back(Complex(diff.re / (2 * h), diff.im / (2 * h)));
  }
  return grad;
}

}  // namespace multdyn
