// Acceptance suite. Each criterion prints one PASS/FAIL line; the process
// exits nonzero if any requested criterion fails. Run with no arguments for
// all criteria, or pass criterion numbers.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "multdyn/derivatives.hpp"
#include "multdyn/dynamics.hpp"
#include "multdyn/linalg.hpp"
#include "multdyn/monodromy.hpp"
#include "multdyn/numbertheory.hpp"
#include "multdyn/oracle.hpp"
#include "multdyn/serialize.hpp"
#include "multdyn/witness.hpp"

namespace md = multdyn;

namespace {

int g_checks = 0;
int g_failures = 0;
std::string g_first_failure;

void expect(bool ok, const std::string& what) {
  ++g_checks;
  if (!ok) {
    ++g_failures;
    if (g_first_failure.empty()) g_first_failure = what;
  }
}

// ---------------------------------------------------------------------------
// Independent double-precision oracle for criterion 1: count the roots of
// q^m(z) - z for q(z) = z^n by Durand-Kerner iteration and sieve exact
// periods by walking the orbit over every divisor.

using dcomplex = std::complex<double>;

std::vector<dcomplex> durand_kerner(const std::vector<dcomplex>& coeffs) {
  const std::size_t d = coeffs.size() - 1;
  auto eval = [&](dcomplex x) {
    dcomplex acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
  };
  std::vector<dcomplex> x(d);
  for (std::size_t i = 0; i < d; ++i) {
    double angle = 2.0 * M_PI * double(i) / double(d) + 0.41;
    x[i] = std::polar(1.3, angle);
  }
  for (int iter = 0; iter < 400; ++iter) {
    double worst = 0;
    for (std::size_t i = 0; i < d; ++i) {
      dcomplex denom = coeffs[d];
      for (std::size_t j = 0; j < d; ++j) {
        if (j != i) denom *= x[i] - x[j];
      }
      dcomplex delta = eval(x[i]) / denom;
      x[i] -= delta;
      worst = std::max(worst, std::abs(delta));
    }
    if (worst < 1e-13) break;
  }
  return x;
}

struct BruteCounts {
  long long nu = 0;
  long long nu_hat = 0;
};

BruteCounts brute_force_period_counts(unsigned n, unsigned m) {
  // Coefficients of z^(n^m) - z.
  std::size_t top = 1;
  for (unsigned i = 0; i < m; ++i) top *= n;
  std::vector<dcomplex> coeffs(top + 1, 0.0);
  coeffs[top] = 1.0;
  coeffs[1] -= 1.0;
  std::vector<dcomplex> roots = durand_kerner(coeffs);

  auto iterate = [&](dcomplex z, unsigned times) {
    for (unsigned i = 0; i < times; ++i) {
      dcomplex p = 1.0;
      for (unsigned e = 0; e < n; ++e) p *= z;
      z = p;
    }
    return z;
  };

  BruteCounts counts;
  for (const dcomplex& z : roots) {
    unsigned exact = 0;
    for (unsigned s = 1; s <= m; ++s) {
      if (m % s != 0) continue;
      if (std::abs(iterate(z, s) - z) < 1e-6) {
        exact = s;
        break;
      }
    }
    if (exact == m) {
      ++counts.nu;
      if (std::abs(z) > 0.5) ++counts.nu_hat;
    }
  }
  return counts;
}

bool criterion_1() {
  for (unsigned n = 2; n <= 3; ++n) {
    for (unsigned m = 1; m <= 4; ++m) {
      md::OrbitCensus c = md::census(n, m);
      BruteCounts brute = brute_force_period_counts(n, m);
      expect(c.nu == md::BigInt(brute.nu),
             "nu mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m));
      expect(c.nu_hat == md::BigInt(brute.nu_hat),
             "nu_hat mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m));
      expect(c.orbit_count * m == c.nu_hat,
             "orbit count at n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
  }
  return g_failures == 0;
}

// ---------------------------------------------------------------------------

struct SweepPoint {
  unsigned n, m, j;
  md::PowerMapOrbitPoint point;
};

std::vector<SweepPoint> derivative_sweep() {
  std::vector<SweepPoint> sweep;
  for (unsigned n = 2; n <= 4; ++n) {
    for (unsigned m = 1; m <= 3; ++m) {
      md::BigInt npow = pow(md::BigInt(n), m);
      if (npow > md::BigInt(4096)) continue;
      for (const auto& rep : md::enumerate_orbit_representatives(n, m)) {
        for (unsigned j = 0; j <= n - 2; ++j) {
          sweep.push_back(SweepPoint{n, m, j, rep});
        }
      }
    }
  }
  return sweep;
}

bool criterion_2() {
  const md::Real tol("1e-6");
  for (const auto& item : derivative_sweep()) {
    md::Complex closed =
        md::power_map_multiplier_derivative(item.n, item.m, item.j, item.point);
    auto p0 = md::CenteredPolynomial::power_map(item.n);
    std::vector<md::Complex> orbit;
    for (std::uint64_t t : item.point.orbit_residues()) {
      orbit.push_back(md::unit_root(item.point.modulus, t));
    }
    std::vector<unsigned> indices{item.j};
    auto fd = md::fd_gradient(p0, orbit, indices);
    md::Real denom = md::abs(fd[0]);
    if (denom == 0) denom = md::Real(1);
    expect(md::abs(closed - fd[0]) / denom < tol,
           "fd disagreement at n=" + std::to_string(item.n) +
               " m=" + std::to_string(item.m) + " j=" + std::to_string(item.j) +
               " t=" + std::to_string(item.point.t));
  }
  return g_failures == 0;
}

bool criterion_3() {
  const md::Real tol("1e-20");
  for (const auto& item : derivative_sweep()) {
    md::Complex closed =
        md::power_map_multiplier_derivative(item.n, item.m, item.j, item.point);
    md::SparsePolynomial dpoly = md::derivative_polynomial(item.n, item.j, item.m);
    std::uint64_t modulus = item.point.modulus;
    std::uint64_t inv_t = (modulus - item.point.t % modulus) % modulus;
    md::Complex via_poly =
        md::unit_root(modulus, inv_t) * dpoly.evaluate_at_unit_root(modulus, inv_t);
    md::Real scale = md::abs(closed);
    if (scale == 0) scale = md::Real(1);
    expect(md::abs(closed - via_poly) / scale < tol,
           "polynomial route disagreement at n=" + std::to_string(item.n) +
               " m=" + std::to_string(item.m) + " j=" + std::to_string(item.j));
  }
  return g_failures == 0;
}

bool criterion_4() {
  for (unsigned n = 2; n <= 6; ++n) {
    for (unsigned m = 1; m <= 5; ++m) {
      md::BigInt nu_hat = md::census(n, m).nu_hat;
      std::set<std::uint64_t> degrees;
      for (unsigned j = 0; j <= n - 2; ++j) {
        std::uint64_t closed = md::derivative_polynomial_degree(n, j, m);
        std::uint64_t constructed = md::derivative_polynomial(n, j, m).degree();
        expect(closed == constructed, "degree mismatch");
        expect(md::BigInt(closed) < nu_hat, "degree bound violated");
        expect(degrees.insert(closed).second, "degree not injective in j");
      }
    }
  }
  return g_failures == 0;
}

bool criterion_5() {
  const md::Real tol("1e-6");
  for (unsigned n : {3u, 4u}) {
    auto cases = md::sweep_witness(n, 3, 4096);
    for (const auto& c : cases) {
      std::string label = "n=" + std::to_string(n) + " periods=";
      for (unsigned m : c.periods) label += std::to_string(m) + ",";
      label += " indices=";
      for (unsigned j : c.indices) label += std::to_string(j) + ",";
      expect(c.report.nondegenerate, "witness not certified at " + label);
      expect(c.fd_entry_rel_error < tol, "fd entries disagree at " + label);
      expect(c.fd_det_rel_error < tol, "fd determinant disagrees at " + label);
    }
  }
  return g_failures == 0;
}

bool criterion_6() {
  const md::Real tol("1e-60");
  for (unsigned n = 2; n <= 4; ++n) {
    auto p0 = md::CenteredPolynomial::power_map(n);
    for (unsigned m = 1; m <= 3; ++m) {
      md::Complex expected(md::to_real(pow(md::BigInt(n), m)));
      for (const auto& rep : md::enumerate_orbit_representatives(n, m)) {
        std::vector<md::Complex> orbit;
        for (std::uint64_t t : rep.orbit_residues()) {
          orbit.push_back(md::unit_root(rep.modulus, t));
        }
        md::Complex lambda = md::multiplier(p0, orbit).lambda;
        expect(md::abs(lambda - expected) < tol,
               "multiplier identity at n=" + std::to_string(n) +
                   " m=" + std::to_string(m) + " t=" + std::to_string(rep.t));
      }
    }
  }
  return g_failures == 0;
}

bool criterion_7() {
  auto same_orbit_case = [&](unsigned n, unsigned m, std::uint64_t t,
                             std::vector<unsigned> indices) {
    std::uint64_t modulus = md::power_map_modulus(n, m, md::kDefaultEnumerationCap);
    md::PowerMapOrbitPoint a{n, m, t % modulus, modulus};
    md::PowerMapOrbitPoint b{n, m, md::mulmod(t, n, modulus), modulus};
    std::vector<unsigned> periods{m, m};
    std::vector<md::PowerMapOrbitPoint> points{a, b};
    auto report = md::jacobian_at_power_map(n, periods, indices, points);
    expect(md::abs(report.det) <= report.det_error_bound,
           "same-orbit determinant above the error bound at n=" + std::to_string(n));
    expect(!report.nondegenerate, "same-orbit marking certified nondegenerate");
  };
  same_orbit_case(3, 2, 1, {0, 1});
  same_orbit_case(4, 2, 1, {0, 2});
  same_orbit_case(4, 3, 1, {1, 2});
  return g_failures == 0;
}

md::LoopPath tail_circle_loop(unsigned n, unsigned m, const md::Complex& base,
                              const md::Complex& center, const md::Real& radius,
                              int turns) {
  md::LoopPath loop;
  loop.n = n;
  loop.m = m;
  loop.base = base;
  md::Complex offset = base - center;
  md::Complex entry = center + (radius / md::abs(offset)) * offset;
  md::LoopSegment in;
  in.kind = md::LoopSegment::Kind::line;
  in.to = entry;
  md::LoopSegment circ;
  circ.kind = md::LoopSegment::Kind::circle;
  circ.center = center;
  circ.radius = radius;
  circ.turns = turns;
  circ.steps = 48;
  md::LoopSegment out;
  out.kind = md::LoopSegment::Kind::line;
  out.to = base;
  loop.segments = {in, circ, out};
  return loop;
}

bool criterion_8() {
  // Degeneracy parameters.
  md::DegeneracySet d1 = md::degeneracy_parameters(2, 1);
  expect(d1.parameters.size() == 1, "period-1 degeneracy count");
  if (!d1.parameters.empty()) {
    expect(md::abs(d1.parameters[0] - md::Complex(md::Real("0.25"))) <
               md::Real("1e-10"),
           "period-1 degeneracy location");
  }
  md::DegeneracySet d2 = md::degeneracy_parameters(2, 2);
  expect(d2.parameters.size() == 2, "period-2 degeneracy count");
  bool saw_quarter = false, saw_doubling = false;
  for (const auto& c : d2.parameters) {
    if (md::abs(c - md::Complex(md::Real("0.25"))) < md::Real("1e-10")) saw_quarter = true;
    if (md::abs(c - md::Complex(md::Real("-0.75"))) < md::Real("1e-10")) saw_doubling = true;
  }
  expect(saw_quarter && saw_doubling, "period-2 degeneracy locations");

  // Loop around the period-doubling parameter: points swap, orbit fixed.
  md::Complex base2(md::Real("-0.55"));
  md::LoopPath doubling =
      tail_circle_loop(2, 2, base2, md::Complex(md::Real("-0.75")), md::Real("0.1"), 1);
  md::TrackResult swap = md::track_loop(doubling);
  expect(swap.orbits.size() == 1, "period-2 orbit count at the base");
  expect(swap.permutation.orbit_perm == std::vector<std::size_t>{0},
         "doubling loop must fix the orbit");
  expect(swap.permutation.point_perm == (std::vector<std::size_t>{1, 0}),
         "doubling loop must swap the orbit points");

  // Period-3: loops around the three degeneracy parameters generate a
  // transitive action on the two orbits; reversal inverts every permutation.
  md::Complex base3(md::Real("-0.5"));
  std::vector<md::Complex> centers{
      md::Complex(md::Real("-1.754877666246693")),
      md::Complex(md::Real("-0.122561166876654"), md::Real("0.744861766619744")),
      md::Complex(md::Real("-0.122561166876654"), md::Real("-0.744861766619744"))};
  std::vector<md::OrbitPermutation> perms;
  std::size_t orbit_count = 0;
  for (const auto& center : centers) {
    md::LoopPath loop = tail_circle_loop(2, 3, base3, center, md::Real("0.1"), 1);
    md::TrackResult result = md::track_loop(loop);
    orbit_count = result.orbits.size();
    perms.push_back(result.permutation);

    md::LoopPath rev = tail_circle_loop(2, 3, base3, center, md::Real("0.1"), -1);
    md::TrackResult reversed = md::track_loop(rev);
    expect(reversed.permutation.point_perm ==
               md::inverse(result.permutation).point_perm,
           "reversal must invert the point permutation");
    expect(reversed.permutation.orbit_perm ==
               md::inverse(result.permutation).orbit_perm,
           "reversal must invert the orbit permutation");
  }
  expect(orbit_count == 2, "two period-3 orbits expected");
  md::GroupReport group = md::permutation_group_report(perms, orbit_count);
  expect(group.transitive, "period-3 loops must act transitively on the orbits");
  return g_failures == 0;
}

bool criterion_9() {
  std::mt19937 rng(0);  // RunConfig seed default
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  md::ContinuationSettings settings;
  const md::Real rev_tol("1e-12");
  const md::Real tri_tol("1e-6");

  for (int sample = 0; sample < 50; ++sample) {
    unsigned n = 2 + static_cast<unsigned>(sample) % 3;
    unsigned m = 1 + (static_cast<unsigned>(sample) / 3) % 3;
    std::vector<md::Complex> coeffs(n - 1);
    for (auto& a : coeffs) {
      double r = 0.05 * std::sqrt(unit(rng));
      double theta = 2.0 * M_PI * unit(rng);
      a = md::Complex(r * std::cos(theta), r * std::sin(theta));
    }
    md::CenteredPolynomial p(n, coeffs);
    auto p0 = md::CenteredPolynomial::power_map(n);
    auto reps = md::enumerate_orbit_representatives(n, m);
    const auto& rep = reps[static_cast<std::size_t>(sample) % reps.size()];
    std::vector<md::Complex> orbit;
    for (std::uint64_t t : rep.orbit_residues()) {
      orbit.push_back(md::unit_root(rep.modulus, t));
    }

    std::vector<md::Complex> moved = md::continue_orbit(p0, orbit, p, settings);

    // Refinement idempotence.
    auto once = md::refine_orbit(p, moved, settings);
    auto twice = md::refine_orbit(p, once, settings);
    for (std::size_t i = 0; i < once.size(); ++i) {
      expect(md::abs(once[i] - twice[i]) < settings.newton_tol,
             "refinement not idempotent at sample " + std::to_string(sample));
    }

    // Continuation reversibility.
    auto back = md::continue_orbit(p, moved, p0, settings);
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      expect(md::abs(back[i] - orbit[i]) < rev_tol,
             "continuation not reversible at sample " + std::to_string(sample));
    }

    // Gradient triangle: finite differences vs quotient formula at p, and
    // both vs the closed form at the power map.
    std::vector<unsigned> indices;
    for (unsigned j = 0; j <= n - 2; ++j) indices.push_back(j);
    auto fd = md::fd_gradient(p, moved, indices, settings);
    auto closed = md::multiplier_gradient(p, moved, indices);
    for (std::size_t i = 0; i < indices.size(); ++i) {
      md::Real denom = md::abs(fd[i]);
      if (denom == 0) denom = md::Real(1);
      expect(md::abs(closed[i] - fd[i]) / denom < tri_tol,
             "gradient triangle (general) at sample " + std::to_string(sample));
    }

    if (sample < 10) {
      auto fd0 = md::fd_gradient(p0, orbit, indices, settings);
      auto closed0 = md::multiplier_gradient(p0, orbit, indices);
      for (std::size_t i = 0; i < indices.size(); ++i) {
        md::Complex formula =
            md::power_map_multiplier_derivative(n, m, indices[i], rep);
        md::Real denom = md::abs(formula);
        if (denom == 0) denom = md::Real(1);
        expect(md::abs(fd0[i] - formula) / denom < tri_tol,
               "gradient triangle (fd vs closed form) at sample " +
                   std::to_string(sample));
        expect(md::abs(closed0[i] - formula) / denom < tri_tol,
               "gradient triangle (quotient vs closed form) at sample " +
                   std::to_string(sample));
      }
    }
  }
  return g_failures == 0;
}

struct Criterion {
  int number;
  const char* label;
  std::function<bool()> run;
};

}  // namespace

int main(int argc, char** argv) {
  md::set_precision_bits(256);

  std::vector<Criterion> criteria{
      {1, "census matches brute-force root counting", criterion_1},
      {2, "closed-form derivative matches the fd oracle", criterion_2},
      {3, "derivative equals the polynomial route to 1e-20", criterion_3},
      {4, "degree laws, degree bound and injectivity", criterion_4},
      {5, "witness completeness sweep with fd agreement", criterion_5},
      {6, "power-map multiplier identity to 1e-60", criterion_6},
      {7, "same-orbit markings stay below the error bound", criterion_7},
      {8, "slice degeneracies and loop monodromy", criterion_8},
      {9, "oracle self-consistency on seeded samples", criterion_9},
  };

  std::set<int> requested;
  for (int i = 1; i < argc; ++i) requested.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& criterion : criteria) {
    if (!requested.empty() && !requested.count(criterion.number)) continue;
    g_checks = 0;
    g_failures = 0;
    g_first_failure.clear();
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
      ok = criterion.run();
    } catch (const std::exception& e) {
      error = e.what();
      ok = false;
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok) {
      std::printf("[PASS] criterion %d: %s (%d checks, %.2f s)\n", criterion.number,
                  criterion.label, g_checks, seconds);
    } else {
      ++failed;
      std::printf("[FAIL] criterion %d: %s (%d/%d checks failed%s%s, %.2f s)\n",
                  criterion.number, criterion.label, g_failures, g_checks,
                  error.empty() && g_first_failure.empty() ? "" : "; first: ",
                  error.empty() ? g_first_failure.c_str() : error.c_str(), seconds);
    }
  }
  return failed == 0 ? 0 : 1;
}
