#include "multdyn/rootfinding.hpp"

#include <algorithm>
#include <numeric>

#include "multdyn/error.hpp"

namespace multdyn {

namespace {

Complex horner(const std::vector<Complex>& coeffs, const Complex& x) {
  Complex acc;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

std::vector<Complex> derivative_coeffs(const std::vector<Complex>& coeffs) {
  if (coeffs.size() <= 1) return {};
  std::vector<Complex> d(coeffs.size() - 1);
  for (std::size_t i = 1; i < coeffs.size(); ++i) d[i - 1] = Real(i) * coeffs[i];
  return d;
}

}  // namespace

std::vector<Complex> find_roots(const std::vector<Complex>& coeffs_in,
                                const RootFindOptions& options) {
  std::vector<Complex> coeffs = coeffs_in;
  const Real zero_tol(0);
  while (!coeffs.empty() && abs(coeffs.back()) == zero_tol) coeffs.pop_back();
  if (coeffs.size() <= 1) {
    raise(Errc::invalid_argument, "find_roots needs a nonconstant polynomial");
  }

  std::vector<Complex> roots;
  // Exact roots at the origin come from trailing zero coefficients.
  std::size_t shift = 0;
  while (shift < coeffs.size() && abs(coeffs[shift]) == zero_tol) ++shift;
  for (std::size_t i = 0; i < shift; ++i) roots.emplace_back(Real(0), Real(0));
  if (shift > 0) coeffs.erase(coeffs.begin(), coeffs.begin() + shift);

  const std::size_t d = coeffs.size() - 1;
  if (d == 0) return roots;

  Real tol = options.tolerance;
  if (tol <= 0) tol = ldexp(Real(1), 24 - static_cast<int>(precision_bits()));

  // Cauchy bound for the initial circle.
  Real lead = abs(coeffs[d]);
  Real radius(0);
  for (std::size_t i = 0; i < d; ++i) radius = max(radius, abs(coeffs[i]) / lead);
  radius += 1;

  const Real two_pi = 2 * pi_value();
  std::vector<Complex> x(d);
  for (std::size_t i = 0; i < d; ++i) {
    Real angle = two_pi * Real(i) / Real(d) + Real("0.3847");
    x[i] = Complex(radius * cos(angle), radius * sin(angle));
  }

  const std::vector<Complex> dcoeffs = derivative_coeffs(coeffs);
  std::vector<Complex> newton(d);
  for (unsigned iter = 0; iter < options.max_iterations; ++iter) {
    bool converged = true;
    for (std::size_t i = 0; i < d; ++i) {
      Complex fx = horner(coeffs, x[i]);
      Complex dfx = horner(dcoeffs, x[i]);
      if (abs(dfx) == zero_tol) {
        // Stationary start point; nudge off it.
        x[i].re += tol + Real("1e-3");
        converged = false;
        continue;
      }
      newton[i] = fx / dfx;
    }
    for (std::size_t i = 0; i < d; ++i) {
      Complex repulsion;
      for (std::size_t j = 0; j < d; ++j) {
        if (j == i) continue;
        Complex diff = x[i] - x[j];
        if (abs(diff) == zero_tol) {
          diff = Complex(tol + Real("1e-20"), Real(0));
        }
        repulsion += Complex(Real(1)) / diff;
      }
      Complex denom = Complex(Real(1)) - newton[i] * repulsion;
      Complex correction =
          (abs(denom) == zero_tol) ? newton[i] : newton[i] / denom;
      x[i] -= correction;
      if (abs(correction) > tol * (1 + abs(x[i]))) converged = false;
    }
    if (converged) break;
  }

  roots.insert(roots.end(), x.begin(), x.end());
  return roots;
}

std::vector<RootCluster> merge_root_clusters(const std::vector<Complex>& roots,
                                             const Real& tol) {
  const std::size_t n = roots.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (abs(roots[i] - roots[j]) <= tol) parent[find(i)] = find(j);
    }
  }
  std::vector<RootCluster> clusters;
  std::vector<long long> cluster_of(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t root = find(i);
    if (cluster_of[root] < 0) {
      cluster_of[root] = static_cast<long long>(clusters.size());
      clusters.push_back(RootCluster{Complex(), 0});
    }
    auto& cl = clusters[static_cast<std::size_t>(cluster_of[root])];
    cl.center += roots[i];
    cl.multiplicity += 1;
  }
  for (auto& cl : clusters) {
    Real inv = Real(1) / Real(cl.multiplicity);
    cl.center.re *= inv;
    cl.center.im *= inv;
  }
  return clusters;
}

}  // namespace multdyn
