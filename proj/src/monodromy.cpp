#include "multdyn/monodromy.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "multdyn/error.hpp"
#include "multdyn/numbertheory.hpp"
#include "multdyn/rootfinding.hpp"

namespace multdyn {

namespace {

bool lex_less(const Complex& a, const Complex& b) {
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}

void check_degree_cap(unsigned n, unsigned m, unsigned cap) {
  BigInt p = pow(BigInt(n), m);
  if (p > BigInt(cap)) {
    raise(Errc::budget_exceeded, "iterate degree n^m = " + p.str() +
                                     " exceeds cap " + std::to_string(cap));
  }
}

std::vector<Complex> roots_of_iterate_minus_z(unsigned n, unsigned s,
                                              const Complex& c) {
  BivarPoly f = unicritical_iterate_minus_z(n, s);
  return find_roots(f.evaluate_c(c));
}

Real min_pairwise_gap(std::span<const Complex> points) {
  Real gap(-1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      Real d = abs(points[i] - points[j]);
      if (gap < 0 || d < gap) gap = d;
    }
  }
  return gap < 0 ? Real(1) : gap;
}

std::size_t nearest_index(const Complex& z, std::span<const Complex> points) {
  std::size_t best = 0;
  Real best_dist = abs(z - points[0]);
  for (std::size_t i = 1; i < points.size(); ++i) {
    Real d = abs(z - points[i]);
    if (d < best_dist) {
      best_dist = d;
      best = i;
    }
  }
  return best;
}

struct OrbitDecomposition {
  std::vector<std::size_t> orbit_of_point;
  std::vector<std::vector<std::size_t>> orbits;  // each cycle in q-order
};

// Partitions the exact-period-m point set into q-orbits by following the
// map and matching each image to the nearest point (guarded by min gap).
OrbitDecomposition group_into_orbits(const CenteredPolynomial& q,
                                     std::span<const Complex> points,
                                     unsigned m) {
  const std::size_t count = points.size();
  const Real gap = min_pairwise_gap(points);
  std::vector<std::size_t> successor(count);
  for (std::size_t i = 0; i < count; ++i) {
    Complex image = q.evaluate(points[i]);
    std::size_t j = nearest_index(image, points);
    if (abs(image - points[j]) > gap / 10) {
      raise(Errc::ambiguous_matching,
            "orbit image does not land near any tracked point");
    }
    successor[i] = j;
  }
  OrbitDecomposition dec;
  dec.orbit_of_point.assign(count, static_cast<std::size_t>(-1));
  std::vector<bool> seen(count, false);
  for (std::size_t i = 0; i < count; ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> cycle;
    std::size_t cur = i;
    while (!seen[cur]) {
      seen[cur] = true;
      cycle.push_back(cur);
      cur = successor[cur];
    }
    if (cur != i || cycle.size() != m) {
      raise(Errc::ambiguous_matching, "point set does not decompose into period-" +
                                          std::to_string(m) + " cycles");
    }
    std::size_t orbit_index = dec.orbits.size();
    for (std::size_t p : cycle) dec.orbit_of_point[p] = orbit_index;
    dec.orbits.push_back(std::move(cycle));
  }
  return dec;
}

}  // namespace

CenteredPolynomial SliceParameter::poly() const {
  if (n < 2) raise(Errc::invalid_argument, "degree must be >= 2");
  std::vector<Complex> coeffs(n - 1);
  coeffs[0] = c;
  return CenteredPolynomial(n, std::move(coeffs));
}

DegeneracySet degeneracy_parameters(unsigned n, unsigned m, unsigned degree_cap) {
  if (n < 2 || m < 1) raise(Errc::invalid_argument, "need n >= 2 and m >= 1");
  check_degree_cap(n, m, degree_cap);

  DegeneracySet out;
  out.n = n;
  out.m = m;
  BivarPoly f = unicritical_iterate_minus_z(n, m);
  IntPoly disc = resultant_z(f, f.derivative_z());
  out.discriminant = disc.to_sparse();
  if (disc.degree() == 0) return out;  // no degeneracy parameters

  std::vector<Complex> coeffs(disc.degree() + 1);
  for (std::size_t i = 0; i <= disc.degree(); ++i) {
    coeffs[i] = Complex(to_real(disc.coeff(i)));
  }
  std::vector<Complex> roots = find_roots(coeffs);
  auto clusters = merge_root_clusters(roots, Real("1e-10"));
  out.parameters.reserve(clusters.size());
  for (const auto& cl : clusters) out.parameters.push_back(cl.center);
  std::sort(out.parameters.begin(), out.parameters.end(), lex_less);

  // Every parameter must actually carry a multiple fixed point of the
  // iterate: some root z of f with (q^m)'(z) close to 1.
  const Real residual_tol("1e-8");
  const BivarPoly fz = f.derivative_z();
  for (const Complex& c : out.parameters) {
    std::vector<Complex> zroots = roots_of_iterate_minus_z(n, m, c);
    std::vector<Complex> dcoeffs = fz.evaluate_c(c);
    Real best(-1);
    for (const Complex& z : zroots) {
      // f'(z) = (q^m)'(z) - 1
      Complex acc;
      for (std::size_t i = dcoeffs.size(); i-- > 0;) acc = acc * z + dcoeffs[i];
      Real mag = abs(acc);
      if (best < 0 || mag < best) best = mag;
    }
    if (best < 0 || best > residual_tol) {
      raise(Errc::ambiguous_matching,
            "degeneracy parameter failed the multiple-fixed-point check");
    }
  }
  return out;
}

Complex degeneracy_discriminant_product_route(unsigned n, unsigned m,
                                              const Complex& c) {
  BivarPoly f = unicritical_iterate_minus_z(n, m);
  std::vector<Complex> coeffs = f.evaluate_c(c);
  std::vector<Complex> roots = find_roots(coeffs);
  std::vector<Complex> dcoeffs = f.derivative_z().evaluate_c(c);
  Complex product(Real(1));
  for (const Complex& z : roots) {
    Complex acc;
    for (std::size_t i = dcoeffs.size(); i-- > 0;) acc = acc * z + dcoeffs[i];
    product *= acc;
  }
  return product;  // equals Res_z(f, df/dz) since f is monic in z
}

std::vector<Complex> LoopPath::discretize() const {
  if (segments.empty()) raise(Errc::invalid_argument, "loop has no segments");
  std::vector<Complex> waypoints{base};
  const Real close_tol("1e-9");
  for (const auto& seg : segments) {
    const Complex cur = waypoints.back();
    if (seg.kind == LoopSegment::Kind::line) {
      Real len = abs(seg.to - cur);
      unsigned pieces = 8;
      if (len > Real("0.08")) {
        Real needed = ceil(len / Real("0.01"));
        if (needed > 100000) raise(Errc::budget_exceeded, "line subdivision too fine");
        pieces = static_cast<unsigned>(needed.convert_to<double>());
      }
      for (unsigned l = 1; l <= pieces; ++l) {
        Real t = Real(l) / Real(pieces);
        waypoints.push_back(cur + t * (seg.to - cur));
      }
      waypoints.back() = seg.to;
    } else {
      if (seg.radius <= 0) raise(Errc::invalid_argument, "circle radius must be positive");
      if (seg.turns == 0) raise(Errc::invalid_argument, "circle turns must be nonzero");
      unsigned steps = std::max(seg.steps, 16u);
      Complex offset = cur - seg.center;
      Real dist = abs(offset);
      if (abs(dist - seg.radius) > close_tol * max(Real(1), seg.radius)) {
        raise(Errc::invalid_argument,
              "circle segment must start on its own circle (|start - center| = radius)");
      }
      Real theta0 = atan2(offset.im, offset.re);
      const Real two_pi = 2 * pi_value();
      const unsigned total = steps * static_cast<unsigned>(std::abs(seg.turns));
      for (unsigned l = 1; l <= total; ++l) {
        Real theta = theta0 + two_pi * Real(seg.turns) * Real(l) / Real(total);
        waypoints.push_back(seg.center +
                            Complex(seg.radius * cos(theta), seg.radius * sin(theta)));
      }
      waypoints.back() = cur;  // full turns close exactly
    }
  }
  if (abs(waypoints.back() - base) > close_tol) {
    raise(Errc::invalid_argument, "loop does not return to its base point");
  }
  waypoints.back() = base;
  return waypoints;
}

OrbitPermutation compose(const OrbitPermutation& first, const OrbitPermutation& then) {
  if (first.point_perm.size() != then.point_perm.size() ||
      first.orbit_perm.size() != then.orbit_perm.size()) {
    raise(Errc::shape_mismatch, "permutation sizes differ");
  }
  OrbitPermutation out;
  out.m = first.m;
  out.point_perm.resize(first.point_perm.size());
  out.orbit_perm.resize(first.orbit_perm.size());
  for (std::size_t i = 0; i < first.point_perm.size(); ++i) {
    out.point_perm[i] = then.point_perm[first.point_perm[i]];
  }
  for (std::size_t i = 0; i < first.orbit_perm.size(); ++i) {
    out.orbit_perm[i] = then.orbit_perm[first.orbit_perm[i]];
  }
  return out;
}

OrbitPermutation inverse(const OrbitPermutation& perm) {
  OrbitPermutation out;
  out.m = perm.m;
  out.point_perm.resize(perm.point_perm.size());
  out.orbit_perm.resize(perm.orbit_perm.size());
  for (std::size_t i = 0; i < perm.point_perm.size(); ++i) {
    out.point_perm[perm.point_perm[i]] = i;
  }
  for (std::size_t i = 0; i < perm.orbit_perm.size(); ++i) {
    out.orbit_perm[perm.orbit_perm[i]] = i;
  }
  return out;
}

bool is_identity(const OrbitPermutation& perm) {
  for (std::size_t i = 0; i < perm.point_perm.size(); ++i) {
    if (perm.point_perm[i] != i) return false;
  }
  for (std::size_t i = 0; i < perm.orbit_perm.size(); ++i) {
    if (perm.orbit_perm[i] != i) return false;
  }
  return true;
}

std::string cycle_notation(std::span<const std::size_t> perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> cycle;
    std::size_t cur = i;
    while (!seen[cur]) {
      seen[cur] = true;
      cycle.push_back(cur);
      cur = perm[cur];
    }
    out += "(";
    for (std::size_t l = 0; l < cycle.size(); ++l) {
      if (l) out += " ";
      out += std::to_string(cycle[l]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::vector<Complex> slice_periodic_points(unsigned n, const Complex& c, unsigned m,
                                           unsigned degree_cap) {
  if (n < 2 || m < 1) raise(Errc::invalid_argument, "need n >= 2 and m >= 1");
  check_degree_cap(n, m, degree_cap);
  std::vector<Complex> candidates = roots_of_iterate_minus_z(n, m, c);

  const Real match_tol("1e-9");
  std::vector<Complex> lower;
  for (std::uint64_t s : divisors_of(m)) {
    if (s == m) continue;
    auto r = roots_of_iterate_minus_z(n, static_cast<unsigned>(s), c);
    lower.insert(lower.end(), r.begin(), r.end());
  }
  std::vector<Complex> exact;
  for (const Complex& z : candidates) {
    bool is_lower = false;
    for (const Complex& w : lower) {
      if (abs(z - w) <= match_tol) {
        is_lower = true;
        break;
      }
    }
    if (!is_lower) exact.push_back(z);
  }
  std::sort(exact.begin(), exact.end(), lex_less);
  return exact;
}

TrackResult track_loop(const LoopPath& loop, const TrackOptions& options) {
  const unsigned n = loop.n;
  const unsigned m = loop.m;
  if (n < 2 || m < 1) raise(Errc::invalid_argument, "need n >= 2 and m >= 1");

  // Degeneracy parameters of every divisor period bound the loop clearance.
  std::vector<Complex> danger;
  for (std::uint64_t s : divisors_of(m)) {
    auto deg = degeneracy_parameters(n, static_cast<unsigned>(s), options.degree_cap);
    danger.insert(danger.end(), deg.parameters.begin(), deg.parameters.end());
  }
  Real clearance("1e-3");
  bool has_circle = false;
  for (const auto& seg : loop.segments) {
    if (seg.kind == LoopSegment::Kind::circle) {
      Real c = seg.radius / 5;
      clearance = has_circle ? min(clearance, c) : c;
      has_circle = true;
    }
  }

  std::vector<Complex> waypoints = loop.discretize();
  for (const Complex& w : waypoints) {
    for (const Complex& d : danger) {
      if (abs(w - d) <= clearance) {
        raise(Errc::invalid_argument,
              "loop waypoint within clearance of a degeneracy parameter at c = " +
                  to_string(d, 10));
      }
    }
  }

  SliceParameter base{n, loop.base};
  std::vector<Complex> start_points =
      slice_periodic_points(n, loop.base, m, options.degree_cap);
  if (start_points.empty()) {
    raise(Errc::ambiguous_matching, "no exact-period points at the base parameter");
  }
  OrbitDecomposition dec = group_into_orbits(base.poly(), start_points, m);

  const Real gap = min_pairwise_gap(start_points);
  const std::size_t orbit_count = dec.orbits.size();
  std::vector<std::size_t> point_perm(start_points.size());

  std::vector<CenteredPolynomial> polys;
  polys.reserve(waypoints.size());
  for (const Complex& w : waypoints) polys.push_back(SliceParameter{n, w}.poly());

  for_each_index(orbit_count, options.exec, [&](std::size_t o) {
    // Track the whole cycle, starting from the orbit's first point.
    std::vector<Complex> cycle;
    cycle.reserve(m);
    for (std::size_t idx : dec.orbits[o]) cycle.push_back(start_points[idx]);
    for (std::size_t l = 0; l + 1 < waypoints.size(); ++l) {
      cycle = continue_orbit(polys[l], cycle, polys[l + 1], options.continuation);
    }
    for (std::size_t pos = 0; pos < dec.orbits[o].size(); ++pos) {
      std::size_t target = nearest_index(cycle[pos], start_points);
      if (abs(cycle[pos] - start_points[target]) > gap / 10) {
        raise(Errc::ambiguous_matching,
              "loop endpoint does not land within the matching guard");
      }
      point_perm[dec.orbits[o][pos]] = target;
    }
  });

  // point_perm must be a bijection compatible with the orbit quotient.
  {
    std::vector<bool> hit(point_perm.size(), false);
    for (std::size_t v : point_perm) {
      if (v >= hit.size() || hit[v]) {
        raise(Errc::ambiguous_matching, "endpoint matching is not a bijection");
      }
      hit[v] = true;
    }
  }
  std::vector<std::size_t> orbit_perm(orbit_count);
  for (std::size_t o = 0; o < orbit_count; ++o) {
    std::size_t image_orbit = dec.orbit_of_point[point_perm[dec.orbits[o][0]]];
    for (std::size_t idx : dec.orbits[o]) {
      if (dec.orbit_of_point[point_perm[idx]] != image_orbit) {
        raise(Errc::ambiguous_matching, "orbit does not map onto a single orbit");
      }
    }
    orbit_perm[o] = image_orbit;
  }

  TrackResult result;
  result.permutation.m = m;
  result.permutation.point_perm = std::move(point_perm);
  result.permutation.orbit_perm = std::move(orbit_perm);
  result.start_points = std::move(start_points);
  result.orbit_of_point = std::move(dec.orbit_of_point);
  result.orbits = std::move(dec.orbits);
  return result;
}

GroupReport permutation_group_report(std::span<const OrbitPermutation> perms,
                                     std::size_t orbit_count,
                                     std::uint64_t closure_cap) {
  for (const auto& p : perms) {
    if (p.orbit_perm.size() != orbit_count) {
      raise(Errc::shape_mismatch, "permutation does not act on the stated orbit set");
    }
  }
  GroupReport report;

  // Transitivity of the generated group = connectivity under the generators.
  std::vector<std::size_t> parent(orbit_count);
  for (std::size_t i = 0; i < orbit_count; ++i) parent[i] = i;
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& p : perms) {
    for (std::size_t i = 0; i < orbit_count; ++i) {
      parent[find(i)] = find(p.orbit_perm[i]);
    }
  }
  std::size_t components = 0;
  for (std::size_t i = 0; i < orbit_count; ++i) {
    if (find(i) == i) ++components;
  }
  report.transitive = (components <= 1);

  // Closure enumeration; generators of a finite group close without explicit
  // inverses.
  std::set<std::vector<std::size_t>> elements;
  std::vector<std::size_t> identity(orbit_count);
  for (std::size_t i = 0; i < orbit_count; ++i) identity[i] = i;
  elements.insert(identity);
  std::vector<std::vector<std::size_t>> frontier{identity};
  report.order_exact = true;
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& g : frontier) {
      for (const auto& p : perms) {
        std::vector<std::size_t> h(orbit_count);
        for (std::size_t i = 0; i < orbit_count; ++i) h[i] = p.orbit_perm[g[i]];
        if (elements.size() >= closure_cap) {
          report.order_exact = false;
          break;
        }
        if (elements.insert(h).second) next.push_back(std::move(h));
      }
      if (!report.order_exact) break;
    }
    if (!report.order_exact) break;
    frontier = std::move(next);
  }
  report.group_order_bound = elements.size();
  return report;
}

namespace {

// True when perturbing c off the degeneracy parameter produces at least one
// exact-period-m orbit that stays close to the parabolic cycle, i.e. the
// parabolic point actually spawns new period-m orbits.
bool spawns_new_period_m_orbit(unsigned n, const Complex& c_star, unsigned m,
                               const DisjointnessOptions& options) {
  std::vector<Complex> roots = roots_of_iterate_minus_z(n, m, c_star);
  BivarPoly f = unicritical_iterate_minus_z(n, m);
  std::vector<Complex> dcoeffs = f.derivative_z().evaluate_c(c_star);
  std::vector<Complex> parabolic;
  const Real parab_tol("1e-4");
  for (const Complex& z : roots) {
    Complex acc;
    for (std::size_t i = dcoeffs.size(); i-- > 0;) acc = acc * z + dcoeffs[i];
    if (abs(acc) < parab_tol) parabolic.push_back(z);
  }
  if (parabolic.empty()) {
    raise(Errc::ambiguous_matching, "no multiple fixed point at a degeneracy parameter");
  }
  auto clusters = merge_root_clusters(parabolic, Real("1e-6"));

  int spawned_votes = 0;
  const unsigned k_samples = options.sample_directions;
  for (unsigned k = 0; k < k_samples; ++k) {
    Real angle = 2 * pi_value() * (Real(k) + Real("0.37")) / Real(k_samples);
    Complex c = c_star + options.perturbation * Complex(cos(angle), sin(angle));
    std::vector<Complex> pts = slice_periodic_points(n, c, m, options.degree_cap);
    bool spawned = false;
    if (!pts.empty()) {
      SliceParameter sp{n, c};
      OrbitDecomposition dec = group_into_orbits(sp.poly(), pts, m);
      for (const auto& orbit : dec.orbits) {
        bool orbit_near = true;
        for (std::size_t idx : orbit) {
          Real dist(-1);
          for (const auto& cl : clusters) {
            Real d = abs(pts[idx] - cl.center);
            if (dist < 0 || d < dist) dist = d;
          }
          if (dist > options.near_radius) {
            orbit_near = false;
            break;
          }
        }
        if (orbit_near) {
          spawned = true;
          break;
        }
      }
    }
    if (spawned) ++spawned_votes;
  }
  if (spawned_votes != 0 && spawned_votes != static_cast<int>(k_samples)) {
    raise(Errc::ambiguous_matching,
          "perturbation samples disagree on orbit splitting at c = " +
              to_string(c_star, 10));
  }
  return spawned_votes == static_cast<int>(k_samples);
}

}  // namespace

bool disjointness_check(unsigned n, unsigned m1, unsigned m2,
                        const DisjointnessOptions& options) {
  if (m1 == m2) raise(Errc::invalid_argument, "periods must differ");
  auto classify = [&](unsigned m) {
    DegeneracySet deg = degeneracy_parameters(n, m, options.degree_cap);
    std::vector<Complex> spawning;
    for (const Complex& c : deg.parameters) {
      if (spawns_new_period_m_orbit(n, c, m, options)) spawning.push_back(c);
    }
    return spawning;
  };
  std::vector<Complex> s1 = classify(m1);
  std::vector<Complex> s2 = classify(m2);
  for (const Complex& a : s1) {
    for (const Complex& b : s2) {
      if (abs(a - b) <= options.match_tol) return false;
    }
  }
  return true;
}

}  // namespace multdyn
