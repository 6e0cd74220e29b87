#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "multdyn/complexmp.hpp"
#include "multdyn/intpoly.hpp"
#include "multdyn/oracle.hpp"
#include "multdyn/parallel.hpp"
#include "multdyn/sparsepoly.hpp"

namespace multdyn {

inline constexpr unsigned kDefaultIterateDegreeCap = 32;

// q_c(z) = z^n + c on the one-parameter slice of centered polynomials.
struct SliceParameter {
  unsigned n = 0;
  Complex c;

  CenteredPolynomial poly() const;
};

// Parameters c where the m-th iterate of z^n + c has a multiple fixed point,
// together with the exact integer discriminant that detects them.
struct DegeneracySet {
  unsigned n = 0;
  unsigned m = 0;
  std::vector<Complex> parameters;      // deduplicated roots
  SparsePolynomial discriminant;        // in c, exact integer coefficients
};

DegeneracySet degeneracy_parameters(unsigned n, unsigned m,
                                    unsigned degree_cap = kDefaultIterateDegreeCap);

// Independent route to the same value: resultant of (f, df/dz) at a numeric
// c as the product of df/dz over the roots of f (f is monic in z).
Complex degeneracy_discriminant_product_route(unsigned n, unsigned m, const Complex& c);

struct LoopSegment {
  enum class Kind { circle, line };
  Kind kind = Kind::line;
  Complex center;     // circle
  Real radius{0};     // circle
  int turns = 1;      // circle, signed
  unsigned steps = 64;  // circle subdivision
  Complex to;         // line endpoint
};

// Closed piecewise path in the slice parameter plane. Circle segments must
// start on their own circle; the last segment must return to the base point.
struct LoopPath {
  unsigned n = 0;
  unsigned m = 0;
  Complex base;
  std::vector<LoopSegment> segments;

  // Waypoints of the discretized path, starting and ending at base.
  std::vector<Complex> discretize() const;
};

// Permutation data induced by analytic continuation around a loop.
struct OrbitPermutation {
  unsigned m = 0;
  std::vector<std::size_t> point_perm;  // on all tracked period-m points
  std::vector<std::size_t> orbit_perm;  // on the orbit quotient
};

OrbitPermutation compose(const OrbitPermutation& first, const OrbitPermutation& then);
OrbitPermutation inverse(const OrbitPermutation& perm);
bool is_identity(const OrbitPermutation& perm);
std::string cycle_notation(std::span<const std::size_t> perm);

struct TrackResult {
  OrbitPermutation permutation;
  std::vector<Complex> start_points;            // deterministic order
  std::vector<std::size_t> orbit_of_point;      // point index -> orbit index
  std::vector<std::vector<std::size_t>> orbits;  // orbit index -> point indices
};

struct TrackOptions {
  ContinuationSettings continuation;
  unsigned degree_cap = kDefaultIterateDegreeCap;
  ExecMode exec = ExecMode::parallel;
};

// Continues every exact-period-m point of q_{base} around the loop and
// matches the endpoints back to the start points (nearest neighbour with a
// min-gap/10 guard).
TrackResult track_loop(const LoopPath& loop, const TrackOptions& options = {});

struct GroupReport {
  bool transitive = false;
  std::uint64_t group_order_bound = 0;
  bool order_exact = false;  // closure enumeration finished under the cap
};

GroupReport permutation_group_report(std::span<const OrbitPermutation> perms,
                                     std::size_t orbit_count,
                                     std::uint64_t closure_cap = 20000);

struct DisjointnessOptions {
  unsigned degree_cap = kDefaultIterateDegreeCap;
  // Perturbation radius and acceptance distance for "the parabolic cycle
  // spawns a period-m orbit".
  Real perturbation{"1e-5"};
  Real near_radius{"0.05"};
  unsigned sample_directions = 4;
  Real match_tol{"1e-8"};
};

// True when no parameter lies (within match_tol) in both sets of parameters
// that actually spawn new period-m1 / period-m2 orbits.
bool disjointness_check(unsigned n, unsigned m1, unsigned m2,
                        const DisjointnessOptions& options = {});

// Exact-period-m points of z^n + c at a numeric parameter, via root-finding
// of the iterate and removal of lower-period roots; deterministic order.
std::vector<Complex> slice_periodic_points(unsigned n, const Complex& c, unsigned m,
                                           unsigned degree_cap = kDefaultIterateDegreeCap);

}  // namespace multdyn
