#pragma once

#include <cstdint>
#include <vector>

#include "multdyn/complexmp.hpp"
#include "multdyn/precision.hpp"

namespace multdyn {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t(1) << 20;

// Moebius function by trial division.
int moebius(std::uint64_t d);

std::vector<std::uint64_t> divisors_of(std::uint64_t m);

// Counts of period-m points of z -> z^n: `nu` all of them, `nu_hat` the
// nonzero ones. Exact integers.
struct OrbitCensus {
  unsigned n = 0;
  unsigned m = 0;
  BigInt nu;
  BigInt nu_hat;
  BigInt orbit_count;  // nu_hat / m
};

OrbitCensus census(unsigned n, unsigned m);

// A nonzero periodic point of z -> z^n of exact period m, stored exactly as
// the residue t of its phase: z = exp(2*pi*i * t / (n^m - 1)).
struct PowerMapOrbitPoint {
  unsigned n = 0;
  unsigned m = 0;
  std::uint64_t t = 0;
  std::uint64_t modulus = 1;  // n^m - 1

  Complex value() const { return unit_root(modulus, t); }
  Complex inverse_value() const { return unit_root(modulus, modulus - t % modulus); }

  // The m residues of the orbit, starting at t.
  std::vector<std::uint64_t> orbit_residues() const;

  // Smallest residue in the cycle; equal orbits share it.
  std::uint64_t canonical_residue() const;

  // Minimal s >= 1 with n^s * t == t (mod n^m - 1).
  unsigned exact_period() const;
};

// One representative per exact-period-m cycle of t -> n*t on Z/(n^m - 1),
// canonical = smallest residue of the cycle, sorted ascending.
std::vector<PowerMapOrbitPoint> enumerate_orbit_representatives(
    unsigned n, unsigned m, std::uint64_t enumeration_cap = kDefaultEnumerationCap);

// n^m - 1 as uint64; throws BudgetExceeded when it exceeds `cap`.
std::uint64_t power_map_modulus(unsigned n, unsigned m, std::uint64_t cap);

}  // namespace multdyn
