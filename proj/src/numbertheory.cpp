#include "multdyn/numbertheory.hpp"

#include <algorithm>

#include "multdyn/error.hpp"

namespace multdyn {

int moebius(std::uint64_t d) {
  if (d == 0) raise(Errc::invalid_argument, "moebius requires d >= 1");
  int prime_factors = 0;
  for (std::uint64_t p = 2; p * p <= d; ++p) {
    if (d % p == 0) {
      d /= p;
      if (d % p == 0) return 0;  // square factor
      ++prime_factors;
    }
  }
  if (d > 1) ++prime_factors;
  return (prime_factors % 2 == 0) ? 1 : -1;
}

std::vector<std::uint64_t> divisors_of(std::uint64_t m) {
  std::vector<std::uint64_t> divs;
  for (std::uint64_t r = 1; r * r <= m; ++r) {
    if (m % r == 0) {
      divs.push_back(r);
      if (r != m / r) divs.push_back(m / r);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

OrbitCensus census(unsigned n, unsigned m) {
  if (n < 2) raise(Errc::invalid_argument, "census requires degree n >= 2");
  if (m < 1) raise(Errc::invalid_argument, "census requires period m >= 1");
  OrbitCensus out;
  out.n = n;
  out.m = m;
  out.nu = 0;
  for (std::uint64_t r : divisors_of(m)) {
    out.nu += BigInt(moebius(m / r)) * pow(BigInt(n), static_cast<unsigned>(r));
  }
  out.nu_hat = (m == 1) ? out.nu - 1 : out.nu;
  out.orbit_count = out.nu_hat / m;
  return out;
}

std::uint64_t power_map_modulus(unsigned n, unsigned m, std::uint64_t cap) {
  BigInt modulus = pow(BigInt(n), m) - 1;
  if (modulus > BigInt(cap)) {
    raise(Errc::budget_exceeded,
          "n^m - 1 = " + modulus.str() + " exceeds enumeration cap " +
              std::to_string(cap));
  }
  return modulus.convert_to<std::uint64_t>();
}

std::vector<std::uint64_t> PowerMapOrbitPoint::orbit_residues() const {
  std::vector<std::uint64_t> cycle;
  cycle.reserve(m);
  std::uint64_t start = t % modulus;
  std::uint64_t cur = start;
  do {
    cycle.push_back(cur);
    cur = mulmod(cur, n, modulus);
  } while (cur != start && cycle.size() < modulus);
  return cycle;
}

std::uint64_t PowerMapOrbitPoint::canonical_residue() const {
  auto cycle = orbit_residues();
  return *std::min_element(cycle.begin(), cycle.end());
}

unsigned PowerMapOrbitPoint::exact_period() const {
  std::uint64_t cur = mulmod(t % modulus, n, modulus);
  unsigned s = 1;
  while (cur != t % modulus) {
    cur = mulmod(cur, n, modulus);
    ++s;
  }
  return s;
}

std::vector<PowerMapOrbitPoint> enumerate_orbit_representatives(
    unsigned n, unsigned m, std::uint64_t enumeration_cap) {
  if (n < 2 || m < 1) raise(Errc::invalid_argument, "need n >= 2 and m >= 1");
  std::uint64_t modulus = power_map_modulus(n, m, enumeration_cap);

  std::vector<PowerMapOrbitPoint> reps;
  std::vector<bool> visited(modulus, false);
  std::vector<std::uint64_t> cycle;
  // Ascending scan: the first unvisited residue of a cycle is its minimum,
  // so representatives come out sorted.
  for (std::uint64_t t = 0; t < modulus; ++t) {
    if (visited[t]) continue;
    cycle.clear();
    std::uint64_t cur = t;
    do {
      visited[cur] = true;
      cycle.push_back(cur);
      cur = mulmod(cur, n, modulus);
    } while (cur != t);
    if (cycle.size() == m) {
      reps.push_back(PowerMapOrbitPoint{n, m, t, modulus});
    }
  }
  return reps;
}

}  // namespace multdyn
