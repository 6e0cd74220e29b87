#include <doctest.h>

#include <set>

#include "multdyn/error.hpp"
#include "multdyn/numbertheory.hpp"
#include "test_helpers.hpp"

using namespace multdyn;

TEST_SUITE_BEGIN("numbertheory");

TEST_CASE("moebius values") {
  CHECK(moebius(1) == 1);
  CHECK(moebius(2) == -1);
  CHECK(moebius(3) == -1);
  CHECK(moebius(4) == 0);
  CHECK(moebius(6) == 1);
  CHECK(moebius(12) == 0);
  CHECK(moebius(30) == -1);
  CHECK(moebius(210) == 1);
  CHECK_THROWS_AS(moebius(0), Error);
}

TEST_CASE("census closed forms for small periods") {
  for (unsigned n = 2; n <= 6; ++n) {
    OrbitCensus c1 = census(n, 1);
    CHECK(c1.nu == BigInt(n));
    CHECK(c1.nu_hat == BigInt(n - 1));
    CHECK(c1.orbit_count == BigInt(n - 1));

    OrbitCensus c2 = census(n, 2);
    CHECK(c2.nu == BigInt(n) * BigInt(n) - BigInt(n));
    CHECK(c2.nu_hat == c2.nu);
  }
}

TEST_CASE("census of the quadratic period-3 points") {
  OrbitCensus c = census(2, 3);
  CHECK(c.nu == 6);
  CHECK(c.nu_hat == 6);
  CHECK(c.orbit_count == 2);
}

TEST_CASE("moebius inversion identity") {
  for (unsigned n = 2; n <= 6; ++n) {
    for (unsigned m = 1; m <= 5; ++m) {
      BigInt total(0);
      for (std::uint64_t r : divisors_of(m)) {
        total += census(n, static_cast<unsigned>(r)).nu;
      }
      CHECK(total == pow(BigInt(n), m));
    }
  }
}

TEST_CASE("point count inequality for m >= 3") {
  for (unsigned n = 2; n <= 6; ++n) {
    for (unsigned m = 3; m <= 5; ++m) {
      OrbitCensus c = census(n, m);
      CHECK(c.nu_hat >= pow(BigInt(n), m) - pow(BigInt(n), m - 2));
    }
  }
}

TEST_CASE("representative enumeration matches hand-checked cases") {
  auto reps31 = enumerate_orbit_representatives(3, 1);
  REQUIRE(reps31.size() == 2);
  CHECK(reps31[0].t == 0);  // z = 1
  CHECK(reps31[1].t == 1);  // z = -1
  CHECK(reps31[0].modulus == 2);
  testing::check_close(reps31[1].value(), Complex(-1.0, 0.0), testing::precision_tol(5));

  auto reps22 = enumerate_orbit_representatives(2, 2);
  REQUIRE(reps22.size() == 1);
  CHECK(reps22[0].t == 1);
  CHECK(reps22[0].modulus == 3);

  auto reps21 = enumerate_orbit_representatives(2, 1);
  REQUIRE(reps21.size() == 1);
  CHECK(reps21[0].t == 0);
  CHECK(reps21[0].modulus == 1);
  testing::check_close(reps21[0].value(), Complex(1.0, 0.0), testing::precision_tol(5));
}

TEST_CASE("cycles over all divisor periods partition the residues") {
  for (unsigned n : {2u, 3u, 5u}) {
    for (unsigned m : {1u, 2u, 4u, 6u}) {
      std::uint64_t modulus = power_map_modulus(n, m, kDefaultEnumerationCap);
      std::set<std::uint64_t> covered;
      std::uint64_t covered_count = 0;
      for (std::uint64_t r : divisors_of(m)) {
        for (const auto& rep : enumerate_orbit_representatives(n, static_cast<unsigned>(r))) {
          // Each residue lifts to Z/(n^m - 1) via scaling by (n^m-1)/(n^r-1).
          std::uint64_t scale = modulus / rep.modulus;
          for (std::uint64_t t : rep.orbit_residues()) {
            bool fresh = covered.insert(t * scale).second;
            CHECK(fresh);
            ++covered_count;
          }
        }
      }
      CHECK(covered_count == modulus);
      CHECK(covered.size() == modulus);
    }
  }
}

TEST_CASE("representatives carry their exact period") {
  for (unsigned n = 2; n <= 4; ++n) {
    for (unsigned m = 1; m <= 4; ++m) {
      auto reps = enumerate_orbit_representatives(n, m);
      CHECK(BigInt(reps.size()) == census(n, m).orbit_count);
      for (const auto& rep : reps) {
        CHECK(rep.exact_period() == m);
        CHECK(rep.orbit_residues().size() == m);
        CHECK(rep.canonical_residue() == rep.t);
      }
    }
  }
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(enumerate_orbit_representatives(2, 25), Error);
  try {
    enumerate_orbit_representatives(2, 25);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::budget_exceeded);
    CHECK(exit_code_for(e.code()) == 3);
  }
}

TEST_SUITE_END();
