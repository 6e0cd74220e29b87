#include <doctest.h>

#include <atomic>
#include <numeric>

#include "multdyn/error.hpp"
#include "multdyn/monodromy.hpp"
#include "multdyn/parallel.hpp"
#include "multdyn/witness.hpp"
#include "test_helpers.hpp"

using namespace multdyn;

namespace {

LoopPath doubling_loop() {
  LoopPath loop;
  loop.n = 2;
  loop.m = 2;
  loop.base = Complex(Real("-0.55"));
  LoopSegment in;
  in.kind = LoopSegment::Kind::line;
  in.to = Complex(Real("-0.65"));
  LoopSegment circle;
  circle.kind = LoopSegment::Kind::circle;
  circle.center = Complex(Real("-0.75"));
  circle.radius = Real("0.1");
  circle.turns = 1;
  circle.steps = 48;
  LoopSegment out;
  out.kind = LoopSegment::Kind::line;
  out.to = loop.base;
  loop.segments = {in, circle, out};
  return loop;
}

}  // namespace

TEST_SUITE_BEGIN("parallel");

TEST_CASE("for_each_index covers every index in both modes") {
  for (ExecMode mode : {ExecMode::serial, ExecMode::parallel}) {
    std::vector<int> hits(257, 0);
    for_each_index(hits.size(), mode, [&](std::size_t i) { hits[i]++; });
    CHECK(std::accumulate(hits.begin(), hits.end(), 0) == 257);
    for (int h : hits) CHECK(h == 1);
  }
}

TEST_CASE("exceptions from parallel bodies are rethrown") {
  CHECK_THROWS_AS(
      for_each_index(64, ExecMode::parallel,
                     [&](std::size_t i) {
                       if (i % 13 == 5) raise(Errc::budget_exceeded, "probe");
                     }),
      Error);
}

TEST_CASE("working precision is visible inside parallel regions") {
  const Real reference = sin(Real(1) / 3);
  std::vector<Real> values(32);
  for_each_index(values.size(), ExecMode::parallel,
                 [&](std::size_t i) { values[i] = sin(Real(1) / 3); });
  for (const auto& v : values) CHECK(v == reference);
}

TEST_CASE("witness search yields identical reports in both modes") {
  std::vector<unsigned> periods{1, 2, 2};
  std::vector<unsigned> indices{0, 1, 2};
  WitnessOptions serial;
  serial.exec = ExecMode::serial;
  WitnessOptions parallel;
  parallel.exec = ExecMode::parallel;
  auto a = find_witness(4, periods, indices, serial);
  auto b = find_witness(4, periods, indices, parallel);
  REQUIRE(a.points.size() == b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    CHECK(a.points[i].t == b.points[i].t);
  }
  CHECK(a.det.re == b.det.re);
  CHECK(a.det.im == b.det.im);
}

TEST_CASE("sweep results are mode-independent") {
  WitnessOptions serial;
  serial.exec = ExecMode::serial;
  WitnessOptions parallel;
  parallel.exec = ExecMode::parallel;
  auto a = sweep_witness(3, 2, 4096, serial);
  auto b = sweep_witness(3, 2, 4096, parallel);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].periods == b[i].periods);
    CHECK(a[i].indices == b[i].indices);
    REQUIRE(a[i].report.points.size() == b[i].report.points.size());
    for (std::size_t r = 0; r < a[i].report.points.size(); ++r) {
      CHECK(a[i].report.points[r].t == b[i].report.points[r].t);
    }
    CHECK(a[i].report.det.re == b[i].report.det.re);
  }
}

TEST_CASE("loop tracking is mode-independent") {
  TrackOptions serial;
  serial.exec = ExecMode::serial;
  TrackOptions parallel;
  parallel.exec = ExecMode::parallel;
  auto a = track_loop(doubling_loop(), serial);
  auto b = track_loop(doubling_loop(), parallel);
  CHECK(a.permutation.point_perm == b.permutation.point_perm);
  CHECK(a.permutation.orbit_perm == b.permutation.orbit_perm);
  REQUIRE(a.start_points.size() == b.start_points.size());
  for (std::size_t i = 0; i < a.start_points.size(); ++i) {
    CHECK(a.start_points[i].re == b.start_points[i].re);
    CHECK(a.start_points[i].im == b.start_points[i].im);
  }
}

TEST_SUITE_END();
