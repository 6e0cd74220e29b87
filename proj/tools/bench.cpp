// Timing harness for the OpenMP kernels against their serial references:
// witness candidate scans, the completeness sweep and loop tracking.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "multdyn/monodromy.hpp"
#include "multdyn/parallel.hpp"
#include "multdyn/precision.hpp"
#include "multdyn/witness.hpp"

namespace md = multdyn;

namespace {

double time_once(const std::function<void()>& body) {
  auto start = std::chrono::steady_clock::now();
  body();
  auto end = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(end - start).count();
}

void report(const std::string& name, double serial_s, double parallel_s) {
  std::printf("%-28s serial %8.3f s   parallel %8.3f s   speedup %.2fx\n",
              name.c_str(), serial_s, parallel_s,
              parallel_s > 0 ? serial_s / parallel_s : 0.0);
}

}  // namespace

int main() {
  md::set_precision_bits(256);
  std::printf("threads available: %d\n\n", md::hardware_threads());

  {
    std::vector<unsigned> periods{1, 2, 3};
    std::vector<unsigned> indices{0, 1, 2};
    md::WitnessOptions serial_opts;
    serial_opts.exec = md::ExecMode::serial;
    md::WitnessOptions parallel_opts;
    parallel_opts.exec = md::ExecMode::parallel;
    double s = time_once([&] { md::find_witness(4, periods, indices, serial_opts); });
    double p = time_once([&] { md::find_witness(4, periods, indices, parallel_opts); });
    report("find_witness n=4 k=3", s, p);
  }

  {
    md::WitnessOptions serial_opts;
    serial_opts.exec = md::ExecMode::serial;
    md::WitnessOptions parallel_opts;
    parallel_opts.exec = md::ExecMode::parallel;
    double s = time_once([&] { md::sweep_witness(4, 3, 4096, serial_opts); });
    double p = time_once([&] { md::sweep_witness(4, 3, 4096, parallel_opts); });
    report("sweep_witness n=4", s, p);
  }

  {
    md::LoopPath loop;
    loop.n = 2;
    loop.m = 3;
    loop.base = md::Complex(md::Real("-1.6"), md::Real("0.1"));
    md::LoopSegment line_in;
    line_in.kind = md::LoopSegment::Kind::line;
    line_in.to = md::Complex(md::Real("-1.6549"), md::Real(0));
    md::LoopSegment circle;
    circle.kind = md::LoopSegment::Kind::circle;
    circle.center = md::Complex(md::Real("-1.7549"), md::Real(0));
    circle.radius = md::Real("0.1");
    circle.turns = 1;
    circle.steps = 48;
    md::LoopSegment line_out;
    line_out.kind = md::LoopSegment::Kind::line;
    line_out.to = loop.base;
    loop.segments = {line_in, circle, line_out};

    md::TrackOptions serial_opts;
    serial_opts.exec = md::ExecMode::serial;
    md::TrackOptions parallel_opts;
    parallel_opts.exec = md::ExecMode::parallel;
    double s = time_once([&] { md::track_loop(loop, serial_opts); });
    double p = time_once([&] { md::track_loop(loop, parallel_opts); });
    report("track_loop n=2 m=3", s, p);
  }

  return 0;
}
