#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace multdyn {

// Every parallel kernel has a serial twin selected by this flag; outputs are
// identical by construction, which is what the equivalence tests check.
enum class ExecMode { serial, parallel };

int hardware_threads();

// Runs body(i) for i in [0, count). In parallel mode iterations are spread
// over OpenMP threads; the first exception (lowest index) is rethrown after
// the region joins so errors stay deterministic.
void for_each_index(std::size_t count, ExecMode mode,
                    const std::function<void(std::size_t)>& body);

}  // namespace multdyn
