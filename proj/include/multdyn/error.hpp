#pragma once

#include <stdexcept>
#include <string>

namespace multdyn {

enum class Errc {
  invalid_argument,
  index_out_of_range,
  shape_mismatch,
  too_many_orbits,
  not_periodic,
  budget_exceeded,
  witness_not_certified,
  newton_diverged,
  singular_jacobian,
  path_stalled,
  ambiguous_matching,
  orbit_not_simple,
  critical_orbit,
  step_underflow,
};

const char* errc_name(Errc c);

// Process exit status groups: 2 validation, 3 budget, 4 certification.
int exit_code_for(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace multdyn
