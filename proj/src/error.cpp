#include "multdyn/error.hpp"

namespace multdyn {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::too_many_orbits: return "TooManyOrbits";
    case Errc::not_periodic: return "NotPeriodic";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::witness_not_certified: return "WitnessNotCertified";
    case Errc::newton_diverged: return "NewtonDiverged";
    case Errc::singular_jacobian: return "SingularJacobian";
    case Errc::path_stalled: return "PathStalled";
    case Errc::ambiguous_matching: return "AmbiguousMatching";
    case Errc::orbit_not_simple: return "OrbitNotSimple";
    case Errc::critical_orbit: return "CriticalOrbit";
    case Errc::step_underflow: return "StepUnderflow";
  }
  return "UnknownError";
}

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::invalid_argument:
    case Errc::index_out_of_range:
    case Errc::shape_mismatch:
    case Errc::too_many_orbits:
    case Errc::not_periodic:
    case Errc::step_underflow:
      return 2;
    case Errc::budget_exceeded:
      return 3;
    case Errc::witness_not_certified:
    case Errc::newton_diverged:
    case Errc::singular_jacobian:
    case Errc::path_stalled:
    case Errc::ambiguous_matching:
    case Errc::orbit_not_simple:
    case Errc::critical_orbit:
      return 4;
  }
  return 1;
}

}  // namespace multdyn
