#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "multdyn/dynamics.hpp"
#include "multdyn/linalg.hpp"
#include "multdyn/numbertheory.hpp"
#include "multdyn/oracle.hpp"
#include "multdyn/parallel.hpp"

namespace multdyn {

// The multiplier Jacobian of k marked power-map orbits with respect to the
// selected coefficient directions, with a certified determinant.
struct JacobianReport {
  unsigned n = 0;
  std::vector<unsigned> periods;
  std::vector<unsigned> indices;
  std::vector<PowerMapOrbitPoint> points;
  ComplexMatrix matrix;
  Complex det;
  Real det_error_bound;
  bool nondegenerate = false;
};

// Vector of multipliers of the marked orbits.
std::vector<Complex> multiplier_map(const MarkedPolynomial& marked);

// Entry (r, s) is d(multiplier of orbit r)/d(a_{j_s}) at the power map,
// assembled from the closed-form derivative polynomials.
JacobianReport jacobian_at_power_map(unsigned n, std::span<const unsigned> periods,
                                     std::span<const unsigned> indices,
                                     std::span<const PowerMapOrbitPoint> points);

struct WitnessOptions {
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  ExecMode exec = ExecMode::parallel;
  // Each escalation doubles the working precision and retries.
  unsigned max_precision_escalations = 2;
};

// Searches periodic points of the power map making the Jacobian certifiably
// nondegenerate, by induction on the number of orbits: solve the minor that
// drops the first period and the highest-degree column, then scan orbit
// representatives of the first period for a certified determinant.
JacobianReport find_witness(unsigned n, std::span<const unsigned> periods,
                            std::span<const unsigned> indices,
                            const WitnessOptions& options = {});

// Finite-difference Jacobian at the power map for the same marking; used to
// cross-check the closed-form assembly.
ComplexMatrix fd_jacobian_at_power_map(unsigned n,
                                       std::span<const unsigned> periods,
                                       std::span<const unsigned> indices,
                                       std::span<const PowerMapOrbitPoint> points,
                                       const ContinuationSettings& settings = {});

struct SweepCase {
  std::vector<unsigned> periods;
  std::vector<unsigned> indices;
  JacobianReport report;
  // max over entries of the relative disagreement with the fd Jacobian
  Real fd_entry_rel_error;
  Real fd_det_rel_error;
};

// Every strictly increasing index tuple and every period vector with entries
// in [1, max_period] and n^{m_r} <= npow_cap; each case must certify and
// agree with the finite-difference Jacobian.
std::vector<SweepCase> sweep_witness(unsigned n, unsigned max_period,
                                     std::uint64_t npow_cap = 4096,
                                     const WitnessOptions& options = {});

}  // namespace multdyn
