#include "multdyn/witness.hpp"

#include <algorithm>
#include <mutex>
#include <utility>

#include "multdyn/derivatives.hpp"
#include "multdyn/error.hpp"

namespace multdyn {

namespace {

void validate_marking(unsigned n, std::span<const unsigned> periods,
                      std::span<const unsigned> indices) {
  if (n < 2) raise(Errc::invalid_argument, "degree must be >= 2");
  if (periods.size() != indices.size()) {
    raise(Errc::shape_mismatch, "periods and indices must have equal length");
  }
  const std::size_t k = periods.size();
  if (k == 0) raise(Errc::shape_mismatch, "at least one orbit required");
  if (k > static_cast<std::size_t>(n - 1)) {
    raise(Errc::too_many_orbits,
          "k = " + std::to_string(k) + " orbits exceeds n - 1 = " + std::to_string(n - 1));
  }
  for (std::size_t s = 0; s < k; ++s) {
    if (indices[s] > n - 2) {
      raise(Errc::index_out_of_range,
            "index " + std::to_string(indices[s]) + " outside [0, " +
                std::to_string(n - 2) + "]");
    }
    if (s > 0 && indices[s] <= indices[s - 1]) {
      raise(Errc::invalid_argument, "indices must be strictly increasing");
    }
    if (periods[s] < 1) raise(Errc::invalid_argument, "periods must be >= 1");
  }
}

Complex jacobian_entry(const PowerMapOrbitPoint& point,
                       const SparsePolynomial& dpoly) {
  // (1/z) * D(1/z) with 1/z as an exact root-of-unity phase.
  std::uint64_t inv_t = (point.modulus - point.t % point.modulus) % point.modulus;
  Complex inv = unit_root(point.modulus, inv_t);
  return inv * dpoly.evaluate_at_unit_root(point.modulus, inv_t);
}

ComplexMatrix assemble_matrix(unsigned n, std::span<const unsigned> periods,
                              std::span<const unsigned> indices,
                              std::span<const PowerMapOrbitPoint> points) {
  const std::size_t k = periods.size();
  // One derivative polynomial per (index, period) pair actually used.
  ComplexMatrix matrix(k, std::vector<Complex>(k));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = 0; s < k; ++s) {
      SparsePolynomial dpoly = derivative_polynomial(n, indices[s], periods[r]);
      matrix[r][s] = jacobian_entry(points[r], dpoly);
    }
  }
  return matrix;
}

JacobianReport build_report(unsigned n, std::span<const unsigned> periods,
                            std::span<const unsigned> indices,
                            std::span<const PowerMapOrbitPoint> points) {
  JacobianReport report;
  report.n = n;
  report.periods.assign(periods.begin(), periods.end());
  report.indices.assign(indices.begin(), indices.end());
  report.points.assign(points.begin(), points.end());
  report.matrix = assemble_matrix(n, periods, indices, points);
  auto det = determinant_with_error(report.matrix);
  report.det = det.det;
  report.det_error_bound = det.error_bound;
  report.nondegenerate = abs(report.det) > report.det_error_bound;
  if (report.nondegenerate) {
    // A certified determinant forces pairwise distinct orbits (equal rows
    // would be singular); verify anyway.
    for (std::size_t r = 0; r < points.size(); ++r) {
      for (std::size_t s = r + 1; s < points.size(); ++s) {
        if (periods[r] == periods[s] && points[r].modulus == points[s].modulus &&
            points[r].canonical_residue() == points[s].canonical_residue()) {
          raise(Errc::witness_not_certified,
                "certified determinant with coincident orbits; inconsistent state");
        }
      }
    }
  }
  return report;
}

JacobianReport find_witness_impl(unsigned n, std::span<const unsigned> periods,
                                 std::span<const unsigned> indices,
                                 const WitnessOptions& options) {
  const std::size_t k = periods.size();
  const unsigned m1 = periods[0];
  auto candidates = enumerate_orbit_representatives(n, m1, options.enumeration_cap);

  std::vector<PowerMapOrbitPoint> tail_points;
  if (k > 1) {
    // Pivot on the column whose derivative polynomial has maximal degree in
    // the first-period row; the degrees are pairwise distinct, so the
    // determinant keeps that degree as a polynomial in 1/z_1 and cannot
    // vanish for every candidate orbit.
    std::size_t pivot = 0;
    std::uint64_t best_degree = 0;
    for (std::size_t s = 0; s < k; ++s) {
      std::uint64_t d = derivative_polynomial_degree(n, indices[s], m1);
      if (s == 0 || d > best_degree) {
        best_degree = d;
        pivot = s;
      }
    }
    std::vector<unsigned> sub_periods(periods.begin() + 1, periods.end());
    std::vector<unsigned> sub_indices;
    for (std::size_t s = 0; s < k; ++s) {
      if (s != pivot) sub_indices.push_back(indices[s]);
    }
    JacobianReport minor = find_witness_impl(n, sub_periods, sub_indices, options);
    tail_points = std::move(minor.points);
  }

  auto report_for = [&](std::size_t i) {
    std::vector<PowerMapOrbitPoint> points;
    points.reserve(k);
    points.push_back(candidates[i]);
    points.insert(points.end(), tail_points.begin(), tail_points.end());
    return build_report(n, periods, indices, points);
  };

  // Scan ascending canonical residues; the first certified candidate wins,
  // so serial and parallel scans return the same witness. The parallel scan
  // works chunk by chunk and stops after any chunk that certifies.
  if (options.exec == ExecMode::serial) {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      JacobianReport report = report_for(i);
      if (report.nondegenerate) return report;
    }
  } else {
    const std::size_t chunk =
        std::max<std::size_t>(1, 2 * static_cast<std::size_t>(hardware_threads()));
    for (std::size_t lo = 0; lo < candidates.size(); lo += chunk) {
      const std::size_t hi = std::min(candidates.size(), lo + chunk);
      std::vector<std::optional<JacobianReport>> reports(hi - lo);
      for_each_index(hi - lo, ExecMode::parallel, [&](std::size_t off) {
        JacobianReport report = report_for(lo + off);
        if (report.nondegenerate) reports[off] = std::move(report);
      });
      for (auto& r : reports) {
        if (r) return std::move(*r);
      }
    }
  }
  raise(Errc::witness_not_certified,
        "no candidate among " + std::to_string(candidates.size()) +
            " period-" + std::to_string(m1) +
            " orbits certified at the current precision");
}

std::mutex g_escalation_mutex;

}  // namespace

std::vector<Complex> multiplier_map(const MarkedPolynomial& marked) {
  marked.certify();
  std::vector<Complex> lambdas;
  lambdas.reserve(marked.marked_count());
  for (std::size_t r = 0; r < marked.marked_count(); ++r) {
    auto orbit = orbit_of(marked.poly(), marked.points()[r], marked.periods()[r],
                          marked.tolerance());
    lambdas.push_back(multiplier(marked.poly(), orbit).lambda);
  }
  return lambdas;
}

JacobianReport jacobian_at_power_map(unsigned n, std::span<const unsigned> periods,
                                     std::span<const unsigned> indices,
                                     std::span<const PowerMapOrbitPoint> points) {
  validate_marking(n, periods, indices);
  if (points.size() != periods.size()) {
    raise(Errc::shape_mismatch, "points and periods must have equal length");
  }
  for (std::size_t r = 0; r < points.size(); ++r) {
    if (points[r].n != n) raise(Errc::shape_mismatch, "point degree mismatch");
    if (points[r].exact_period() != periods[r]) {
      raise(Errc::not_periodic,
            "point " + std::to_string(r) + " does not have exact period " +
                std::to_string(periods[r]));
    }
  }
  return build_report(n, periods, indices, points);
}

JacobianReport find_witness(unsigned n, std::span<const unsigned> periods,
                            std::span<const unsigned> indices,
                            const WitnessOptions& options) {
  validate_marking(n, periods, indices);
  try {
    return find_witness_impl(n, periods, indices, options);
  } catch (const Error& e) {
    if (e.code() != Errc::witness_not_certified) throw;
  }
  // Rare fallback: double the working precision and rescan, serialized so
  // concurrent sweeps are not disturbed mid-flight.
  std::lock_guard<std::mutex> lock(g_escalation_mutex);
  unsigned bits = precision_bits();
  for (unsigned attempt = 0; attempt < options.max_precision_escalations; ++attempt) {
    bits *= 2;
    ScopedPrecision scope(bits);
    try {
      return find_witness_impl(n, periods, indices, options);
    } catch (const Error& e) {
      if (e.code() != Errc::witness_not_certified) throw;
    }
  }
  raise(Errc::witness_not_certified,
        "witness search failed after precision escalation to " +
            std::to_string(bits) + " bits");
}

ComplexMatrix fd_jacobian_at_power_map(unsigned n,
                                       std::span<const unsigned> periods,
                                       std::span<const unsigned> indices,
                                       std::span<const PowerMapOrbitPoint> points,
                                       const ContinuationSettings& settings) {
  validate_marking(n, periods, indices);
  const std::size_t k = periods.size();
  CenteredPolynomial p0 = CenteredPolynomial::power_map(n);
  ComplexMatrix jac(k, std::vector<Complex>(k));
  for (std::size_t r = 0; r < k; ++r) {
    std::vector<Complex> orbit;
    orbit.reserve(periods[r]);
    for (std::uint64_t residue : points[r].orbit_residues()) {
      orbit.push_back(unit_root(points[r].modulus, residue));
    }
    std::vector<Complex> row =
        fd_gradient(p0, orbit, std::span<const unsigned>(indices), settings);
    jac[r] = std::move(row);
  }
  return jac;
}

std::vector<SweepCase> sweep_witness(unsigned n, unsigned max_period,
                                     std::uint64_t npow_cap,
                                     const WitnessOptions& options) {
  if (n < 2) raise(Errc::invalid_argument, "degree must be >= 2");
  // Periods allowed: m with n^m <= npow_cap.
  std::vector<unsigned> allowed_periods;
  for (unsigned m = 1; m <= max_period; ++m) {
    BigInt p = pow(BigInt(n), m);
    if (p > BigInt(npow_cap)) break;
    allowed_periods.push_back(m);
  }
  if (allowed_periods.empty()) {
    raise(Errc::budget_exceeded, "no period satisfies n^m <= cap");
  }

  // All strictly increasing index tuples over [0, n-2].
  std::vector<std::vector<unsigned>> index_tuples;
  const unsigned idx_count = n - 1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << idx_count); ++mask) {
    std::vector<unsigned> tuple;
    for (unsigned j = 0; j < idx_count; ++j) {
      if (mask & (std::uint64_t(1) << j)) tuple.push_back(j);
    }
    if (tuple.size() <= static_cast<std::size_t>(n - 1)) {
      index_tuples.push_back(std::move(tuple));
    }
  }
  std::sort(index_tuples.begin(), index_tuples.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });

  // Case list: for each index tuple of size k, all period vectors in
  // allowed_periods^k.
  std::vector<std::pair<std::vector<unsigned>, std::vector<unsigned>>> cases;
  for (const auto& tuple : index_tuples) {
    const std::size_t k = tuple.size();
    std::vector<std::size_t> sel(k, 0);
    while (true) {
      std::vector<unsigned> periods(k);
      for (std::size_t i = 0; i < k; ++i) periods[i] = allowed_periods[sel[i]];
      cases.emplace_back(periods, tuple);
      std::size_t pos = 0;
      while (pos < k && ++sel[pos] == allowed_periods.size()) {
        sel[pos] = 0;
        ++pos;
      }
      if (pos == k) break;
    }
  }

  std::vector<SweepCase> results(cases.size());
  WitnessOptions case_options = options;
  case_options.exec = ExecMode::serial;  // parallelism lives at the case level
  for_each_index(cases.size(), options.exec, [&](std::size_t i) {
    const auto& [periods, indices] = cases[i];
    SweepCase out;
    out.periods = periods;
    out.indices = indices;
    out.report = find_witness(n, periods, indices, case_options);

    ComplexMatrix fd = fd_jacobian_at_power_map(n, periods, indices, out.report.points);
    Real entry_err(0);
    const std::size_t k = periods.size();
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t s = 0; s < k; ++s) {
        Real denom = abs(fd[r][s]);
        if (denom == 0) denom = Real(1);
        entry_err = max(entry_err, abs(out.report.matrix[r][s] - fd[r][s]) / denom);
      }
    }
    out.fd_entry_rel_error = entry_err;
    auto fd_det = determinant_with_error(fd);
    out.fd_det_rel_error = abs(out.report.det - fd_det.det) / abs(fd_det.det);
    results[i] = std::move(out);
  });
  return results;
}

}  // namespace multdyn
