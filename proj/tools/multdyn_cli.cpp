// Command-line front end: every subcommand prints one machine-readable
// report (JSON by default, CSV for flat tables) with the run configuration
// embedded for reproducibility.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "multdyn/derivatives.hpp"
#include "multdyn/dynamics.hpp"
#include "multdyn/error.hpp"
#include "multdyn/monodromy.hpp"
#include "multdyn/numbertheory.hpp"
#include "multdyn/oracle.hpp"
#include "multdyn/serialize.hpp"
#include "multdyn/witness.hpp"

namespace md = multdyn;
using Json = nlohmann::json;

namespace {

struct RunConfig {
  unsigned prec_bits = md::kDefaultPrecisionBits;
  std::string format = "json";
  std::uint64_t cap_enum = md::kDefaultEnumerationCap;
  unsigned cap_degree = md::kDefaultIterateDegreeCap;
  std::uint64_t seed = 0;
  std::string exec = "parallel";

  md::ExecMode exec_mode() const {
    return exec == "serial" ? md::ExecMode::serial : md::ExecMode::parallel;
  }

  Json to_json() const {
    return Json{{"prec_bits", prec_bits}, {"format", format},
                {"cap_enum", cap_enum},   {"cap_degree", cap_degree},
                {"seed", seed},           {"exec", exec}};
  }
};

Json bigint_to_json(const md::BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return Json(v.convert_to<std::int64_t>());
  }
  return Json(v.str());
}

void emit(const RunConfig& cfg, const std::string& command, Json result,
          const std::string& csv_fallback = "") {
  if (cfg.format == "csv" && !csv_fallback.empty()) {
    std::cout << csv_fallback;
    return;
  }
  Json report{{"command", command}, {"config", cfg.to_json()}, {"result", std::move(result)}};
  std::cout << report.dump(2) << "\n";
}

// Complex CLI literal: "re" or "re:im", both decimal strings.
md::Complex parse_complex(const std::string& text) {
  auto pos = text.find(':');
  if (pos == std::string::npos) {
    return md::Complex(md::real_from_string(text));
  }
  return md::Complex(md::real_from_string(text.substr(0, pos)),
                     md::real_from_string(text.substr(pos + 1)));
}

std::string csv_complex(const md::Complex& z, int digits = 0) {
  return md::to_decimal_string(z.re, digits) + "," + md::to_decimal_string(z.im, digits);
}

std::vector<unsigned> parse_uint_list(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  if (out.empty()) md::raise(md::Errc::invalid_argument, "empty integer list");
  return out;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"periodic-orbit multiplier derivatives, Jacobian witnesses and "
               "orbit monodromy for centered polynomial maps"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--prec-bits", cfg.prec_bits, "working precision in bits (>= 64)")
      ->capture_default_str();
  app.add_option("--format", cfg.format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--cap-enum", cfg.cap_enum, "orbit enumeration cap on n^m - 1")
      ->capture_default_str();
  app.add_option("--cap-degree", cfg.cap_degree, "iterate degree cap on n^m")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized sampling subcommands")
      ->capture_default_str();
  app.add_option("--exec", cfg.exec, "kernel execution mode")
      ->check(CLI::IsMember({"serial", "parallel"}))
      ->capture_default_str();

  unsigned n = 2, m = 1, j = 0, max_period = 3, period = 1;
  std::uint64_t residue = 0;
  std::string periods_text, indices_text, coeffs_text, orbit_seed_text, loop_file;

  auto* census_cmd = app.add_subcommand("census", "exact period-m point counts of z -> z^n");
  census_cmd->add_option("-n", n, "degree")->required();
  census_cmd->add_option("-m", m, "period")->required();

  auto* orbits_cmd = app.add_subcommand("orbits", "exact-period orbit representatives of z -> z^n");
  orbits_cmd->add_option("-n", n, "degree")->required();
  orbits_cmd->add_option("-m", m, "period")->required();

  auto* pdeg_cmd = app.add_subcommand("pdeg", "degree of the multiplier-derivative polynomial");
  pdeg_cmd->add_option("-n", n, "degree")->required();
  pdeg_cmd->add_option("-j", j, "coefficient index")->required();
  pdeg_cmd->add_option("-m", m, "period")->required();

  auto* ppoly_cmd = app.add_subcommand("ppoly", "multiplier-derivative polynomial, exact coefficients");
  ppoly_cmd->add_option("-n", n, "degree")->required();
  ppoly_cmd->add_option("-j", j, "coefficient index")->required();
  ppoly_cmd->add_option("-m", m, "period")->required();

  auto* deriv_cmd = app.add_subcommand("deriv", "closed-form multiplier derivative at the power map");
  deriv_cmd->add_option("-n", n, "degree")->required();
  deriv_cmd->add_option("-m", m, "period")->required();
  deriv_cmd->add_option("-j", j, "coefficient index")->required();
  deriv_cmd->add_option("--residue", residue, "phase residue t of the periodic point")->required();

  auto* witness_cmd = app.add_subcommand("witness", "certified nondegenerate multiplier Jacobian");
  witness_cmd->add_option("-n", n, "degree")->required();
  witness_cmd->add_option("--periods", periods_text, "comma-separated periods")->required();
  witness_cmd->add_option("--indices", indices_text, "comma-separated coefficient indices")->required();

  auto* vgrad_cmd = app.add_subcommand("verify-gradient",
                                    "closed form vs finite differences at a general parameter");
  vgrad_cmd->add_option("-n", n, "degree")->required();
  vgrad_cmd->add_option("--coeffs", coeffs_text,
                        "comma-separated a_0..a_{n-2}, each re or re:im")->required();
  vgrad_cmd->add_option("--orbit-seed", orbit_seed_text, "approximate periodic point, re or re:im")
      ->required();
  vgrad_cmd->add_option("--period", period, "orbit period")->required();
  vgrad_cmd->add_option("--indices", indices_text, "comma-separated coefficient indices")->required();

  auto* disc_cmd = app.add_subcommand("discriminant", "degeneracy parameters on the unicritical slice");
  disc_cmd->add_option("-n", n, "degree")->required();
  disc_cmd->add_option("-m", m, "period")->required();

  auto* mono_cmd = app.add_subcommand("monodromy", "orbit permutation induced by a parameter loop");
  mono_cmd->add_option("-n", n, "degree")->required();
  mono_cmd->add_option("-m", m, "period")->required();
  mono_cmd->add_option("--loop", loop_file, "loop description file (JSON)")->required();

  auto* sweep_cmd = app.add_subcommand("sweep-witness", "witness certification over all index tuples "
                                    "and bounded period vectors");
  sweep_cmd->add_option("-n", n, "degree")->required();
  sweep_cmd->add_option("--max-period", max_period, "largest period entry")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // invalid command line is a validation error
  }

  if (cfg.prec_bits < md::kMinPrecisionBits) {
    md::raise(md::Errc::invalid_argument, "--prec-bits must be at least 64");
  }
  md::set_precision_bits(cfg.prec_bits);

  if (census_cmd->parsed()) {
    md::OrbitCensus c = md::census(n, m);
    std::string csv = "nu,nu_hat,orbit_count\n" + c.nu.str() + "," + c.nu_hat.str() +
                      "," + c.orbit_count.str() + "\n";
    emit(cfg, "census",
         Json{{"n", n},
              {"m", m},
              {"nu", bigint_to_json(c.nu)},
              {"nu_hat", bigint_to_json(c.nu_hat)},
              {"orbit_count", bigint_to_json(c.orbit_count)}},
         csv);
  } else if (orbits_cmd->parsed()) {
    auto reps = md::enumerate_orbit_representatives(n, m, cfg.cap_enum);
    Json list = Json::array();
    std::string csv = "residue,modulus,re,im\n";
    for (const auto& r : reps) {
      list.push_back(Json{{"t", r.t}, {"modulus", r.modulus},
                          {"point", md::complex_to_json(r.value(), 30)}});
      csv += std::to_string(r.t) + "," + std::to_string(r.modulus) + "," +
             csv_complex(r.value(), 30) + "\n";
    }
    emit(cfg, "orbits",
         Json{{"n", n}, {"m", m}, {"orbit_count", reps.size()}, {"representatives", list}},
         csv);
  } else if (pdeg_cmd->parsed()) {
    std::uint64_t d = md::derivative_polynomial_degree(n, j, m);
    emit(cfg, "pdeg", Json{{"n", n}, {"j", j}, {"m", m}, {"degree", d}},
         "degree\n" + std::to_string(d) + "\n");
  } else if (ppoly_cmd->parsed()) {
    md::SparsePolynomial p = md::derivative_polynomial(n, j, m);
    std::string csv = "exponent,coefficient\n";
    for (const auto& [e, c] : p.terms()) csv += std::to_string(e) + "," + c.str() + "\n";
    Json result = md::sparse_to_json(p);
    result["n"] = n;
    result["j"] = j;
    result["m"] = m;
    result["degree"] = p.degree();
    emit(cfg, "ppoly", result, csv);
  } else if (deriv_cmd->parsed()) {
    std::uint64_t modulus = md::power_map_modulus(n, m, cfg.cap_enum);
    md::PowerMapOrbitPoint point{n, m, residue % modulus, modulus};
    if (point.exact_period() != m) {
      md::raise(md::Errc::not_periodic,
                "residue " + std::to_string(residue) + " does not have exact period " +
                    std::to_string(m));
    }
    md::Complex value = md::power_map_multiplier_derivative(n, m, j, point);
    emit(cfg, "deriv",
         Json{{"n", n}, {"m", m}, {"j", j}, {"residue", point.t},
              {"value", md::complex_to_json(value)}},
         "re,im\n" + csv_complex(value) + "\n");
  } else if (witness_cmd->parsed()) {
    auto periods = parse_uint_list(periods_text);
    auto indices = parse_uint_list(indices_text);
    md::WitnessOptions options;
    options.enumeration_cap = cfg.cap_enum;
    options.exec = cfg.exec_mode();
    md::JacobianReport report = md::find_witness(n, periods, indices, options);
    emit(cfg, "witness", md::jacobian_report_to_json(report));
  } else if (vgrad_cmd->parsed()) {
    std::vector<md::Complex> coeffs;
    {
      std::stringstream ss(coeffs_text);
      std::string item;
      while (std::getline(ss, item, ',')) coeffs.push_back(parse_complex(item));
    }
    md::CenteredPolynomial p(n, std::move(coeffs));
    auto indices = parse_uint_list(indices_text);
    md::Complex seed = parse_complex(orbit_seed_text);
    std::vector<md::Complex> approx;
    md::Complex z = seed;
    for (unsigned i = 0; i < period; ++i) {
      approx.push_back(z);
      z = p.evaluate(z);
    }
    md::ContinuationSettings settings;
    std::vector<md::Complex> orbit = md::refine_orbit(p, approx, settings);
    auto closed = md::multiplier_gradient(p, orbit, indices);
    auto fd = md::fd_gradient(p, orbit, indices, settings);
    Json rows = Json::array();
    md::Real worst(0);
    for (std::size_t i = 0; i < indices.size(); ++i) {
      md::Real denom = md::abs(fd[i]);
      if (denom == 0) denom = md::Real(1);
      md::Real rel = md::abs(closed[i] - fd[i]) / denom;
      worst = max(worst, rel);
      rows.push_back(Json{{"index", indices[i]},
                          {"closed_form", md::complex_to_json(closed[i])},
                          {"finite_difference", md::complex_to_json(fd[i])},
                          {"rel_error", md::to_decimal_string(rel, 8)}});
    }
    Json orbit_json = Json::array();
    for (const auto& w : orbit) orbit_json.push_back(md::complex_to_json(w, 30));
    emit(cfg, "verify-gradient",
         Json{{"n", n}, {"period", period}, {"orbit", orbit_json},
              {"gradients", rows}, {"max_rel_error", md::to_decimal_string(worst, 8)}});
  } else if (disc_cmd->parsed()) {
    md::DegeneracySet set = md::degeneracy_parameters(n, m, cfg.cap_degree);
    std::string csv = "re,im\n";
    for (const auto& c : set.parameters) csv += csv_complex(c, 30) + "\n";
    emit(cfg, "discriminant", md::degeneracy_to_json(set), csv);
  } else if (mono_cmd->parsed()) {
    std::ifstream in(loop_file);
    if (!in) md::raise(md::Errc::invalid_argument, "cannot open loop file " + loop_file);
    Json jloop = Json::parse(in);
    md::LoopPath loop = md::loop_from_json(jloop);
    if (loop.n != n || loop.m != m) {
      md::raise(md::Errc::invalid_argument, "loop file (n, m) disagrees with flags");
    }
    md::TrackOptions options;
    options.degree_cap = cfg.cap_degree;
    options.exec = cfg.exec_mode();
    md::TrackResult result = md::track_loop(loop, options);
    Json points = Json::array();
    for (const auto& w : result.start_points) points.push_back(md::complex_to_json(w, 30));
    emit(cfg, "monodromy",
         Json{{"n", n},
              {"m", m},
              {"orbit_count", result.orbits.size()},
              {"start_points", points},
              {"orbits", result.orbits},
              {"point_perm", result.permutation.point_perm},
              {"point_cycles", md::cycle_notation(result.permutation.point_perm)},
              {"orbit_perm", result.permutation.orbit_perm},
              {"orbit_cycles", md::cycle_notation(result.permutation.orbit_perm)}});
  } else if (sweep_cmd->parsed()) {
    md::WitnessOptions options;
    options.enumeration_cap = cfg.cap_enum;
    options.exec = cfg.exec_mode();
    auto cases = md::sweep_witness(n, max_period, 4096, options);
    Json list = Json::array();
    bool all_ok = true;
    const md::Real fd_tol("1e-6");
    for (const auto& c : cases) {
      bool ok = c.report.nondegenerate && c.fd_entry_rel_error < fd_tol &&
                c.fd_det_rel_error < fd_tol;
      all_ok = all_ok && ok;
      Json residues = Json::array();
      for (const auto& pt : c.report.points) residues.push_back(pt.t);
      list.push_back(Json{{"periods", c.periods},
                          {"indices", c.indices},
                          {"residues", residues},
                          {"det", md::complex_to_json(c.report.det, 30)},
                          {"fd_entry_rel_error", md::to_decimal_string(c.fd_entry_rel_error, 6)},
                          {"fd_det_rel_error", md::to_decimal_string(c.fd_det_rel_error, 6)},
                          {"certified", ok}});
    }
    emit(cfg, "sweep-witness",
         Json{{"n", n}, {"max_period", max_period}, {"cases", list},
              {"case_count", cases.size()}, {"all_certified", all_ok}});
    if (!all_ok) {
      md::raise(md::Errc::witness_not_certified, "sweep contains uncertified cases");
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const md::Error& e) {
    Json err{{"error", {{"kind", md::errc_name(e.code())}, {"message", e.what()}}}};
    std::cerr << err.dump(2) << "\n";
    return md::exit_code_for(e.code());
  } catch (const std::exception& e) {
    Json err{{"error", {{"kind", "InternalError"}, {"message", e.what()}}}};
    std::cerr << err.dump(2) << "\n";
    return 1;
  }
}
