#include "multdyn/serialize.hpp"

#include <nlohmann/json.hpp>

#include "multdyn/error.hpp"

namespace multdyn {

namespace {

Real real_from_json(const Json& j) {
  if (j.is_string()) return real_from_string(j.get<std::string>());
  if (j.is_number()) return Real(j.get<double>());
  raise(Errc::invalid_argument, "expected a number or decimal string");
}

}  // namespace

Json complex_to_json(const Complex& z, int digits) {
  return Json::array({to_decimal_string(z.re, digits), to_decimal_string(z.im, digits)});
}

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    raise(Errc::invalid_argument, "complex value must be a [re, im] pair");
  }
  return Complex(real_from_json(j[0]), real_from_json(j[1]));
}

Json poly_to_json(const CenteredPolynomial& p) {
  Json coeffs = Json::array();
  for (const Complex& a : p.coeffs()) coeffs.push_back(complex_to_json(a));
  return Json{{"n", p.degree()}, {"coeffs", std::move(coeffs)}};
}

CenteredPolynomial poly_from_json(const Json& j) {
  unsigned n = j.at("n").get<unsigned>();
  std::vector<Complex> coeffs;
  for (const auto& item : j.at("coeffs")) coeffs.push_back(complex_from_json(item));
  return CenteredPolynomial(n, std::move(coeffs));
}

Json marked_to_json(const MarkedPolynomial& marked) {
  Json j = poly_to_json(marked.poly());
  j["periods"] = marked.periods();
  Json points = Json::array();
  for (const Complex& w : marked.points()) points.push_back(complex_to_json(w));
  j["points"] = std::move(points);
  return j;
}

MarkedPolynomial marked_from_json(const Json& j) {
  CenteredPolynomial poly = poly_from_json(j);
  std::vector<unsigned> periods = j.at("periods").get<std::vector<unsigned>>();
  std::vector<Complex> points;
  for (const auto& item : j.at("points")) points.push_back(complex_from_json(item));
  return MarkedPolynomial(std::move(poly), std::move(periods), std::move(points));
}

Json sparse_to_json(const SparsePolynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back(Json::array({e, c.str()}));
  }
  return Json{{"terms", std::move(terms)}};
}

SparsePolynomial sparse_from_json(const Json& j) {
  SparsePolynomial p;
  for (const auto& term : j.at("terms")) {
    if (!term.is_array() || term.size() != 2) {
      raise(Errc::invalid_argument, "sparse term must be [exponent, coefficient]");
    }
    std::uint64_t e = term[0].get<std::uint64_t>();
    BigInt c = term[1].is_string() ? BigInt(term[1].get<std::string>())
                                   : BigInt(term[1].get<long long>());
    p.add_term(e, c);
  }
  return p;
}

Json jacobian_report_to_json(const JacobianReport& report) {
  Json residues = Json::array();
  for (const auto& pt : report.points) {
    residues.push_back(Json{{"t", pt.t}, {"modulus", pt.modulus}});
  }
  Json matrix = Json::array();
  for (const auto& row : report.matrix) {
    Json jrow = Json::array();
    for (const auto& entry : row) jrow.push_back(complex_to_json(entry, 30));
    matrix.push_back(std::move(jrow));
  }
  return Json{{"n", report.n},
              {"periods", report.periods},
              {"indices", report.indices},
              {"residues", std::move(residues)},
              {"matrix", std::move(matrix)},
              {"det", complex_to_json(report.det)},
              {"det_error_bound", to_decimal_string(report.det_error_bound, 20)},
              {"nondegenerate", report.nondegenerate}};
}

Json degeneracy_to_json(const DegeneracySet& set) {
  Json params = Json::array();
  for (const Complex& c : set.parameters) params.push_back(complex_to_json(c, 40));
  return Json{{"n", set.n},
              {"m", set.m},
              {"parameters", std::move(params)},
              {"discriminant", sparse_to_json(set.discriminant)}};
}

LoopPath loop_from_json(const Json& j) {
  LoopPath loop;
  loop.n = j.at("n").get<unsigned>();
  loop.m = j.at("m").get<unsigned>();
  loop.base = complex_from_json(j.at("base"));
  for (const auto& seg : j.at("segments")) {
    LoopSegment s;
    std::string kind = seg.at("kind").get<std::string>();
    if (kind == "circle") {
      s.kind = LoopSegment::Kind::circle;
      s.center = complex_from_json(seg.at("center"));
      s.radius = real_from_json(seg.at("radius"));
      s.turns = seg.value("turns", 1);
      s.steps = seg.value("steps", 64u);
    } else if (kind == "line") {
      s.kind = LoopSegment::Kind::line;
      s.to = complex_from_json(seg.at("to"));
    } else {
      raise(Errc::invalid_argument, "unknown segment kind '" + kind + "'");
    }
    loop.segments.push_back(std::move(s));
  }
  return loop;
}

Json loop_to_json(const LoopPath& loop) {
  Json segments = Json::array();
  for (const auto& seg : loop.segments) {
    if (seg.kind == LoopSegment::Kind::circle) {
      segments.push_back(Json{{"kind", "circle"},
                              {"center", complex_to_json(seg.center)},
                              {"radius", to_decimal_string(seg.radius, 30)},
                              {"turns", seg.turns},
                              {"steps", seg.steps}});
    } else {
      segments.push_back(Json{{"kind", "line"}, {"to", complex_to_json(seg.to)}});
    }
  }
  return Json{{"n", loop.n},
              {"m", loop.m},
              {"base", complex_to_json(loop.base)},
              {"segments", std::move(segments)}};
}

}  // namespace multdyn
