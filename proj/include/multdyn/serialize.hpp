#pragma once

#include <nlohmann/json_fwd.hpp>

#include "multdyn/dynamics.hpp"
#include "multdyn/monodromy.hpp"
#include "multdyn/sparsepoly.hpp"
#include "multdyn/witness.hpp"

namespace multdyn {

using Json = nlohmann::json;

// Complex values serialize as [re, im] with decimal strings at full working
// precision; parsing accepts either strings or plain JSON numbers.
Json complex_to_json(const Complex& z, int digits = 0);
Complex complex_from_json(const Json& j);

Json poly_to_json(const CenteredPolynomial& p);
CenteredPolynomial poly_from_json(const Json& j);

Json marked_to_json(const MarkedPolynomial& marked);
MarkedPolynomial marked_from_json(const Json& j);

// {"terms": [[exponent, coefficient-string], ...]}
Json sparse_to_json(const SparsePolynomial& p);
SparsePolynomial sparse_from_json(const Json& j);

Json jacobian_report_to_json(const JacobianReport& report);

Json degeneracy_to_json(const DegeneracySet& set);

LoopPath loop_from_json(const Json& j);
Json loop_to_json(const LoopPath& loop);

}  // namespace multdyn
