#pragma once

// JSON forms of every certificate, shared by the command-line reports and
// the `verify` replay. Rationals and matrices travel as strings so values
// round-trip exactly.

#include <json.hpp>

#include "locmult/family.hpp"
#include "locmult/lojasiewicz.hpp"
#include "locmult/multiplicity.hpp"
#include "locmult/newton.hpp"
#include "locmult/reduction.hpp"

namespace locmult {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& value);
Rational rational_from_json(const Json& j);

Json to_json(const Monomial& m);
Monomial monomial_from_json(const Json& j, std::size_t nvars);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// Diagnostics are left out; reports carry them separately.
Json to_json(const MultiplicityCertificate& c);
MultiplicityCertificate multiplicity_from_json(const Json& j);

Json to_json(const ReductionCertificate& c);
ReductionCertificate reduction_from_json(const Json& j);

Json to_json(const ClosureWitness& w);
ClosureWitness closure_from_json(const Json& j);

Json to_json(const LojaBracket& b);
/// The reduction's ideal is rebuilt from its matrix and I's generators.
LojaBracket loja_from_json(const Json& j, const Ideal& ideal);

Json to_json(const SimultaneousProjection& p);
SimultaneousProjection projection_from_json(const Json& j);

Json to_json(const NewtonPolyhedron& p);

}  // namespace locmult
