#pragma once

#include <json.hpp>

#include "kacmult/atypicality.hpp"
#include "kacmult/characters.hpp"
#include "kacmult/kl_matrix.hpp"
#include "kacmult/multiplicity.hpp"

namespace kacmult {

using json = nlohmann::json;

json to_json(const Weight& w);
/// Throws ParseError on a malformed object or wrong arity.
Weight weight_from_json(const json& j, const Superalgebra& alg);

json to_json(OddRoot r);
json to_json(const QPolynomial& p);
QPolynomial poly_from_json(const json& j);

json to_json(const Eigen::MatrixXi& m);
json to_json(const AtypicalityProfile& p);
json to_json(const MultiplicityColumn& c);
json to_json(const WeightPolyMap& row);

/// {"window":[...],"entries":[{"row":w,"col":w,"poly":[c0,c1,...]},...]}
json to_json(const TriangularQMatrix& m);
/// Rebuilds a matrix on `window`; entries must name window weights and
/// respect triangularity.
TriangularQMatrix matrix_from_json(const json& j, const Window& window);

/// {"exact":true,"terms":[...]} or {"region":{"lo":..,"hi":..},"terms":[...]}
json to_json(const CharacterMap& chi);
json to_json(const WeightCounts& counts);

}  // namespace kacmult
