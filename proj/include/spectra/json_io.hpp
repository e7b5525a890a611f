#pragma once

// JSON encodings of the project's data types.
//
//   Polynomial     {"vars": n, "terms": [{"c": "a/b" | {"re": "a/b", "im": "c/d"}, "e": [..]}]}
//   Matroid        {"n": 8, "bases": [[1,2,3,5], ...]}            (1-based elements)
//   RankTable      {"n": 8, "values": [v_0, ..., v_{2^n-1}]}       (indexed by mask)
//   Ingleton       {"quadruple": [[..],[..],[..],[..]], "lhs": 16, "rhs": 15, "deficit": 1}
//   LatticePoints  {"dim": n, "points": [[...], ...]}
//   Matrix         {"rows": m, "cols": m, "hermitian": true, "entries": [["a/b", {"re":"0","im":"1/2"}], ...]}
//   Representation {"size": m, "A0": Matrix (optional), "pencil": [Matrix, ...]}

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "spectra/determinantal.hpp"
#include "spectra/jump_system.hpp"
#include "spectra/polymatroid.hpp"
#include "spectra/real_check.hpp"
#include "spectra/reduce.hpp"

namespace spectra {

using json = nlohmann::json;
using AnyPoly = std::variant<Poly, GaussPoly>;

json to_json(const Rational& r);
json to_json(const GaussRational& z);
Rational rational_from_json(const json& j);
GaussRational gauss_from_json(const json& j);

/// Parses "1,2/3,-1" into rationals.
std::vector<Rational> parse_rational_list(const std::string& text);
json to_json(const std::vector<Rational>& v);

json to_json(const Poly& p);
json to_json(const GaussPoly& p);
json to_json(const AnyPoly& p);
/// Real polynomial unless some coefficient has a nonzero imaginary part.
AnyPoly poly_from_json(const json& j);
/// Rejects polynomials with non-real coefficients.
Poly real_poly_from_json(const json& j);

json to_json(const UnivariatePoly& q);

json to_json(const Matroid& m);
Matroid matroid_from_json(const json& j);

json to_json(const RankTable& r);
RankTable rank_table_from_json(const json& j);

json to_json(const SubsetMask& s);
json to_json(const IngletonReport& r);
json to_json(const PolymatroidViolation& v);

json to_json(const LatticePointSet& s);
LatticePointSet lattice_from_json(const json& j);

json to_json(const ExactMatrix& m);
ExactMatrix exact_matrix_from_json(const json& j);
json to_json(const Representation& rep);
Representation representation_from_json(const json& j);

json to_json(const FloatMatrix& m);
FloatMatrix float_matrix_from_json(const json& j);
FloatRepresentation float_representation_from_json(const json& j);
json to_json(const ReductionReport& r);

}  // namespace spectra
