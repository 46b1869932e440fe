#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "leibniz/lie2.hpp"
#include "leibniz/naive.hpp"

namespace leibniz {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "leibniz-kit/1";

/// Parses text as JSON; syntax errors become InputError with line and column.
Json parse_json_text(std::string_view text, const std::string& source);

/// Accepts "p/q" strings and JSON integers.
Rational rational_from_json(const Json& j, const std::string& where);
Json to_json(const Rational& q);
Json to_json(std::span<const Rational> v);
Json to_json(const Matrix& m);
Vector vector_from_json(const Json& j, std::size_t len, const std::string& where);
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where);

/// Nested arrays indexed by the inputs, innermost array is the output vector.
Json to_json(const MultilinearMap& f);
MultilinearMap multilinear_from_json(const Json& j, std::vector<std::size_t> input_dims, std::size_t output_dim,
                                     const std::string& where);

/// {"schema", "dim", "c"} with c[i][j][k] the e_k coefficient of [e_i, e_j].
Json algebra_to_json(const LeibnizAlgebra& g);
LeibnizAlgebra algebra_from_json(const Json& j);

/// {"schema", "vdim", "l", "r"}; the algebra is supplied separately.
Json representation_to_json(const Representation& rep);
Representation representation_from_json(const Json& j, const LeibnizAlgebra& g);

/// {"schema", "vdim", "phi", "theta"} with one phi matrix and theta vector per basis vector of g.
Json naive_to_json(const NaiveRepresentation& rho);
NaiveRepresentation naive_from_json(const Json& j, const LeibnizAlgebra& g);

/// {"schema", "vdim", "phi"} with phi[i] = φ(e_i), so φ(u) = Σ_i u_i phi[i].
Json graph_to_json(const GraphMap& phi);
GraphMap graph_from_json(const Json& j);

Json lie2_to_json(const Lie2Algebra& L);
Lie2Algebra lie2_from_json(const Json& j);

Json to_json(const Witness& w);
/// {"holds", "witness_count", "witnesses"}, listing at most max_witnesses.
Json to_json(const IdentityReport& report, std::size_t max_witnesses = 10);
Json to_json(const AxiomReport& report, std::size_t max_witnesses = 10);
Json to_json(const BettiReport& report);
Json to_json(const ComparisonReport& report);

}  // namespace leibniz
