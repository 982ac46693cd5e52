// Parsing, text rendering and JSON (de)serialization of the library's values.
#pragma once

#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "qchar/decomp.hpp"
#include "qchar/polyring.hpp"
#include "qchar/quiver_a.hpp"
#include "qchar/qstrings.hpp"

namespace qchar::io {

using Json = nlohmann::ordered_json;

/// "k:m,k:m,..." or bare "k" for multiplicity one. Empty string is the
/// trivial module. Throws ParseError.
DrinfeldData parse_drinfeld(std::string_view text);

/// Comma-separated integers, e.g. "1,2,1". Throws ParseError.
std::vector<int> parse_int_list(std::string_view text);

// Text forms: Y[0]^2*Y[1]^-1, 2*Y[0] + Y[1]^-1, 1 + t + 2*t^2, A[0+1/2]^2.
std::string render(const Monomial& m);
std::string render(const LaurentPoly& p);
std::string render(const TPoly& p);
std::string render(const AFactorization& f);
std::string render(const QString& s);
std::string render(const StringDecomposition& d);

Json to_json(const Monomial& m);
Json to_json(const LaurentPoly& p);
Json to_json(const TPoly& p);
Json to_json(const DrinfeldData& dd);
Json to_json(const StringDecomposition& d);
Json to_json(const ComplexStratum& s);
Json to_json(const DecompositionRow& row);

Monomial monomial_from_json(const Json& j);
LaurentPoly laurent_from_json(const Json& j);
TPoly tpoly_from_json(const Json& j);
DrinfeldData drinfeld_from_json(const Json& j);
StringDecomposition decomposition_from_json(const Json& j);
ComplexStratum stratum_from_json(const Json& j);
DecompositionRow row_from_json(const Json& j);

}  // namespace qchar::io
