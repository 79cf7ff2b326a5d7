// JSON round-trip for tensor elements.
//
// Schema: {"char": C, "dim": D, "degree": N,
//          "terms": [{"exp": [a_1,...,a_D], "coeff": "..."}, ...]}
// Coefficients are decimal residues over a prime field and "p" or "p/q"
// strings over the rationals. Terms are emitted sorted by exponent vector.
#ifndef DIVPOW_SERIALIZE_HPP
#define DIVPOW_SERIALIZE_HPP

#include <json.hpp>

#include "divpow/gamma.hpp"

namespace divpow {

nlohmann::json to_json(const GammaElement& x);
nlohmann::json to_json(const SymElement& x);

GammaElement gamma_from_json(const nlohmann::json& j);
SymElement sym_from_json(const nlohmann::json& j);

Scalar scalar_from_string(FieldSpec spec, const std::string& s);

}  // namespace divpow

#endif
