#include "divpow/serialize.hpp"

#include <stdexcept>

namespace divpow {

namespace {

nlohmann::json tensor_json(const detail::SparseTensor& x) {
  nlohmann::json j;
  j["char"] = x.spec().characteristic;
  j["dim"] = x.dim();
  j["degree"] = x.degree();
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [c, t] : x.terms())
    terms.push_back(nlohmann::json{{"exp", c.parts()}, {"coeff", t.str()}});
  j["terms"] = terms;
  return j;
}

template <typename Element>
Element tensor_from_json(const nlohmann::json& j) {
  if (!j.contains("char") || !j.contains("dim") || !j.contains("degree") || !j.contains("terms"))
    throw std::invalid_argument("tensor json: missing field");
  std::int64_t characteristic = j.at("char").get<std::int64_t>();
  FieldSpec spec = characteristic == 0 ? FieldSpec::rationals() : FieldSpec::prime(characteristic);
  int dim = j.at("dim").get<int>();
  int degree = j.at("degree").get<int>();
  Element out(spec, dim, degree);
  for (const nlohmann::json& term : j.at("terms")) {
    std::vector<int> exp = term.at("exp").get<std::vector<int>>();
    Scalar coeff = scalar_from_string(spec, term.at("coeff").get<std::string>());
    out.add_term(Composition(std::move(exp)), coeff);  // validates length and degree
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const GammaElement& x) { return tensor_json(x); }
nlohmann::json to_json(const SymElement& x) { return tensor_json(x); }

GammaElement gamma_from_json(const nlohmann::json& j) { return tensor_from_json<GammaElement>(j); }
SymElement sym_from_json(const nlohmann::json& j) { return tensor_from_json<SymElement>(j); }

Scalar scalar_from_string(FieldSpec spec, const std::string& s) {
  if (s.empty()) throw std::invalid_argument("scalar string: empty");
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    BigInt v(s);
    return Scalar::of(spec, v);
  }
  if (spec.is_prime_field())
    throw std::invalid_argument("scalar string: fraction over a prime field");
  BigInt num(s.substr(0, slash));
  BigInt den(s.substr(slash + 1));
  return Scalar::rational(num, den);
}

}  // namespace divpow
