#include "cfgcalc/algebra/poly_json.hpp"

#include <stdexcept>

namespace cfgcalc::algebra {

nlohmann::json to_json(const MultiPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    terms.push_back({{"coeff", to_decimal(c)},
                     {"exps", std::vector<unsigned>(m.exps().begin(), m.exps().end())}});
  }
  return {{"letters", p.alphabet().letters()}, {"terms", std::move(terms)}};
}

MultiPoly poly_from_json(const nlohmann::json& j) {
  try {
    Alphabet alphabet(j.at("letters").get<std::vector<std::string>>());
    MultiPoly p(alphabet);
    for (const auto& t : j.at("terms")) {
      auto exps = t.at("exps").get<std::vector<Monomial::Exponent>>();
      if (exps.size() != alphabet.size())
        throw std::invalid_argument("exponent vector length does not match letters");
      const BigInt c = from_decimal(t.at("coeff").get<std::string>());
      if (c == 0) throw std::invalid_argument("zero coefficient stored in term list");
      p.add_term(Monomial(std::move(exps)), c);
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed polynomial JSON: ") + e.what());
  }
}

nlohmann::json to_json_array(const std::vector<BigInt>& values) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : values) out.push_back(to_decimal(v));
  return out;
}

}  // namespace cfgcalc::algebra
