#include "su3sb/serialize.hpp"

#include <stdexcept>

namespace su3sb {

Json monomial_json(const FockMonomial& m) {
  auto a = m.a_exponents();
  auto b = m.b_exponents();
  return Json::array({Json::array({a[0], a[1], a[2]}), Json::array({b[0], b[1], b[2]})});
}

FockMonomial monomial_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || j[0].size() != 3 || j[1].size() != 3) {
    throw std::invalid_argument("monomial must be [[a1,a2,a3],[b1,b2,b3]]");
  }
  return FockMonomial({j[0][0].get<int>(), j[0][1].get<int>(), j[0][2].get<int>()},
                      {j[1][0].get<int>(), j[1][1].get<int>(), j[1][2].get<int>()});
}

StateVector<Rational> rational_state_from_json(const Json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("state must be a JSON array of terms");
  }
  StateVector<Rational> s;
  for (const auto& term : j) {
    s.add_term(monomial_from_json(term.at("mono")), Rational::parse(term.at("coeff").get<std::string>()));
  }
  return s;
}

}  // namespace su3sb
