#pragma once

#include <string>

#include <json.hpp>

#include "su3sb/fock.hpp"

namespace su3sb {

using Json = nlohmann::ordered_json;

/// Version tag of every on-disk / on-wire schema produced here.
inline constexpr int kFormatVersion = 1;

inline Json coefficient_json(const Rational& c) { return c.to_string(); }

inline Json coefficient_json(const ExtScalar& c) {
  Json out = Json::array();
  for (const auto& part : c.components()) {
    out.push_back(part.to_string());
  }
  return out;
}

Json monomial_json(const FockMonomial& m);
FockMonomial monomial_from_json(const Json& j);

/// [{"mono": [[a1,a2,a3],[b1,b2,b3]], "coeff": ...}, ...] in monomial order.
template <Scalar S>
Json state_json(const StateVector<S>& s) {
  Json out = Json::array();
  for (const auto& [m, c] : s.terms()) {
    Json term;
    term["mono"] = monomial_json(m);
    term["coeff"] = coefficient_json(c);
    out.push_back(std::move(term));
  }
  return out;
}

/// Inverse of state_json for Rational coefficients.
StateVector<Rational> rational_state_from_json(const Json& j);

/// One "mono  coeff" line per term, monomials column-aligned.
template <Scalar S>
std::string state_text(const StateVector<S>& s) {
  std::string out;
  if (s.is_zero()) {
    return "  0\n";
  }
  for (const auto& [m, c] : s.terms()) {
    out += "  " + m.to_string() + "    " + c.to_string() + "\n";
  }
  return out;
}

}  // namespace su3sb
