#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "lcforge/groebner.hpp"

namespace lcforge {

using json = nlohmann::json;

/// A polynomial as a list of {"c": coefficient, "e": exponents}, terms in
/// descending grevlex order.
inline json to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) terms.push_back({{"c", t.coeff.to_string()}, {"e", t.monomial.exponents()}});
  return terms;
}

inline json to_json(const std::vector<Polynomial>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(to_json(p));
  return out;
}

inline json ring_to_json(const RingPtr& ring) {
  return {{"field", ring->field.to_string()}, {"variables", ring->variables}};
}

inline RingPtr ring_from_json(const json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("variables"))
    throw InvalidArgument("ring must be an object with 'field' and 'variables'");
  return make_ring(j.at("variables").get<std::vector<std::string>>(), FieldSpec::parse(j.at("field").get<std::string>()));
}

/// Strict inverse of to_json: coefficients and term order must already be
/// canonical, so every accepted document has exactly one encoding.
inline Polynomial polynomial_from_json(const json& j, const RingPtr& ring) {
  if (!j.is_array()) throw InvalidArgument("polynomial must be an array of terms");
  std::vector<Term> terms;
  for (const auto& t : j) {
    if (!t.is_object() || t.size() != 2 || !t.contains("c") || !t.contains("e") || !t["c"].is_string() ||
        !t["e"].is_array())
      throw InvalidArgument("malformed term " + t.dump());
    const auto& text = t["c"].get_ref<const std::string&>();
    auto c = FieldElement::parse(text, ring->field);
    if (c.to_string() != text || c.is_zero()) throw InvalidArgument("non-canonical coefficient '" + text + "'");
    auto e = t["e"].get<std::vector<Monomial::Exponent>>();
    if (e.size() != ring->nvars()) throw InvalidArgument("exponent vector has wrong length");
    terms.push_back({Monomial(std::move(e)), std::move(c)});
  }
  for (std::size_t k = 1; k < terms.size(); ++k)
    if (!MonomialOrder::grevlex().less(terms[k].monomial, terms[k - 1].monomial))
      throw InvalidArgument("terms not in strictly descending order");
  return Polynomial::from_terms(ring, std::move(terms));
}

inline std::vector<Polynomial> polynomials_from_json(const json& j, const RingPtr& ring) {
  if (!j.is_array()) throw InvalidArgument("expected an array of polynomials");
  std::vector<Polynomial> out;
  for (const auto& p : j) out.push_back(polynomial_from_json(p, ring));
  return out;
}

}  // namespace lcforge
