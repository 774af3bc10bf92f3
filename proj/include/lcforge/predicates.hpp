#pragma once

#include <string>
#include <vector>

#include "lcforge/graded.hpp"
#include "lcforge/ideal_ops.hpp"
#include "lcforge/json_io.hpp"

namespace lcforge {

/// Outcome of a checkable hypothesis, with enough evidence to redo it.
struct PredicateVerdict {
  std::string name;
  bool pass = false;
  json evidence = json::object();
  std::string citation;

  friend bool operator==(const PredicateVerdict&, const PredicateVerdict&) = default;
};

inline json to_json(const PredicateVerdict& v) {
  return {{"name", v.name}, {"pass", v.pass}, {"evidence", v.evidence}, {"citation", v.citation}};
}

inline PredicateVerdict verdict_from_json(const json& j) {
  if (!j.is_object() || j.size() != 4) throw InvalidArgument("malformed verdict");
  return {j.at("name").get<std::string>(), j.at("pass").get<bool>(), j.at("evidence"),
          j.at("citation").get<std::string>()};
}

/// Pass iff I : g = I.
inline PredicateVerdict is_non_zerodivisor(const Polynomial& g, const Ideal& ideal) {
  if (g.is_zero()) throw InvalidArgument("the zero polynomial is a zerodivisor");
  auto quotient = ideal_quotient(ideal, g);
  PredicateVerdict v{"non_zerodivisor", false, {}, "I : g = I"};
  json witness = nullptr;
  for (const auto& q : quotient.canonical_basis())
    if (!ideal_membership(q, ideal)) {
      witness = to_json(q);
      break;
    }
  v.pass = witness.is_null();
  v.evidence = {{"g", to_json(g)}, {"ideal", to_json(ideal.canonical_basis())}, {"witness", witness}};
  return v;
}

/// Pass iff each prefix drops the dimension of the ambient by exactly one.
inline PredicateVerdict is_regular_sequence(const std::vector<Polynomial>& gs, const Ideal& ambient) {
  if (ambient.is_unit()) throw InvalidArgument("regular sequence over the unit ideal");
  std::vector<int> chain{affine_dimension(ambient)};
  bool pass = true;
  Ideal current = ambient;
  for (const auto& g : gs) {
    if (g.is_zero()) throw InvalidArgument("regular sequence contains the zero polynomial");
    current = current.plus(g);
    chain.push_back(affine_dimension(current));
    if (chain.back() != chain[chain.size() - 2] - 1) pass = false;
  }
  return {"regular_sequence", pass, {{"dimension_chain", chain}}, "dimension drops by one per element"};
}

/// I plus the c×c minors of the Jacobian of the generators of I and of the
/// ambient, c the codimension of V(I) in affine space. Not saturated: a
/// locus supported at the origin stands for the empty projective set.
inline Ideal singular_locus_ideal(const Ideal& ideal, const Ideal& ambient) {
  if (!same_ring(ideal.ring(), ambient.ring())) throw RingMismatch();
  if (ideal.is_unit()) throw InvalidArgument("singular locus of the unit ideal");
  auto gens = ideal.generators();
  gens.insert(gens.end(), ambient.generators().begin(), ambient.generators().end());
  auto codim = static_cast<int>(ideal.ring()->nvars()) - affine_dimension(ideal);
  auto minors = minors_ideal(jacobian_matrix(gens), static_cast<std::size_t>(codim), ideal.ring());
  return ideal.plus(minors);
}

namespace detail {

/// Affine dimension at most 0 means V(I) is empty in projective space.
inline bool projectively_empty(int affine_dim) { return affine_dim <= 0; }

}  // namespace detail

/// Pass iff the singular locus misses every generic point of V(I).
inline PredicateVerdict is_generically_reduced(const Ideal& ideal, const Ideal& ambient) {
  auto sing = singular_locus_ideal(ideal, ambient);
  int dim = affine_dimension(ideal), sing_dim = affine_dimension(sing);
  return {"generically_reduced",
          sing_dim < dim,
          {{"dimension", dim}, {"singular_dimension", sing_dim}, {"singular_locus", to_json(sing.canonical_basis())}},
          "R0 via the Jacobian criterion, S1 from the Cohen-Macaulay ambient"};
}

/// R1: the singular locus has codimension at least two in V(I), or is empty.
inline PredicateVerdict is_normal_ci(const Ideal& ideal, const Ideal& ambient) {
  auto sing = singular_locus_ideal(ideal, ambient);
  int dim = affine_dimension(ideal), sing_dim = affine_dimension(sing);
  bool pass = detail::projectively_empty(sing_dim) || dim - sing_dim >= 2;
  return {"normal",
          pass,
          {{"dimension", dim},
           {"singular_dimension", sing_dim},
           {"singular_locus", to_json(sing.canonical_basis())},
           {"s2", "declared"}},
          "Serre's criterion: R1 computed, S2 from the declared Cohen-Macaulay hypothesis"};
}

/// V(A) ⊆ V(B) in projective space.
inline PredicateVerdict variety_containment(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
  int a_dim = affine_dimension(a);
  bool empty = a.is_homogeneous() && detail::projectively_empty(a_dim);
  std::vector<bool> members;
  bool pass = true;
  for (const auto& g : b.generators()) {
    members.push_back(radical_membership(g, a));
    pass = pass && members.back();
  }
  return {"variety_containment",
          empty || pass,
          {{"source_dimension", a_dim}, {"source_empty", empty}, {"radical_members", members}},
          "every generator of B lies in the radical of A"};
}

/// Z is an irreducible component of the complete intersection J.
inline PredicateVerdict is_component(const Ideal& z, const Ideal& j) {
  std::vector<bool> members;
  bool contained = true;
  for (const auto& g : j.generators()) {
    members.push_back(ideal_membership(g, z));
    contained = contained && members.back();
  }
  int z_dim = projective_dimension(z), j_dim = projective_dimension(j);
  return {"component",
          contained && z_dim == j_dim,
          {{"members", members}, {"center_dimension", z_dim}, {"intersection_dimension", j_dim}},
          "a prime containing an equidimensional radical ideal with equal dimension is a minimal prime"};
}

}  // namespace lcforge
