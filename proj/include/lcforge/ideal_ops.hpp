#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "lcforge/groebner.hpp"

namespace lcforge {

inline bool ideal_membership(const Polynomial& f, const Ideal& ideal) {
  if (f.is_zero()) return true;
  return normal_form(f, ideal.groebner()).is_zero();
}

namespace detail {

/// Maps every generator of `ideal` into `target`, which has `shift` extra
/// variables prepended.
inline std::vector<Polynomial> lift(const std::vector<Polynomial>& gens, const RingPtr& target, std::size_t shift) {
  std::vector<std::size_t> map(target->nvars() - shift);
  std::iota(map.begin(), map.end(), shift);
  std::vector<Polynomial> out;
  for (const auto& g : gens) out.push_back(g.remapped(target, map));
  return out;
}

/// Elements of the elimination basis free of the first `count` variables,
/// mapped down to `base`.
inline std::vector<Polynomial> eliminate_prefix(const Ideal& extended, std::size_t count, const RingPtr& base) {
  const auto& gb = extended.groebner(MonomialOrder::elimination(count));
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements) {
    bool free = std::all_of(g.terms().begin(), g.terms().end(), [&](const Term& t) {
      for (std::size_t i = 0; i < count; ++i)
        if (t.monomial[i]) return false;
      return true;
    });
    if (!free) continue;
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      std::vector<Monomial::Exponent> e(t.monomial.exponents().begin() + static_cast<std::ptrdiff_t>(count),
                                        t.monomial.exponents().end());
      terms.push_back({Monomial(std::move(e)), t.coeff});
    }
    out.push_back(Polynomial::from_terms(base, std::move(terms)));
  }
  return out;
}

}  // namespace detail

/// I ∩ k[keep]. The result lives in a fresh ring on the kept variables, in
/// their original relative order.
inline Ideal elimination_ideal(const Ideal& ideal, std::vector<std::size_t> keep) {
  const auto& ring = ideal.ring();
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.empty()) throw InvalidArgument("elimination must keep at least one variable");
  std::vector<std::size_t> drop;
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    if (!std::binary_search(keep.begin(), keep.end(), i)) drop.push_back(i);
  if (keep.back() >= ring->nvars()) throw InvalidArgument("variable index out of range");

  std::vector<std::string> names, kept_names;
  std::vector<std::size_t> map(ring->nvars());
  for (std::size_t i = 0; i < drop.size(); ++i) {
    map[drop[i]] = i;
    names.push_back(ring->variables[drop[i]]);
  }
  for (std::size_t i = 0; i < keep.size(); ++i) {
    map[keep[i]] = drop.size() + i;
    names.push_back(ring->variables[keep[i]]);
    kept_names.push_back(ring->variables[keep[i]]);
  }
  auto permuted = make_ring(names, ring->field);
  auto kept = make_ring(kept_names, ring->field);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.remapped(permuted, map));
  return Ideal(kept, detail::eliminate_prefix(Ideal(permuted, gens), drop.size(), kept));
}

/// a ∩ b via t·a + (1 - t)·b, eliminating t.
inline Ideal intersect(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
  auto ext = prepend_variable(a.ring());
  auto t = Polynomial::variable(ext, 0);
  auto one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (auto& g : detail::lift(a.generators(), ext, 1)) gens.push_back(t * g);
  for (auto& g : detail::lift(b.generators(), ext, 1)) gens.push_back(one_minus_t * g);
  return Ideal(a.ring(), detail::eliminate_prefix(Ideal(ext, gens), 1, a.ring()));
}

/// I : (g) = { f : f·g ∈ I }, from the generators of I ∩ (g) divided by g.
inline Ideal ideal_quotient(const Ideal& ideal, const Polynomial& g) {
  if (g.is_zero()) throw InvalidArgument("ideal quotient by the zero polynomial");
  if (!same_ring(ideal.ring(), g.ring())) throw RingMismatch();
  if (g.is_constant()) return ideal;
  auto meet = intersect(ideal, Ideal(ideal.ring(), {g}));
  std::vector<Polynomial> gens;
  for (const auto& h : meet.generators()) gens.push_back(divide_exact(h, g));
  return Ideal(ideal.ring(), std::move(gens));
}

/// I : J as the intersection of the quotients by each generator of J.
inline Ideal ideal_quotient(const Ideal& ideal, const Ideal& by) {
  if (!same_ring(ideal.ring(), by.ring())) throw RingMismatch();
  if (by.is_zero()) return Ideal::unit(ideal.ring());
  std::optional<Ideal> acc;
  for (const auto& g : by.generators()) {
    auto q = ideal_quotient(ideal, g);
    acc = acc ? intersect(*acc, q) : q;
  }
  return Ideal(ideal.ring(), acc->canonical_basis());
}

/// I : g^∞, iterating quotients until the canonical basis stops changing.
inline Ideal saturation(const Ideal& ideal, const Polynomial& g) {
  if (g.is_zero()) throw InvalidArgument("saturation by the zero polynomial");
  Ideal current = ideal;
  while (true) {
    Ideal next = ideal_quotient(current, g);
    if (same_ideal(next, current)) return current;
    current = Ideal(next.ring(), next.canonical_basis());
  }
}

/// I : J^∞ as the intersection of the saturations by each generator of J.
inline Ideal saturation(const Ideal& ideal, const Ideal& by) {
  if (by.is_zero()) throw InvalidArgument("saturation by the zero ideal");
  std::optional<Ideal> acc;
  for (const auto& g : by.generators()) {
    auto s = saturation(ideal, g);
    acc = acc ? intersect(*acc, s) : s;
  }
  return Ideal(ideal.ring(), acc->canonical_basis());
}

/// Saturation by the irrelevant ideal; returns the input unchanged when it is
/// already saturated so user generators survive.
inline Ideal saturate_irrelevant(const Ideal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) return ideal;
  auto sat = saturation(ideal, Ideal::irrelevant(ideal.ring()));
  return same_ideal(sat, ideal) ? ideal : sat;
}

/// f ∈ √I, via 1 ∈ I + (1 - t·f).
inline bool radical_membership(const Polynomial& f, const Ideal& ideal) {
  if (!same_ring(f.ring(), ideal.ring())) throw RingMismatch();
  if (f.is_zero()) return true;
  auto ext = prepend_variable(ideal.ring());
  auto gens = detail::lift(ideal.generators(), ext, 1);
  auto tf = Polynomial::variable(ext, 0) * detail::lift({f}, ext, 1).front();
  gens.push_back(Polynomial::constant(ext, 1) - tf);
  return Ideal(ext, std::move(gens)).is_unit();
}

namespace detail {

inline std::vector<Monomial> leading_monomials(const Ideal& ideal) {
  std::vector<Monomial> out;
  for (const auto& g : ideal.groebner().elements) out.push_back(g.terms().front().monomial);
  return out;
}

}  // namespace detail

/// Krull dimension of k[x]/I: the largest set of variables containing the
/// support of no leading monomial. The unit ideal gives -1.
inline int affine_dimension(const Ideal& ideal) {
  if (ideal.is_unit()) return -1;
  const std::size_t n = ideal.ring()->nvars();
  std::vector<std::uint64_t> supports;
  for (const auto& m : detail::leading_monomials(ideal)) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i]) mask |= std::uint64_t{1} << i;
    supports.push_back(mask);
  }
  if (n >= 64) throw InvalidArgument("too many variables for dimension computation");
  int best = 0;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
    int size = std::popcount(subset);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [&](std::uint64_t s) { return (s & ~subset) == 0; });
    if (independent) best = size;
  }
  return best;
}

/// Dimension of V(I) in projective space; -1 for the empty scheme (unit or
/// irrelevant-primary ideals).
inline int projective_dimension(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw InvalidArgument("projective_dimension needs a homogeneous ideal");
  return std::max(affine_dimension(ideal) - 1, -1);
}

namespace detail {

using IntPoly = std::vector<long long>;  // coefficient of t^k at index k

inline IntPoly hilbert_numerator(std::vector<Monomial> gens) {
  // Drop generators divisible by another one.
  std::vector<Monomial> minimal;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < gens.size() && !redundant; ++b)
      if (a != b && gens[b].divides(gens[a]) && (!(gens[a] == gens[b]) || b < a)) redundant = true;
    if (!redundant) minimal.push_back(gens[a]);
  }
  if (minimal.empty()) return {1};
  for (const auto& m : minimal)
    if (m.is_one()) return {0};
  Monomial pivot = minimal.back();
  minimal.pop_back();
  IntPoly rest = hilbert_numerator(minimal);
  std::vector<Monomial> colon;
  for (const auto& m : minimal) colon.push_back(m / Monomial::gcd(m, pivot));
  IntPoly shifted = hilbert_numerator(colon);
  auto d = pivot.degree();
  IntPoly out(std::max(rest.size(), shifted.size() + d), 0);
  for (std::size_t k = 0; k < rest.size(); ++k) out[k] += rest[k];
  for (std::size_t k = 0; k < shifted.size(); ++k) out[k + d] -= shifted[k];
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace detail

/// Dimension read from the Hilbert series of the leading-term ideal: the
/// number of variables minus the order of vanishing of the numerator at 1.
inline int hilbert_dimension(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw InvalidArgument("hilbert_dimension needs a homogeneous ideal");
  auto numerator = detail::hilbert_numerator(detail::leading_monomials(ideal));
  if (std::all_of(numerator.begin(), numerator.end(), [](long long c) { return c == 0; })) return -1;
  int order = 0;
  while (std::accumulate(numerator.begin(), numerator.end(), 0LL) == 0) {
    // divide by (1 - t)
    detail::IntPoly q(numerator.size() - 1);
    long long carry = 0;
    for (std::size_t k = 0; k + 1 < numerator.size(); ++k) {
      carry += numerator[k];
      q[k] = carry;
    }
    numerator = std::move(q);
    ++order;
  }
  return static_cast<int>(ideal.ring()->nvars()) - order;
}

}  // namespace lcforge
