#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "lcforge/groebner.hpp"
#include "lcforge/linalg.hpp"

namespace lcforge {

/// Brute-force checks over small prime fields. They share no code with the
/// Groebner engine beyond polynomial arithmetic and row reduction.

struct PointSet {
  std::uint64_t p = 0;
  std::vector<std::vector<std::uint64_t>> points;  // first nonzero coordinate is 1, sorted

  bool contains(const std::vector<std::uint64_t>& pt) const {
    return std::binary_search(points.begin(), points.end(), pt);
  }
};

inline constexpr std::size_t kOracleMaxVariables = 5;
inline constexpr std::uint64_t kOracleMaxPrime = 11;

namespace detail {

inline void check_oracle_bounds(const RingPtr& ring) {
  if (!ring->field.is_prime()) throw InvalidArgument("oracles need a prime field");
  if (ring->nvars() > kOracleMaxVariables || ring->field.modulus > kOracleMaxPrime)
    throw InvalidArgument("oracle enumeration bound exceeded");
}

/// Calls f on every normalized point of P^{n-1}(F_p), in lexicographic order.
template <class F>
void for_each_projective_point(std::size_t n, std::uint64_t p, F&& f) {
  std::vector<std::uint64_t> pt(n);
  for (std::size_t lead = n; lead-- > 0;) {
    std::fill(pt.begin(), pt.end(), 0);
    pt[lead] = 1;
    while (true) {
      f(pt);
      std::size_t k = n;
      while (k > lead + 1 && pt[k - 1] == p - 1) pt[--k] = 0;
      if (k == lead + 1) break;
      ++pt[k - 1];
    }
  }
}

}  // namespace detail

/// All F_p-rational points of V(I) in projective space.
inline PointSet brute_force_points(const Ideal& ideal) {
  const auto& ring = ideal.ring();
  detail::check_oracle_bounds(ring);
  if (!ideal.is_homogeneous()) throw InvalidArgument("brute_force_points needs a homogeneous ideal");
  PointSet out{ring->field.modulus, {}};
  detail::for_each_projective_point(ring->nvars(), out.p, [&](const std::vector<std::uint64_t>& pt) {
    std::vector<FieldElement> values;
    for (auto c : pt) values.push_back(FieldElement::from_int(static_cast<long long>(c), ring->field));
    bool vanishes = std::all_of(ideal.generators().begin(), ideal.generators().end(),
                                [&](const Polynomial& g) { return g.evaluate(values).is_zero(); });
    if (vanishes) out.points.push_back(pt);
  });
  std::sort(out.points.begin(), out.points.end());
  return out;
}

namespace detail {

/// Coordinate rows of the given degree-d polynomials over the monomial basis.
inline std::vector<std::vector<FieldElement>> coordinate_rows(const std::vector<Polynomial>& polys,
                                                              const std::vector<Monomial>& monos,
                                                              const FieldSpec& field) {
  std::vector<std::vector<FieldElement>> rows;
  for (const auto& f : polys) {
    std::vector<FieldElement> row(monos.size(), FieldElement::zero(field));
    for (const auto& t : f.terms()) {
      auto it = std::find(monos.begin(), monos.end(), t.monomial);
      row[static_cast<std::size_t>(it - monos.begin())] = t.coeff;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Spanning set of I_d: generator times monomial of complementary degree.
inline std::vector<Polynomial> degree_slice(const Ideal& ideal, std::uint64_t d) {
  std::vector<Polynomial> out;
  for (const auto& g : ideal.generators()) {
    auto gd = g.total_degree();
    if (gd > d) continue;
    for (const auto& m : Monomial::all_of_degree(ideal.ring()->nvars(), d - gd))
      out.push_back(g.times_term(m, FieldElement::one(ideal.ring()->field)));
  }
  return out;
}

}  // namespace detail

/// Whether multiplication by g on (R/I)_e → (R/I)_{e+deg g} has a kernel for
/// some e ≤ deg_bound, by comparing dim{f : fg ∈ I} with dim I_e.
inline bool brute_force_zerodivisor(const Polynomial& g, const Ideal& ideal, std::uint64_t deg_bound) {
  const auto& ring = ideal.ring();
  detail::check_oracle_bounds(ring);
  if (!same_ring(ring, g.ring())) throw RingMismatch();
  if (g.is_zero()) return true;
  auto h = g.homogeneity();
  if (!h.homogeneous || !ideal.is_homogeneous()) throw InvalidArgument("brute_force_zerodivisor needs homogeneous input");
  const auto dg = *h.degree;
  const auto& field = ring->field;
  for (std::uint64_t e = 0; e <= deg_bound; ++e) {
    auto source = Monomial::all_of_degree(ring->nvars(), e);
    auto target = Monomial::all_of_degree(ring->nvars(), e + dg);
    auto ideal_target = detail::coordinate_rows(detail::degree_slice(ideal, e + dg), target, field);
    std::size_t base_rank = matrix_rank(ideal_target);
    auto stacked = ideal_target;
    for (const auto& m : source) {
      auto rows = detail::coordinate_rows({g.times_term(m, FieldElement::one(field))}, target, field);
      stacked.push_back(std::move(rows.front()));
    }
    std::size_t image_rank = matrix_rank(std::move(stacked)) - base_rank;
    std::size_t kernel = source.size() - image_rank;
    std::size_t ideal_dim = matrix_rank(detail::coordinate_rows(detail::degree_slice(ideal, e), source, field));
    if (kernel > ideal_dim) return true;
  }
  return false;
}

/// Point-set inclusion V(A)(F_p) ⊆ V(B)(F_p).
inline bool containment_oracle(const Ideal& a, const Ideal& b) {
  auto pa = brute_force_points(a), pb = brute_force_points(b);
  return std::all_of(pa.points.begin(), pa.points.end(), [&](const auto& pt) { return pb.contains(pt); });
}

}  // namespace lcforge
