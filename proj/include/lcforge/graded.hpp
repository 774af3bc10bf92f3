#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "lcforge/linalg.hpp"
#include "lcforge/polynomial.hpp"

namespace lcforge {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Basis of the degree-`d` piece of the ideal generated by homogeneous
/// `gens`: every generator times every monomial of complementary degree,
/// row-reduced. Generators of degree above `d` contribute nothing.
inline std::vector<Polynomial> graded_piece_basis(std::span<const Polynomial> gens, std::uint64_t d) {
  std::vector<Polynomial> out;
  if (gens.empty()) return out;
  const RingPtr& ring = gens.front().ring();
  const auto order = MonomialOrder::grevlex();

  auto columns = Monomial::all_of_degree(ring->nvars(), d);
  std::sort(columns.begin(), columns.end(), [&](const Monomial& a, const Monomial& b) { return order.less(b, a); });
  std::map<std::vector<Monomial::Exponent>, std::size_t> column_of;
  for (std::size_t i = 0; i < columns.size(); ++i) column_of[columns[i].exponents()] = i;

  FieldMatrix rows;
  for (const auto& g : gens) {
    if (!same_ring(g.ring(), ring)) throw RingMismatch();
    auto h = g.homogeneity();
    if (!h.homogeneous) throw InvalidArgument("graded_piece_basis needs homogeneous generators");
    if (!h.degree || *h.degree > d) continue;
    for (const auto& m : Monomial::all_of_degree(ring->nvars(), d - *h.degree)) {
      std::vector<FieldElement> row(columns.size(), FieldElement::zero(ring->field));
      for (const auto& t : g.terms()) row[column_of.at((t.monomial * m).exponents())] = t.coeff;
      rows.push_back(std::move(row));
    }
  }
  std::size_t rank = row_reduce(rows);
  for (std::size_t r = 0; r < rank; ++r) {
    std::vector<Term> terms;
    for (std::size_t c = 0; c < columns.size(); ++c)
      if (!rows[r][c].is_zero()) terms.push_back({columns[c], rows[r][c]});
    out.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return out;
}

/// Entry (i, j) is the formal partial derivative of fs[i] by variable j.
inline PolyMatrix jacobian_matrix(std::span<const Polynomial> fs) {
  PolyMatrix m;
  if (fs.empty()) return m;
  const RingPtr& ring = fs.front().ring();
  for (const auto& f : fs) {
    if (!same_ring(f.ring(), ring)) throw RingMismatch();
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < ring->nvars(); ++j) row.push_back(f.derivative(j));
    m.push_back(std::move(row));
  }
  return m;
}

namespace detail {

inline Polynomial laplace_det(const PolyMatrix& m, std::span<const std::size_t> rows,
                              std::vector<std::size_t>& cols, const RingPtr& ring) {
  if (rows.empty()) return Polynomial::constant(ring, 1);
  Polynomial acc(ring);
  const std::size_t r = rows.front();
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const auto& entry = m[r][cols[k]];
    if (entry.is_zero()) continue;
    std::size_t c = cols[k];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    auto sub = laplace_det(m, rows.subspan(1), cols, ring);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
    if (k % 2) acc -= entry * sub;
    else acc += entry * sub;
  }
  return acc;
}

/// Calls f with every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(std::span<const std::size_t>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// All nonzero k-by-k minors of `m`, in lexicographic (rows, columns) order.
/// k = 0 yields the single polynomial 1; k beyond the matrix shape yields
/// nothing.
inline std::vector<Polynomial> minors_ideal(const PolyMatrix& m, std::size_t k, const RingPtr& ring) {
  std::vector<Polynomial> out;
  if (k == 0) {
    out.push_back(Polynomial::constant(ring, 1));
    return out;
  }
  if (m.empty() || k > m.size() || k > m.front().size()) return out;
  detail::for_each_subset(m.size(), k, [&](std::span<const std::size_t> rows) {
    detail::for_each_subset(m.front().size(), k, [&](std::span<const std::size_t> cols) {
      std::vector<std::size_t> c(cols.begin(), cols.end());
      auto det = detail::laplace_det(m, rows, c, ring);
      if (!det.is_zero()) out.push_back(std::move(det));
    });
  });
  return out;
}

}  // namespace lcforge
