#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lcforge/errors.hpp"
#include "lcforge/polynomial.hpp"

namespace lcforge {

/// Upper bound on single reduction steps per Groebner computation.
inline std::atomic<std::uint64_t>& reduction_limit() {
  static std::atomic<std::uint64_t> limit{1'000'000};
  return limit;
}

/// Reduced Groebner basis: monic elements sorted by ascending leading
/// monomial under `order`.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> elements;
  MonomialOrder order;
  bool reduced = true;

  bool is_unit() const { return elements.size() == 1 && elements.front().is_constant(); }
  bool is_zero() const { return elements.empty(); }
};

namespace detail {

/// Polynomial whose terms are sorted by descending `order`; the engine's
/// working representation.
using Terms = std::vector<Term>;

inline Terms sorted_terms(const Polynomial& p, const MonomialOrder& order) {
  Terms t = p.terms();
  if (order.kind != MonomialOrder::Kind::GRevLex)
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.less(b.monomial, a.monomial); });
  return t;
}

/// f - c * m * g, all sorted by `order`.
inline Terms sub_scaled(std::span<const Term> f, const FieldElement& c, const Monomial& m, const Terms& g,
                        const MonomialOrder& order) {
  Terms out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  std::optional<Term> shifted;
  auto next_shifted = [&] {
    if (j < g.size()) shifted = Term{g[j].monomial * m, -(g[j].coeff * c)};
    else shifted.reset();
  };
  next_shifted();
  while (i < f.size() || shifted) {
    if (!shifted) {
      out.push_back(f[i++]);
      continue;
    }
    if (i == f.size()) {
      out.push_back(std::move(*shifted));
      ++j;
      next_shifted();
      continue;
    }
    auto cmp = order.compare(f[i].monomial, shifted->monomial);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back(std::move(*shifted));
      ++j;
      next_shifted();
    } else {
      auto s = f[i].coeff + shifted->coeff;
      if (!s.is_zero()) out.push_back({f[i].monomial, std::move(s)});
      ++i;
      ++j;
      next_shifted();
    }
  }
  return out;
}

inline void make_monic(Terms& t) {
  if (t.empty() || t.front().coeff.is_one()) return;
  auto inv = t.front().coeff.inverse();
  for (auto& term : t) term.coeff *= inv;
}

class ReductionBudget {
 public:
  ReductionBudget() : limit_(reduction_limit().load()) {}
  void spend() {
    if (++used_ > limit_)
      throw ResourceExhausted("Groebner computation exceeded " + std::to_string(limit_) + " reduction steps");
  }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

/// Full reduction of f by `basis` (monic elements). The first basis element
/// whose leading monomial divides is used, which keeps the result
/// deterministic.
inline Terms reduce(Terms f, std::span<const Terms> basis, const MonomialOrder& order, ReductionBudget& budget,
                    std::optional<std::size_t> skip = std::nullopt) {
  Terms remainder;
  std::size_t pos = 0;
  while (pos < f.size()) {
    const Term& lead = f[pos];
    const Terms* divisor = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (skip && *skip == k) continue;
      if (!basis[k].empty() && basis[k].front().monomial.divides(lead.monomial)) {
        divisor = &basis[k];
        break;
      }
    }
    if (!divisor) {
      remainder.push_back(lead);
      ++pos;
      continue;
    }
    budget.spend();
    auto m = lead.monomial / divisor->front().monomial;
    auto c = lead.coeff;
    f = sub_scaled(std::span<const Term>(f).subspan(pos), c, m, *divisor, order);
    pos = 0;
  }
  return remainder;
}

inline Terms s_polynomial(const Terms& f, const Terms& g, const MonomialOrder& order) {
  auto l = Monomial::lcm(f.front().monomial, g.front().monomial);
  // f, g monic: S = (l/lm f) f - (l/lm g) g
  Terms left;
  left.reserve(f.size());
  auto mf = l / f.front().monomial;
  for (const auto& t : f) left.push_back({t.monomial * mf, t.coeff});
  return sub_scaled(left, FieldElement::one(f.front().coeff.field()), l / g.front().monomial, g, order);
}

inline Polynomial to_polynomial(const RingPtr& ring, Terms t) { return Polynomial::from_terms(ring, std::move(t)); }

/// Buchberger's algorithm with the coprime-leading-monomial and chain
/// criteria and normal pair selection (smallest lcm first, ties broken by
/// index). Returns the reduced basis in engine representation.
inline std::vector<Terms> buchberger(std::span<const Polynomial> gens, const MonomialOrder& order) {
  ReductionBudget budget;
  std::vector<Terms> basis;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    auto t = sorted_terms(g, order);
    make_monic(t);
    basis.push_back(std::move(t));
  }
  if (basis.empty()) return {};
  const auto& field = basis.front().front().coeff.field();
  auto unit = [&] {
    Terms one{{Monomial(basis.front().front().monomial.size()), FieldElement::one(field)}};
    return std::vector<Terms>{one};
  };
  for (const auto& b : basis)
    if (b.front().monomial.is_one()) return unit();

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  auto pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return std::any_of(pairs.begin(), pairs.end(), [&](const Pair& p) { return p.i == a && p.j == b; });
  };
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      pairs.push_back({i, j, Monomial::lcm(basis[i].front().monomial, basis[j].front().monomial)});
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      auto c = order.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    Pair p = *best;
    pairs.erase(best);
    const auto& li = basis[p.i].front().monomial;
    const auto& lj = basis[p.j].front().monomial;
    if (Monomial::coprime(li, lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (basis[k].front().monomial.divides(p.lcm) && !pending(p.i, k) && !pending(p.j, k)) chain = true;
    }
    if (chain) continue;
    auto s = reduce(s_polynomial(basis[p.i], basis[p.j], order), basis, order, budget);
    if (s.empty()) continue;
    make_monic(s);
    if (s.front().monomial.is_one()) return unit();
    basis.push_back(std::move(s));
    add_pairs_for(basis.size() - 1);
  }

  // Minimalize, then tail-reduce every element by the others.
  std::vector<Terms> minimal;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < basis.size() && !redundant; ++b) {
      if (a == b) continue;
      const auto& la = basis[a].front().monomial;
      const auto& lb = basis[b].front().monomial;
      if (lb.divides(la) && (!(la == lb) || b < a)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[a]);
  }
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    Terms tail(minimal[a].begin() + 1, minimal[a].end());
    auto reduced = reduce(std::move(tail), minimal, order, budget, a);
    reduced.insert(reduced.begin(), minimal[a].front());
    minimal[a] = std::move(reduced);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Terms& x, const Terms& y) { return order.less(x.front().monomial, y.front().monomial); });
  return minimal;
}

}  // namespace detail

/// Remainder of f on division by G; zero iff f lies in the ideal of G.
inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g) {
  if (!g.elements.empty() && !same_ring(f.ring(), g.ring)) throw RingMismatch();
  std::vector<detail::Terms> basis;
  for (const auto& e : g.elements) basis.push_back(detail::sorted_terms(e, g.order));
  detail::ReductionBudget budget;
  return detail::to_polynomial(f.ring(), detail::reduce(detail::sorted_terms(f, g.order), basis, g.order, budget));
}

/// Buchberger's criterion: every S-pair reduces to zero.
inline bool satisfies_buchberger_criterion(const GroebnerBasis& g) {
  std::vector<detail::Terms> basis;
  for (const auto& e : g.elements) {
    auto t = detail::sorted_terms(e, g.order);
    detail::make_monic(t);
    basis.push_back(std::move(t));
  }
  detail::ReductionBudget budget;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (Monomial::coprime(basis[i].front().monomial, basis[j].front().monomial)) continue;
      if (!detail::reduce(detail::s_polynomial(basis[i], basis[j], g.order), basis, g.order, budget).empty())
        return false;
    }
  return true;
}

/// Ideal of a polynomial ring given by generators. Groebner bases are
/// memoized per order and shared between copies.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
      if (!same_ring(g.ring(), ring_)) throw RingMismatch();
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring) {
    auto one = Polynomial::constant(ring, 1);
    return Ideal(std::move(ring), {one});
  }
  /// The irrelevant ideal (x_0, ..., x_n).
  static Ideal irrelevant(const RingPtr& ring) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < ring->nvars(); ++i) gens.push_back(Polynomial::variable(ring, i));
    return Ideal(ring, std::move(gens));
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  bool is_homogeneous() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.homogeneity().homogeneous; });
  }

  const GroebnerBasis& groebner(const MonomialOrder& order = MonomialOrder::grevlex()) const {
    {
      std::lock_guard lock(cache_->mutex);
      if (auto it = cache_->bases.find(order); it != cache_->bases.end()) return *it->second;
    }
    auto computed = std::make_shared<GroebnerBasis>();
    computed->ring = ring_;
    computed->order = order;
    for (auto& t : detail::buchberger(gens_, order)) computed->elements.push_back(detail::to_polynomial(ring_, std::move(t)));
    if (!satisfies_buchberger_criterion(*computed))
      throw std::logic_error("internal error: Groebner basis failed the S-pair check");
    std::lock_guard lock(cache_->mutex);
    auto [it, inserted] = cache_->bases.emplace(order, std::move(computed));
    return *it->second;
  }

  /// Canonical form: reduced grevlex basis.
  const std::vector<Polynomial>& canonical_basis() const { return groebner().elements; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return groebner().is_unit(); }

  Ideal plus(std::span<const Polynomial> more) const {
    auto gens = gens_;
    gens.insert(gens.end(), more.begin(), more.end());
    return Ideal(ring_, std::move(gens));
  }
  Ideal plus(const Polynomial& g) const { return plus(std::span<const Polynomial>(&g, 1)); }
  friend Ideal operator+(const Ideal& a, const Ideal& b) {
    if (!same_ring(a.ring_, b.ring_)) throw RingMismatch();
    return a.plus(b.gens_);
  }
  /// Product ideal, generated by pairwise products of generators.
  friend Ideal operator*(const Ideal& a, const Ideal& b) {
    if (!same_ring(a.ring_, b.ring_)) throw RingMismatch();
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens_)
      for (const auto& g : b.gens_) gens.push_back(f * g);
    return Ideal(a.ring_, std::move(gens));
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<MonomialOrder, std::shared_ptr<const GroebnerBasis>> bases;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

inline GroebnerBasis groebner_basis(const Ideal& ideal, const MonomialOrder& order) { return ideal.groebner(order); }

/// Ideal equality via reduced grevlex bases.
inline bool same_ideal(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) return false;
  return a.canonical_basis() == b.canonical_basis();
}

}  // namespace lcforge
