#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lcforge/errors.hpp"

namespace lcforge {

/// Exponent vector, one entry per ring variable.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index) {
    Monomial m(nvars);
    m.exps_.at(index) = 1;
    return m;
  }

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (auto e : exps_) d += e;
    return d;
  }
  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
    return r;
  }
  /// a / b; b must divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= b.exps_[i];
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return r;
  }
  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    return r;
  }
  static bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
      if (a.exps_[i] && b.exps_[i]) return false;
    return true;
  }

  /// All monomials of total degree `deg` in `nvars` variables, in
  /// descending lex order.
  static std::vector<Monomial> all_of_degree(std::size_t nvars, std::uint64_t deg) {
    std::vector<Monomial> out;
    Monomial cur(nvars);
    auto rec = [&](auto&& self, std::size_t var, std::uint64_t left) -> void {
      if (var + 1 == nvars) {
        cur.exps_[var] = static_cast<Exponent>(left);
        out.push_back(cur);
        return;
      }
      for (std::uint64_t e = left + 1; e-- > 0;) {
        cur.exps_[var] = static_cast<Exponent>(e);
        self(self, var + 1, left - e);
      }
      cur.exps_[var] = 0;
    };
    if (nvars == 0) {
      if (deg == 0) out.emplace_back();
      return out;
    }
    rec(rec, 0, deg);
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

/// Total monomial orders used by the engine. Elimination orders compare the
/// first `split` variables by graded reverse lex, then break ties on the rest
/// by graded reverse lex.
struct MonomialOrder {
  enum class Kind { GRevLex, Lex, Elimination };

  Kind kind = Kind::GRevLex;
  std::size_t split = 0;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder elimination(std::size_t split) { return {Kind::Elimination, split}; }

  bool is_graded() const noexcept { return kind == Kind::GRevLex; }

  std::string to_string() const {
    switch (kind) {
      case Kind::GRevLex: return "grevlex";
      case Kind::Lex: return "lex";
      case Kind::Elimination: return "elim(" + std::to_string(split) + ")";
    }
    return {};
  }

  /// Three-way comparison of two monomials under this order.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case Kind::Lex:
        for (std::size_t i = 0; i < a.size(); ++i)
          if (a[i] != b[i]) return a[i] <=> b[i];
        return std::strong_ordering::equal;
      case Kind::GRevLex:
        return grevlex_range(a, b, 0, a.size());
      case Kind::Elimination: {
        auto first = grevlex_range(a, b, 0, split);
        if (first != 0) return first;
        return grevlex_range(a, b, split, a.size());
      }
    }
    return std::strong_ordering::equal;
  }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
  friend auto operator<=>(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  static std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                            std::size_t hi) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da <=> db;
    for (std::size_t i = hi; i-- > lo;)
      if (a[i] != b[i]) return b[i] <=> a[i];
    return std::strong_ordering::equal;
  }
};

}  // namespace lcforge
