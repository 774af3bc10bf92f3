#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lcforge/errors.hpp"
#include "lcforge/field.hpp"
#include "lcforge/monomial.hpp"

namespace lcforge {

/// Variable names and coefficient field of a polynomial ring. Every variable
/// has weight 1.
struct RingContext {
  std::vector<std::string> variables;
  FieldSpec field;

  std::size_t nvars() const noexcept { return variables.size(); }
  std::optional<std::size_t> index_of(const std::string& name) const {
    auto it = std::find(variables.begin(), variables.end(), name);
    if (it == variables.end()) return std::nullopt;
    return static_cast<std::size_t>(it - variables.begin());
  }
  friend bool operator==(const RingContext&, const RingContext&) = default;
};

using RingPtr = std::shared_ptr<const RingContext>;

inline RingPtr make_ring(std::vector<std::string> variables, FieldSpec field = FieldSpec::rationals()) {
  if (variables.empty()) throw InvalidArgument("a ring needs at least one variable");
  auto sorted = variables;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidArgument("ring variable names must be unique");
  return std::make_shared<const RingContext>(RingContext{std::move(variables), field});
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

/// The same field with one fresh variable prepended; used by elimination
/// tricks that need an auxiliary parameter.
inline RingPtr prepend_variable(const RingPtr& ring, std::string stem = "_t") {
  std::string name = stem;
  for (int k = 1; ring->index_of(name); ++k) name = stem + std::to_string(k);
  std::vector<std::string> vars{name};
  vars.insert(vars.end(), ring->variables.begin(), ring->variables.end());
  return make_ring(std::move(vars), ring->field);
}

struct Term {
  Monomial monomial;
  FieldElement coeff;
};

/// Result of a homogeneity query. The zero polynomial is homogeneous with no
/// degree.
struct Homogeneity {
  bool homogeneous = false;
  std::optional<std::uint64_t> degree;
};

/// Sparse polynomial. Terms are stored without zero coefficients, sorted by
/// descending graded reverse lex order; that layout is the canonical form.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }
  static Polynomial constant(RingPtr ring, const FieldElement& c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({Monomial(ring->nvars()), c});
    return p;
  }
  static Polynomial constant(RingPtr ring, long long c) {
    auto f = ring->field;
    return constant(std::move(ring), FieldElement::from_int(c, f));
  }
  static Polynomial variable(RingPtr ring, std::size_t index) {
    Polynomial p(ring);
    p.terms_.push_back({Monomial::variable(ring->nvars(), index), FieldElement::one(ring->field)});
    return p;
  }
  static Polynomial monomial(RingPtr ring, Monomial m, FieldElement c) {
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }

  Homogeneity homogeneity() const {
    if (terms_.empty()) return {true, std::nullopt};
    auto d = terms_.front().monomial.degree();
    for (const auto& t : terms_)
      if (t.monomial.degree() != d) return {false, std::nullopt};
    return {true, d};
  }

  /// Leading term under `order` (linear scan; terms are stored in grevlex).
  const Term& leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw InvalidArgument("leading term of zero polynomial");
    if (order.kind == MonomialOrder::Kind::GRevLex) return terms_.front();
    const Term* best = &terms_.front();
    for (const auto& t : terms_)
      if (order.less(best->monomial, t.monomial)) best = &t;
    return *best;
  }

  FieldElement coefficient_of(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.monomial == m) return t.coeff;
    return FieldElement::zero(ring_->field);
  }

  Polynomial scaled(const FieldElement& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }
  Polynomial times_term(const Monomial& m, const FieldElement& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_) {
      t.monomial = t.monomial * m;
      t.coeff *= c;
    }
    return r;  // multiplying by a monomial preserves grevlex order
  }
  /// Divides by the leading coefficient.
  Polynomial monic() const {
    if (terms_.empty()) return *this;
    return scaled(terms_.front().coeff.inverse());
  }

  Polynomial derivative(std::size_t var) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      auto e = t.monomial[var];
      if (e == 0) continue;
      Monomial m = t.monomial;
      m[var] = e - 1;
      out.push_back({std::move(m), t.coeff * FieldElement::from_int(e, ring_->field)});
    }
    return from_terms(ring_, std::move(out));
  }

  FieldElement evaluate(const std::vector<FieldElement>& point) const {
    auto acc = FieldElement::zero(ring_->field);
    for (const auto& t : terms_) {
      auto v = t.coeff;
      for (std::size_t i = 0; i < point.size(); ++i)
        for (Monomial::Exponent e = 0; e < t.monomial[i]; ++e) v *= point[i];
      acc += v;
    }
    return acc;
  }

  /// Same polynomial over `target`, whose variables are a permutation or a
  /// superset of ours; `map[i]` is the target index of variable i.
  Polynomial remapped(const RingPtr& target, const std::vector<std::size_t>& map) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m(target->nvars());
      for (std::size_t i = 0; i < map.size(); ++i) m[map[i]] = t.monomial[i];
      out.push_back({std::move(m), t.coeff});
    }
    return from_terms(target, std::move(out));
  }

  std::string to_string() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_rings(a, b);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) out.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
    return from_terms(a.ring_, std::move(out));
  }
  Polynomial operator-() const { return scaled(-FieldElement::one(ring_->field)); }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].monomial == b.terms_[i].monomial) || !(a.terms_[i].coeff == b.terms_[i].coeff))
        return false;
    return true;
  }

 private:
  static void check_rings(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_)) throw RingMismatch();
  }

  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    check_rings(a, b);
    const auto order = MonomialOrder::grevlex();
    Polynomial r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int c;
      if (i == a.terms_.size()) c = -1;
      else if (j == b.terms_.size()) c = 1;
      else {
        auto o = order.compare(a.terms_[i].monomial, b.terms_[j].monomial);
        c = o > 0 ? 1 : (o < 0 ? -1 : 0);
      }
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        auto t = b.terms_[j++];
        if (subtract) t.coeff = -t.coeff;
        r.terms_.push_back(std::move(t));
      } else {
        auto s = subtract ? a.terms_[i].coeff - b.terms_[j].coeff : a.terms_[i].coeff + b.terms_[j].coeff;
        if (!s.is_zero()) r.terms_.push_back({a.terms_[i].monomial, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void normalize() {
    for (const auto& t : terms_)
      if (t.monomial.size() != ring_->nvars()) throw InvalidArgument("monomial length does not match ring");
    const auto order = MonomialOrder::grevlex();
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return order.less(b.monomial, a.monomial); });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().monomial == t.monomial)
        merged.back().coeff += t.coeff;
      else
        merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
    terms_ = std::move(merged);
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

inline std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = t.coeff.to_display();
    bool negative = !c.empty() && c.front() == '-';
    if (negative) c.erase(0, 1);
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    bool unit = (c == "1");
    bool any_var = !t.monomial.is_one();
    bool need_star = !unit || !any_var;
    if (need_star) os << c;
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      auto e = t.monomial[i];
      if (!e) continue;
      if (need_star) os << '*';
      os << ring_->variables[i];
      if (e > 1) os << '^' << e;
      need_star = true;
    }
  }
  return os.str();
}

enum class PolyOp { Add, Sub, Mul, Scale };

/// Exact ring arithmetic. For Scale, `g` must be a constant polynomial.
inline Polynomial poly_arith(const Polynomial& f, const Polynomial& g, PolyOp op) {
  if (!same_ring(f.ring(), g.ring())) throw RingMismatch();
  switch (op) {
    case PolyOp::Add: return f + g;
    case PolyOp::Sub: return f - g;
    case PolyOp::Mul: return f * g;
    case PolyOp::Scale:
      if (!g.is_constant()) throw InvalidArgument("scale factor must be constant");
      return g.is_zero() ? Polynomial(f.ring()) : f.scaled(g.terms().front().coeff);
  }
  return f;
}

inline Homogeneity is_homogeneous(const Polynomial& f) { return f.homogeneity(); }

/// Divides f by g exactly; throws if g does not divide f.
inline Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw InvalidArgument("division by zero polynomial");
  const auto& lead = g.terms().front();
  auto inv = lead.coeff.inverse();
  Polynomial rest = f, quotient(f.ring());
  while (!rest.is_zero()) {
    const auto& t = rest.terms().front();
    if (!lead.monomial.divides(t.monomial)) throw InvalidArgument("polynomial division is not exact");
    auto m = t.monomial / lead.monomial;
    auto c = t.coeff * inv;
    quotient += Polynomial::monomial(f.ring(), m, c);
    rest -= g.times_term(m, c);
  }
  return quotient;
}

}  // namespace lcforge
