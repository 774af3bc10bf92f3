#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "lcforge/errors.hpp"

namespace lcforge {

/// Coefficient field of a ring: the rationals or a prime field GF(p).
struct FieldSpec {
  enum class Kind { Rational, Prime };

  Kind kind = Kind::Rational;
  std::uint64_t modulus = 0;  // only meaningful for Kind::Prime

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint64_t p);

  bool is_prime() const noexcept { return kind == Kind::Prime; }
  std::string to_string() const {
    return is_prime() ? "GF(" + std::to_string(modulus) + ")" : "Q";
  }
  /// Accepts "Q", "QQ", "GF(p)" or "Fp" style names such as "F101".
  static FieldSpec parse(std::string_view text);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

namespace detail {

inline bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace detail

inline FieldSpec FieldSpec::prime(std::uint64_t p) {
  // Residue products must fit in 64 bits.
  if (p >= (std::uint64_t{1} << 31) || !detail::is_prime_number(p))
    throw InvalidArgument("field modulus must be a prime below 2^31, got " + std::to_string(p));
  return {Kind::Prime, p};
}

inline FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q" || text == "QQ") return rationals();
  std::string_view digits;
  if (text.size() > 4 && text.substr(0, 3) == "GF(" && text.back() == ')')
    digits = text.substr(3, text.size() - 4);
  else if (text.size() > 1 && text.front() == 'F')
    digits = text.substr(1);
  if (digits.empty() || digits.size() > 10 ||
      digits.find_first_not_of("0123456789") != std::string_view::npos)
    throw InvalidArgument("unknown field '" + std::string(text) + "'");
  return prime(std::stoull(std::string(digits)));
}

/// An exact element of a FieldSpec. Rationals are kept canonical (reduced,
/// positive denominator); residues live in [0, p).
class FieldElement {
 public:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
    friend bool operator==(const Residue&, const Residue&) = default;
  };

  FieldElement() : value_(mpq_class(0)) {}
  explicit FieldElement(mpq_class q) : value_(std::move(q)) { std::get<mpq_class>(value_).canonicalize(); }
  FieldElement(Residue r) : value_(r) {}

  static FieldElement from_int(long long n, const FieldSpec& f) {
    if (!f.is_prime()) return FieldElement(mpq_class(static_cast<long>(n)));
    long long m = static_cast<long long>(f.modulus);
    long long r = n % m;
    if (r < 0) r += m;
    return Residue{static_cast<std::uint64_t>(r), f.modulus};
  }
  static FieldElement zero(const FieldSpec& f) { return from_int(0, f); }
  static FieldElement one(const FieldSpec& f) { return from_int(1, f); }

  /// Maps an exact rational into the field; fails when the denominator is
  /// not invertible mod p.
  static FieldElement from_rational(const mpq_class& q, const FieldSpec& f);
  /// Parses "n", "-n" or "n/d".
  static FieldElement parse(std::string_view text, const FieldSpec& f);

  FieldSpec field() const {
    if (auto r = std::get_if<Residue>(&value_)) return {FieldSpec::Kind::Prime, r->modulus};
    return FieldSpec::rationals();
  }

  bool is_zero() const {
    if (auto r = std::get_if<Residue>(&value_)) return r->value == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
  }
  bool is_one() const {
    if (auto r = std::get_if<Residue>(&value_)) return r->value == 1;
    return std::get<mpq_class>(value_) == 1;
  }

  const mpq_class* rational() const { return std::get_if<mpq_class>(&value_); }
  const Residue* residue() const { return std::get_if<Residue>(&value_); }

  /// "num/den" for rationals, the residue in decimal for GF(p).
  std::string to_string() const {
    if (auto r = residue()) return std::to_string(r->value);
    const auto& q = std::get<mpq_class>(value_);
    return q.get_num().get_str() + "/" + q.get_den().get_str();
  }
  /// Human-facing form: omits a unit denominator.
  std::string to_display() const {
    if (auto q = rational(); q && q->get_den() == 1) return q->get_num().get_str();
    return to_string();
  }

  FieldElement inverse() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    if (auto ra = a.residue()) {
      auto rb = b.checked_residue(*ra);
      std::uint64_t s = ra->value + rb.value;
      return Residue{s >= ra->modulus ? s - ra->modulus : s, ra->modulus};
    }
    return FieldElement(mpq_class(*a.rational() + b.checked_rational()));
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    if (auto ra = a.residue()) {
      auto rb = b.checked_residue(*ra);
      return Residue{ra->value >= rb.value ? ra->value - rb.value : ra->value + ra->modulus - rb.value,
                     ra->modulus};
    }
    return FieldElement(mpq_class(*a.rational() - b.checked_rational()));
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    if (auto ra = a.residue()) {
      auto rb = b.checked_residue(*ra);
      return Residue{(ra->value * rb.value) % ra->modulus, ra->modulus};
    }
    return FieldElement(mpq_class(*a.rational() * b.checked_rational()));
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }
  FieldElement operator-() const {
    if (auto r = residue()) return Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus};
    return FieldElement(mpq_class(-*rational()));
  }
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.value_.index() != b.value_.index()) return false;
    if (auto ra = a.residue()) return *ra == *b.residue();
    return *a.rational() == *b.rational();
  }

 private:
  const Residue& checked_residue(const Residue& other) const {
    auto r = residue();
    if (!r || r->modulus != other.modulus) throw InvalidArgument("field element mismatch");
    return *r;
  }
  const mpq_class& checked_rational() const {
    auto q = rational();
    if (!q) throw InvalidArgument("field element mismatch");
    return *q;
  }

  std::variant<mpq_class, Residue> value_;
};

inline FieldElement FieldElement::inverse() const {
  if (is_zero()) throw InvalidArgument("division by zero in field");
  if (auto r = residue()) {
    // Fermat: a^(p-2)
    std::uint64_t base = r->value, e = r->modulus - 2, acc = 1;
    while (e) {
      if (e & 1) acc = acc * base % r->modulus;
      base = base * base % r->modulus;
      e >>= 1;
    }
    return Residue{acc, r->modulus};
  }
  return FieldElement(mpq_class(1 / *rational()));
}

inline FieldElement FieldElement::from_rational(const mpq_class& q, const FieldSpec& f) {
  if (!f.is_prime()) return FieldElement(q);
  mpz_class p(static_cast<unsigned long>(f.modulus));
  mpz_class num = q.get_num() % p, den = q.get_den() % p;
  if (num < 0) num += p;
  if (den == 0) throw InvalidArgument("denominator not invertible in " + f.to_string());
  FieldElement n = Residue{num.get_ui(), f.modulus};
  FieldElement d = Residue{den.get_ui(), f.modulus};
  return n / d;
}

inline FieldElement FieldElement::parse(std::string_view text, const FieldSpec& f) {
  auto bad = [&] { return InvalidArgument("malformed coefficient '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  auto slash = text.find('/');
  auto integral = [&](std::string_view s, bool allow_sign) {
    std::string_view body = s;
    if (allow_sign && !body.empty() && body.front() == '-') body.remove_prefix(1);
    if (body.empty() || body.find_first_not_of("0123456789") != std::string_view::npos) throw bad();
    return mpz_class(std::string(s));
  };
  mpq_class q;
  if (slash == std::string_view::npos) {
    q = mpq_class(integral(text, true));
  } else {
    mpz_class den = integral(text.substr(slash + 1), false);
    if (den == 0) throw bad();
    q = mpq_class(integral(text.substr(0, slash), true), den);
    q.canonicalize();
  }
  return from_rational(q, f);
}

}  // namespace lcforge
