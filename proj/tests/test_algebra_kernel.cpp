#include <gtest/gtest.h>

#include <random>

#include "lcforge/graded.hpp"
#include "lcforge/ideal_ops.hpp"
#include "test_support.hpp"

using namespace lcforge;
using namespace lcforge::testing;

namespace {

FieldElement random_element(std::mt19937_64& rng, const FieldSpec& f) {
  if (f.is_prime()) return FieldElement::from_int(static_cast<long long>(rng() % f.modulus), f);
  long long num = static_cast<long long>(rng() % 2001) - 1000;
  long long den = static_cast<long long>(rng() % 50) + 1;
  return FieldElement(mpq_class(static_cast<long>(num), static_cast<long>(den)));
}

Polynomial random_poly(std::mt19937_64& rng, const RingPtr& ring, int terms, int max_deg) {
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k) {
    Monomial m(ring->nvars());
    for (std::size_t i = 0; i < ring->nvars(); ++i) m[i] = static_cast<Monomial::Exponent>(rng() % (max_deg + 1));
    ts.push_back({m, random_element(rng, ring->field)});
  }
  return Polynomial::from_terms(ring, std::move(ts));
}

}  // namespace

TEST(FieldElement, RationalsStayCanonical) {
  FieldElement a(mpq_class(6, -4));
  EXPECT_EQ(a.to_string(), "-3/2");
  EXPECT_EQ(FieldElement::parse("10/4", FieldSpec::rationals()).to_string(), "5/2");
  EXPECT_EQ(FieldElement::parse("-7", FieldSpec::rationals()).to_string(), "-7/1");
}

TEST(FieldElement, PrimeResiduesInRange) {
  auto f = FieldSpec::prime(7);
  EXPECT_EQ(FieldElement::from_int(-1, f).to_string(), "6");
  EXPECT_EQ(FieldElement::parse("1/3", f).to_string(), "5");  // 3*5 = 15 = 1 mod 7
  EXPECT_THROW(FieldElement::parse("1/7", f), InvalidArgument);
  EXPECT_THROW(FieldSpec::prime(9), InvalidArgument);
  EXPECT_EQ(FieldSpec::parse("GF(101)").modulus, 101u);
  EXPECT_EQ(FieldSpec::parse("F7").modulus, 7u);
  EXPECT_THROW(FieldSpec::parse("R"), InvalidArgument);
}

TEST(FieldElement, AxiomsOnFuzzedTriples) {
  std::mt19937_64 rng(7);
  for (auto field : {FieldSpec::rationals(), FieldSpec::prime(101), FieldSpec::prime(7)}) {
    for (int trial = 0; trial < 1000; ++trial) {
      auto a = random_element(rng, field), b = random_element(rng, field), c = random_element(rng, field);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a - a, FieldElement::zero(field));
      if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), FieldElement::one(field));
    }
  }
}

TEST(PolyArith, Examples) {
  auto R = ring_of({"x", "y"});
  EXPECT_EQ(poly_arith(P(R, "x+y"), P(R, "x-y"), PolyOp::Add), P(R, "2*x"));
  EXPECT_TRUE(poly_arith(P(R, "x"), P(R, "0"), PolyOp::Mul).is_zero());
  EXPECT_EQ(poly_arith(P(R, "x+y"), P(R, "x-y"), PolyOp::Mul), P(R, "x^2-y^2"));
  EXPECT_EQ(poly_arith(P(R, "x+y"), P(R, "3"), PolyOp::Scale), P(R, "3*x+3*y"));
  EXPECT_EQ((P(R, "x+y") - P(R, "x+y")).size(), 0u);
}

TEST(PolyArith, RingMismatchIsRejected) {
  auto R = ring_of({"x", "y"});
  auto S = ring_of({"x", "y", "z"});
  EXPECT_THROW(poly_arith(P(R, "x"), P(S, "x"), PolyOp::Add), RingMismatch);
  // Structurally equal contexts are interchangeable.
  auto R2 = ring_of({"x", "y"});
  EXPECT_EQ(P(R, "x") + P(R2, "y"), P(R, "x+y"));
}

TEST(PolyArith, MultiplicationLaws) {
  std::mt19937_64 rng(11);
  auto R = ring_of({"x", "y", "z"});
  auto one = Polynomial::constant(R, 1);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_poly(rng, R, 4, 2), g = random_poly(rng, R, 3, 2), h = random_poly(rng, R, 3, 1);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(poly_arith(f, one, PolyOp::Scale), f);
  }
}

TEST(Homogeneity, Examples) {
  auto R = ring_of({"x", "y"});
  auto h = is_homogeneous(P(R, "x^2+x*y"));
  EXPECT_TRUE(h.homogeneous);
  EXPECT_EQ(h.degree, 2u);
  EXPECT_FALSE(is_homogeneous(P(R, "x^2+y")).homogeneous);
  auto z = is_homogeneous(Polynomial(R));
  EXPECT_TRUE(z.homogeneous);
  EXPECT_FALSE(z.degree.has_value());
}

TEST(GradedPiece, Examples) {
  auto R3 = ring_of({"x", "y", "z"});
  EXPECT_EQ(graded_piece_basis(Ps(R3, {"x", "y"}), 1), Ps(R3, {"x", "y"}));
  auto R2 = ring_of({"x", "y"});
  EXPECT_EQ(graded_piece_basis(Ps(R2, {"x"}), 2), Ps(R2, {"x^2", "x*y"}));
  EXPECT_TRUE(graded_piece_basis(Ps(R2, {"x^2"}), 1).empty());
  EXPECT_THROW(graded_piece_basis(Ps(R2, {"x+1"}), 2), InvalidArgument);
}

TEST(GradedPiece, BasisIsIndependentAndInsideTheIdeal) {
  auto R = ring_of({"x", "y", "z", "w"});
  auto gens = Ps(R, {"x*z-y^2", "y*w-z^2", "x*w-y*z"});
  auto ideal = Ideal(R, gens);
  for (std::uint64_t d : {2u, 3u}) {
    auto basis = graded_piece_basis(gens, d);
    // 3 quadrics; in degree 3 the 12 products satisfy the 2 linear syzygies.
    EXPECT_EQ(basis.size(), d == 2 ? 3u : 10u);
    for (const auto& b : basis) EXPECT_TRUE(ideal_membership(b, ideal));
    EXPECT_EQ(graded_piece_basis(basis, d).size(), basis.size());
  }
}

TEST(Jacobian, Examples) {
  auto R2 = ring_of({"x", "y"});
  auto j1 = jacobian_matrix(Ps(R2, {"x^2"}));
  ASSERT_EQ(j1.size(), 1u);
  EXPECT_EQ(j1[0][0], P(R2, "2*x"));
  EXPECT_TRUE(j1[0][1].is_zero());

  auto R3 = ring_of({"x", "y", "z"});
  auto j2 = jacobian_matrix(Ps(R3, {"x*y-z^2"}));
  EXPECT_EQ(j2[0], Ps(R3, {"y", "x", "-2*z"}));

  auto j3 = jacobian_matrix(Ps(R3, {"x", "y"}));
  EXPECT_EQ(j3[0], Ps(R3, {"1", "0", "0"}));
  EXPECT_EQ(j3[1], Ps(R3, {"0", "1", "0"}));
}

TEST(Jacobian, LeibnizRule) {
  std::mt19937_64 rng(3);
  auto R = ring_of({"x", "y", "z"});
  for (int trial = 0; trial < 50; ++trial) {
    auto f = random_poly(rng, R, 4, 3), g = random_poly(rng, R, 4, 3);
    std::vector<Polynomial> fg{f * g};
    auto jfg = jacobian_matrix(fg);
    for (std::size_t v = 0; v < 3; ++v) EXPECT_EQ(jfg[0][v], f * g.derivative(v) + g * f.derivative(v));
  }
}

TEST(Minors, Examples) {
  auto R = ring_of({"x", "y", "z", "w"});
  PolyMatrix row{Ps(R, {"y", "x"})};
  EXPECT_EQ(minors_ideal(row, 1, R), Ps(R, {"y", "x"}));
  PolyMatrix id{Ps(R, {"1", "0"}), Ps(R, {"0", "1"})};
  EXPECT_EQ(minors_ideal(id, 2, R), Ps(R, {"1"}));
  PolyMatrix m{Ps(R, {"y", "x", "0"}), Ps(R, {"0", "w", "z"})};
  EXPECT_EQ(minors_ideal(m, 2, R), Ps(R, {"y*w", "y*z", "x*z"}));
  EXPECT_EQ(minors_ideal(m, 0, R), Ps(R, {"1"}));
}

TEST(Parser, ReportsLocation) {
  auto R = ring_of({"x", "y"});
  try {
    parse_polynomial("x + q", R, 3, 10);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 14u);
  }
  EXPECT_THROW(parse_polynomial("x +", R), ParseError);
  EXPECT_EQ(parse_polynomial("(x+y)^2 - 1/2*x", R).to_string(), "x^2 + 2*x*y + y^2 - 1/2*x");
}
