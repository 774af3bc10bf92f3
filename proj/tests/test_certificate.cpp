#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lcforge/certificate.hpp"
#include "mutations.hpp"
#include "test_support.hpp"

using namespace lcforge;
using namespace lcforge::testing;

namespace {

HypothesisSet declared(const std::vector<std::string>& names) {
  HypothesisSet h;
  for (const auto& n : names) h.declare(n, "test fixture");
  return h;
}

ProblemSpec problem_of(const LcFixture& f) {
  ProblemSpec p;
  p.ring = f.ambient.ring();
  p.ambient = f.ambient;
  p.center = f.center;
  p.hypotheses = declared(potential_lc_requirements());
  p.mode = Mode::PotentialLc;
  return p;
}

Certificate build(const ProblemSpec& p, std::uint64_t seed, const BuildConfig& config = {}) {
  return build_boundary(p.ambient, p.center, p.sing_ambient, p.hypotheses, seed, config);
}

ProblemSpec special_problem() {
  auto R = ring_of({"x", "y", "z", "w"});
  ProblemSpec p;
  p.ring = R;
  p.ambient = Ideal::zero(R);
  p.center = I(R, {"x^2+y^2+z^2+w^2", "x^2+2*y^2+3*z^2+4*w^2"});
  p.hypotheses = declared(special_lc_requirements());
  p.mode = Mode::SpecialLc;
  return p;
}

Certificate build_special(const ProblemSpec& p, std::uint64_t seed) {
  return build_special_boundary(p.ambient, p.center.generators(), p.sing_ambient, p.hypotheses, seed, {});
}

LcFixture fixture(const std::string& name) {
  for (auto& f : lc_fixtures())
    if (f.name == name) return f;
  throw std::logic_error("no fixture " + name);
}

}  // namespace

TEST(Certificate, RoundTripIsByteIdentical) {
  for (const auto& f : lc_fixtures()) {
    auto p = problem_of(f);
    auto bytes = serialize(build(p, 11));
    EXPECT_EQ(serialize(deserialize(bytes)), bytes) << f.name;
    EXPECT_EQ(bytes.back(), '\n');
  }
  auto bytes = serialize(build_special(special_problem(), 3));
  EXPECT_EQ(serialize(deserialize(bytes)), bytes);
}

TEST(Certificate, TopLevelLayout) {
  auto j = json::parse(serialize(build(problem_of(fixture("point_p2")), 1)));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"ambient_ideal", "boundary", "center_ideal", "cited_steps", "conclusion",
                                            "config", "discrepancy", "hypotheses", "kind", "ring", "seed", "version",
                                            "witness"}));
  EXPECT_EQ(j["version"], kCertificateVersion);
  EXPECT_EQ(j["discrepancy"]["discrepancy"], -1);
  EXPECT_EQ(j["seed"], "1");
}

TEST(Certificate, TruncatedStreamIsAParseError) {
  auto bytes = serialize(build(problem_of(fixture("line_p3")), 2));
  for (std::size_t cut : {bytes.size() / 3, bytes.size() / 2, bytes.size() - 3}) {
    try {
      deserialize(bytes.substr(0, cut));
      FAIL() << cut;
    } catch (const ParseError& e) {
      EXPECT_GE(e.line(), 1u);
    }
  }
  EXPECT_THROW(deserialize(""), ParseError);
}

TEST(Certificate, UnknownVersionIsRejected) {
  auto j = json::parse(serialize(build(problem_of(fixture("point_p2")), 1)));
  j["version"] = "lcforge-certificate/99";
  EXPECT_THROW(deserialize(j.dump()), UnsupportedVersion);
  j.erase("version");
  EXPECT_THROW(deserialize(j.dump()), InvalidArgument);
}

TEST(Certificate, StructuralErrors) {
  auto j = json::parse(serialize(build(problem_of(fixture("point_p2")), 1)));
  auto extra = j;
  extra["note"] = "hi";
  EXPECT_THROW(deserialize(extra.dump()), InvalidArgument);
  auto bad_seed = j;
  bad_seed["seed"] = "018";
  EXPECT_THROW(deserialize(bad_seed.dump()), InvalidArgument);
  auto bad_kind = j;
  bad_kind["kind"] = "verify";
  EXPECT_THROW(deserialize(bad_kind.dump()), InvalidArgument);
  EXPECT_THROW(deserialize("[1, 2]"), InvalidArgument);
}

TEST(Reverify, UntouchedCertificatePasses) {
  for (const auto& f : lc_fixtures()) {
    auto p = problem_of(f);
    auto v = reverify_bytes(serialize(build(p, 5)), p);
    EXPECT_TRUE(v.pass) << f.name << " " << v.evidence.dump();
  }
  auto p = special_problem();
  auto v = reverify_bytes(serialize(build_special(p, 5)), p);
  EXPECT_TRUE(v.pass) << v.evidence.dump();
}

TEST(Reverify, PerturbedLambdaFails) {
  auto p = problem_of(fixture("twisted_cubic"));
  auto cert = std::get<LcCertificate>(build(p, 7));
  auto& lambda = cert.witness.combinations.front().lambda;
  lambda.front() = lambda.front() + FieldElement::one(p.ring->field);
  auto v = reverify(cert, p);
  EXPECT_FALSE(v.pass);
  EXPECT_FALSE(v.evidence["mismatches"].empty());
}

TEST(Reverify, EditedDiscrepancyFails) {
  auto p = problem_of(fixture("line_p3"));
  auto j = json::parse(serialize(build(p, 7)));
  j["discrepancy"]["discrepancy"] = 0;
  auto v = reverify_bytes(j.dump(2) + "\n", p);
  EXPECT_FALSE(v.pass);
}

TEST(Reverify, WrongProblemFails) {
  auto cert = build(problem_of(fixture("line_p3")), 7);
  auto other = problem_of(fixture("point_p2"));
  EXPECT_FALSE(reverify(cert, other).pass);
  auto p = problem_of(fixture("line_p3"));
  p.hypotheses.retract("Z-prime");
  EXPECT_FALSE(reverify(cert, p).pass);
}

TEST(Reverify, NonCanonicalBytesFail) {
  auto p = problem_of(fixture("point_p2"));
  auto bytes = serialize(build(p, 1));
  EXPECT_FALSE(reverify_bytes(json::parse(bytes).dump(), p).pass);
  EXPECT_TRUE(reverify_bytes(bytes, p).pass);
}

TEST(Reverify, ManySeeds) {
  for (const char* name : {"point_p2", "quadric_cone"}) {
    auto p = problem_of(fixture(name));
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      auto v = reverify_bytes(serialize(build(p, seed)), p);
      ASSERT_TRUE(v.pass) << name << " seed " << seed << " " << v.evidence.dump();
    }
  }
}

TEST(Reverify, SingleFieldMutantsAreRejected) {
  auto p = problem_of(fixture("line_p3"));
  auto bytes = serialize(build(p, 9));
  auto ms = mutants(bytes);
  EXPECT_GE(ms.size(), 100u);
  for (const auto& m : ms)
    if (!genuine_config_edit(m, p)) EXPECT_FALSE(reverify_bytes(m.bytes, p).pass) << m.path;
}

TEST(Reverify, SpecialMutantsAreRejected) {
  auto p = special_problem();
  auto bytes = serialize(build_special(p, 9));
  auto ms = mutants(bytes);
  EXPECT_GE(ms.size(), 100u);
  for (const auto& m : ms)
    if (!genuine_config_edit(m, p)) EXPECT_FALSE(reverify_bytes(m.bytes, p).pass) << m.path;
}

TEST(Reverify, GenuineConfigEditPasses) {
  // Bounds 20 and 21 draw the same 1x1 mixing matrix for this seed.
  auto p = special_problem();
  p.center = I(p.ring, {"x^2+y^2+z^2"});
  auto bytes = serialize(build_special(p, 3));
  auto j = json::parse(bytes);
  j["config"]["sample_bound"] = 21;
  Mutant m{"/config/sample_bound", j.dump(2) + "\n"};
  EXPECT_TRUE(genuine_config_edit(m, p));
  EXPECT_TRUE(reverify_bytes(m.bytes, p).pass);
  j["config"]["sample_bound"] = 22;
  EXPECT_FALSE(reverify_bytes(j.dump(2) + "\n", p).pass);
}

TEST(Reverify, TruthfulEditsPass) {
  auto p = problem_of(fixture("point_p2"));
  auto j = json::parse(serialize(build(p, 9)));
  j["config"]["max_retries"] = j["config"]["max_retries"].get<int>() + 5;
  EXPECT_TRUE(reverify_bytes(j.dump(2) + "\n", p).pass);
}
