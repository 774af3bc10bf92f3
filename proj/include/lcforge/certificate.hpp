#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lcforge/lc_builder.hpp"
#include "lcforge/problem.hpp"
#include "lcforge/special_lc_builder.hpp"

namespace lcforge {

using Certificate = std::variant<LcCertificate, SpecialLcCertificate>;

namespace detail {

inline json verdicts_json(const StepVerdicts& s) {
  return {{"non_zerodivisor", to_json(s.non_zerodivisor)},
          {"reduced", to_json(s.reduced)},
          {"dimension_drop", to_json(s.dimension_drop)},
          {"multiplicity_one", to_json(s.multiplicity_one)}};
}

inline json elements_json(const std::vector<FieldElement>& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(e.to_string());
  return out;
}

inline json cited_json(const std::vector<CitedStep>& steps) {
  json out = json::array();
  for (const auto& s : steps) out.push_back({{"claim", s.claim}, {"consumes", s.consumes}, {"satisfied", s.satisfied}});
  return out;
}

inline json conclusion_json(const Conclusion& c) {
  return {{"asserted", c.asserted}, {"statement", c.statement}, {"missing", c.missing}};
}

inline json discrepancy_json(const DiscrepancyRecord& d) {
  return {{"r", d.r},
          {"canonical_coefficient", d.canonical_coefficient},
          {"boundary_coefficients", d.boundary_coefficients},
          {"multiplicities", d.multiplicities},
          {"components", d.components},
          {"discrepancy", d.discrepancy}};
}

inline json divisors_json(const std::vector<Polynomial>& eqs) {
  json out = json::array();
  for (const auto& g : eqs) out.push_back({{"equation", to_json(g)}, {"coefficient", 1}});
  return out;
}

inline json singular_ambient_json(const SingularAmbient& s) {
  return {{"mode", s.mode}, {"ideal", to_json(s.ideal.generators())}};
}

inline json common_json(const RingPtr& ring, const Ideal& ambient, const std::vector<Polynomial>& center,
                        const HypothesisSet& h, const std::vector<CitedStep>& cited, const Conclusion& c,
                        const DiscrepancyRecord& d, std::uint64_t seed, const BuildConfig& config) {
  return {{"version", kCertificateVersion},
          {"ring", ring_to_json(ring)},
          {"ambient_ideal", to_json(ambient.generators())},
          {"center_ideal", to_json(center)},
          {"discrepancy", discrepancy_json(d)},
          {"hypotheses", to_json(h)},
          {"cited_steps", cited_json(cited)},
          {"conclusion", conclusion_json(c)},
          {"seed", std::to_string(seed)},
          {"config", to_json(config)}};
}

// Strict readers. Every accepted document re-serializes to itself.

inline void expect_keys(const json& j, std::initializer_list<const char*> keys, const char* where) {
  if (!j.is_object()) throw InvalidArgument(std::string(where) + " must be an object");
  if (j.size() != keys.size()) throw InvalidArgument(std::string(where) + " has unexpected fields");
  for (const char* k : keys)
    if (!j.contains(k)) throw InvalidArgument(std::string(where) + " lacks '" + k + "'");
}

inline long long integer(const json& j, const char* where) {
  if (!j.is_number_integer()) throw InvalidArgument(std::string(where) + " must be an integer");
  return j.get<long long>();
}

inline bool boolean(const json& j, const char* where) {
  if (!j.is_boolean()) throw InvalidArgument(std::string(where) + " must be a boolean");
  return j.get<bool>();
}

inline std::string string(const json& j, const char* where) {
  if (!j.is_string()) throw InvalidArgument(std::string(where) + " must be a string");
  return j.get<std::string>();
}

inline std::vector<std::string> strings(const json& j, const char* where) {
  if (!j.is_array()) throw InvalidArgument(std::string(where) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(string(e, where));
  return out;
}

inline std::vector<long long> integers(const json& j, const char* where) {
  if (!j.is_array()) throw InvalidArgument(std::string(where) + " must be an array");
  std::vector<long long> out;
  for (const auto& e : j) out.push_back(integer(e, where));
  return out;
}

inline FieldElement element(const json& j, const FieldSpec& field) {
  auto text = string(j, "coefficient");
  auto e = FieldElement::parse(text, field);
  if (e.to_string() != text) throw InvalidArgument("non-canonical coefficient '" + text + "'");
  return e;
}

inline std::vector<FieldElement> elements(const json& j, const FieldSpec& field) {
  if (!j.is_array()) throw InvalidArgument("coefficient list must be an array");
  std::vector<FieldElement> out;
  for (const auto& e : j) out.push_back(element(e, field));
  return out;
}

inline PredicateVerdict verdict(const json& j) {
  expect_keys(j, {"name", "pass", "evidence", "citation"}, "verdict");
  return {string(j["name"], "verdict name"), boolean(j["pass"], "verdict pass"), j["evidence"],
          string(j["citation"], "verdict citation")};
}

inline std::uint64_t seed(const json& j) {
  auto text = string(j, "seed");
  if (text.empty() || text.size() > 20 || text.find_first_not_of("0123456789") != std::string::npos ||
      (text.size() > 1 && text[0] == '0'))
    throw InvalidArgument("seed must be a decimal 64-bit integer");
  auto value = std::stoull(text);
  if (std::to_string(value) != text) throw InvalidArgument("seed out of range");
  return value;
}

inline DiscrepancyRecord discrepancy(const json& j) {
  expect_keys(j, {"r", "canonical_coefficient", "boundary_coefficients", "multiplicities", "components", "discrepancy"},
              "discrepancy");
  DiscrepancyRecord d;
  d.r = integer(j["r"], "r");
  d.canonical_coefficient = integer(j["canonical_coefficient"], "canonical_coefficient");
  d.boundary_coefficients = integers(j["boundary_coefficients"], "boundary_coefficients");
  d.multiplicities = integers(j["multiplicities"], "multiplicities");
  d.components = strings(j["components"], "components");
  d.discrepancy = integer(j["discrepancy"], "discrepancy");
  return d;
}

inline std::vector<CitedStep> cited(const json& j) {
  if (!j.is_array()) throw InvalidArgument("cited_steps must be an array");
  std::vector<CitedStep> out;
  for (const auto& s : j) {
    expect_keys(s, {"claim", "consumes", "satisfied"}, "cited step");
    out.push_back({string(s["claim"], "claim"), strings(s["consumes"], "consumes"), boolean(s["satisfied"], "satisfied")});
  }
  return out;
}

inline Conclusion conclusion(const json& j) {
  expect_keys(j, {"asserted", "statement", "missing"}, "conclusion");
  return {boolean(j["asserted"], "asserted"), string(j["statement"], "statement"), strings(j["missing"], "missing")};
}

inline std::vector<Polynomial> divisors(const json& j, const RingPtr& ring) {
  if (!j.is_array()) throw InvalidArgument("divisors must be an array");
  std::vector<Polynomial> out;
  for (const auto& d : j) {
    expect_keys(d, {"equation", "coefficient"}, "divisor");
    if (integer(d["coefficient"], "coefficient") != 1) throw InvalidArgument("boundary coefficients must be 1");
    out.push_back(polynomial_from_json(d["equation"], ring));
  }
  return out;
}

inline SingularAmbient singular_ambient(const json& j, const RingPtr& ring) {
  expect_keys(j, {"mode", "ideal"}, "singular_ambient");
  return {string(j["mode"], "mode"), Ideal(ring, polynomials_from_json(j["ideal"], ring))};
}

inline std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace detail

inline json to_json(const LcCertificate& c) {
  const auto& w = c.witness;
  auto out = detail::common_json(c.ring(), w.ambient, w.center.generators(), c.hypotheses, c.cited_steps,
                                 c.conclusion, c.discrepancy, c.seed, c.config);
  out["kind"] = to_string(Mode::PotentialLc);
  json combos = json::array(), steps = json::array();
  for (const auto& k : w.combinations)
    combos.push_back({{"lambda", detail::elements_json(k.lambda)}, {"g", to_json(k.g)}, {"retries", k.retries}});
  for (const auto& s : w.steps) steps.push_back(detail::verdicts_json(s));
  json residual = nullptr;
  if (w.residual) residual = {{"ideal", to_json(w.residual->ideal.generators())}, {"verdict", to_json(w.residual->verdict)}};
  out["witness"] = {{"singular_ambient", detail::singular_ambient_json(w.singular_ambient)},
                    {"center_outside_singular_ambient", to_json(w.center_outside_singular_ambient)},
                    {"degree", w.degree},
                    {"basis", to_json(w.basis)},
                    {"combinations", combos},
                    {"steps", steps},
                    {"component", to_json(w.component)},
                    {"residual", residual},
                    {"embedding_attempts", c.embedding_attempts}};
  out["boundary"] = {{"divisors", detail::divisors_json(w.equations())}, {"snc", to_json(c.snc)}};
  return out;
}

inline json to_json(const SpecialLcCertificate& c) {
  auto out = detail::common_json(c.ring(), c.ambient, c.generators, c.hypotheses, c.cited_steps, c.conclusion,
                                 c.discrepancy, c.seed, c.config);
  out["kind"] = to_string(Mode::SpecialLc);
  json matrix = json::array();
  for (const auto& row : c.mixing.entries) matrix.push_back(detail::elements_json(row));
  json reports = json::array();
  for (const auto& r : c.reports)
    reports.push_back({{"subset", r.subset},
                       {"ideal", to_json(r.ideal)},
                       {"reduced", to_json(r.reduced)},
                       {"normal", to_json(r.normal)},
                       {"smooth_away", to_json(r.smooth_away)}});
  out["witness"] = {{"singular_ambient", detail::singular_ambient_json(c.singular_ambient)},
                    {"regular_sequence", to_json(c.regular_sequence)},
                    {"outside_singular_ambient", to_json(c.outside_singular_ambient)},
                    {"mixing",
                     {{"matrix", matrix}, {"determinant", c.mixing.determinant.to_string()}, {"retries", c.mixing.retries}}},
                    {"mixed", to_json(c.mixed)},
                    {"mixed_regular_sequence", to_json(c.mixed_regular_sequence)},
                    {"reports", reports},
                    {"mixing_attempts", c.mixing_attempts}};
  out["boundary"] = {{"divisors", detail::divisors_json(c.mixed)}};
  return out;
}

inline json to_json(const Certificate& c) {
  return std::visit([](const auto& x) { return to_json(x); }, c);
}

/// Canonical bytes: sorted keys, two-space indent, trailing newline.
inline std::string serialize(const Certificate& c) { return to_json(c).dump(2) + "\n"; }

inline Certificate certificate_from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("certificate must be a JSON object");
  if (!j.contains("version") || !j["version"].is_string()) throw InvalidArgument("certificate lacks a version");
  if (j["version"] != kCertificateVersion)
    throw UnsupportedVersion("unsupported certificate version '" + j["version"].get<std::string>() + "'");
  detail::expect_keys(j,
                      {"version", "kind", "ring", "ambient_ideal", "center_ideal", "witness", "boundary", "discrepancy",
                       "hypotheses", "cited_steps", "conclusion", "seed", "config"},
                      "certificate");
  auto ring = ring_from_json(j["ring"]);
  Ideal ambient(ring, polynomials_from_json(j["ambient_ideal"], ring));
  auto center = polynomials_from_json(j["center_ideal"], ring);
  auto hypotheses = hypotheses_from_json(j["hypotheses"]);
  auto cited = detail::cited(j["cited_steps"]);
  auto conclusion = detail::conclusion(j["conclusion"]);
  auto discrepancy = detail::discrepancy(j["discrepancy"]);
  auto seed = detail::seed(j["seed"]);
  auto config = config_from_json(j["config"]);
  const auto& w = j["witness"];
  auto kind = detail::string(j["kind"], "kind");

  if (kind == to_string(Mode::PotentialLc)) {
    LcCertificate c;
    detail::expect_keys(w,
                        {"singular_ambient", "center_outside_singular_ambient", "degree", "basis", "combinations", "steps",
                         "component", "residual", "embedding_attempts"},
                        "witness");
    auto& wit = c.witness;
    wit.ambient = ambient;
    wit.center = Ideal(ring, center);
    wit.singular_ambient = detail::singular_ambient(w["singular_ambient"], ring);
    wit.center_outside_singular_ambient = detail::verdict(w["center_outside_singular_ambient"]);
    auto degree = detail::integer(w["degree"], "degree");
    if (degree < 0) throw InvalidArgument("degree must be nonnegative");
    wit.degree = static_cast<std::uint64_t>(degree);
    wit.basis = polynomials_from_json(w["basis"], ring);
    if (!w["combinations"].is_array() || !w["steps"].is_array()) throw InvalidArgument("malformed witness");
    for (const auto& k : w["combinations"]) {
      detail::expect_keys(k, {"lambda", "g", "retries"}, "combination");
      wit.combinations.push_back({detail::elements(k["lambda"], ring->field), polynomial_from_json(k["g"], ring),
                                  static_cast<int>(detail::integer(k["retries"], "retries"))});
    }
    for (const auto& s : w["steps"]) {
      detail::expect_keys(s, {"non_zerodivisor", "reduced", "dimension_drop", "multiplicity_one"}, "step");
      wit.steps.push_back({detail::verdict(s["non_zerodivisor"]), detail::verdict(s["reduced"]),
                           detail::verdict(s["dimension_drop"]), detail::verdict(s["multiplicity_one"])});
    }
    wit.component = detail::verdict(w["component"]);
    if (!w["residual"].is_null()) {
      detail::expect_keys(w["residual"], {"ideal", "verdict"}, "residual");
      wit.residual = ResidualRecord{Ideal(ring, polynomials_from_json(w["residual"]["ideal"], ring)),
                                    detail::verdict(w["residual"]["verdict"])};
    }
    c.embedding_attempts = static_cast<int>(detail::integer(w["embedding_attempts"], "embedding_attempts"));
    detail::expect_keys(j["boundary"], {"divisors", "snc"}, "boundary");
    if (detail::divisors(j["boundary"]["divisors"], ring) != wit.equations())
      throw InvalidArgument("boundary divisors differ from the witness equations");
    c.snc = detail::verdict(j["boundary"]["snc"]);
    c.discrepancy = discrepancy;
    c.hypotheses = hypotheses;
    c.cited_steps = cited;
    c.conclusion = conclusion;
    c.seed = seed;
    c.config = config;
    return c;
  }
  if (kind == to_string(Mode::SpecialLc)) {
    SpecialLcCertificate c;
    detail::expect_keys(w,
                        {"singular_ambient", "regular_sequence", "outside_singular_ambient", "mixing", "mixed",
                         "mixed_regular_sequence", "reports", "mixing_attempts"},
                        "witness");
    c.ambient = ambient;
    c.generators = center;
    c.singular_ambient = detail::singular_ambient(w["singular_ambient"], ring);
    c.regular_sequence = detail::verdict(w["regular_sequence"]);
    c.outside_singular_ambient = detail::verdict(w["outside_singular_ambient"]);
    const auto& m = w["mixing"];
    detail::expect_keys(m, {"matrix", "determinant", "retries"}, "mixing");
    if (!m["matrix"].is_array()) throw InvalidArgument("mixing matrix must be an array");
    for (const auto& row : m["matrix"]) c.mixing.entries.push_back(detail::elements(row, ring->field));
    c.mixing.determinant = detail::element(m["determinant"], ring->field);
    c.mixing.retries = static_cast<int>(detail::integer(m["retries"], "retries"));
    c.mixed = polynomials_from_json(w["mixed"], ring);
    c.mixed_regular_sequence = detail::verdict(w["mixed_regular_sequence"]);
    if (!w["reports"].is_array()) throw InvalidArgument("reports must be an array");
    for (const auto& r : w["reports"]) {
      detail::expect_keys(r, {"subset", "ideal", "reduced", "normal", "smooth_away"}, "report");
      auto subset = detail::integer(r["subset"], "subset");
      if (subset < 0 || subset > 0xffff) throw InvalidArgument("subset out of range");
      c.reports.push_back({static_cast<std::uint32_t>(subset), polynomials_from_json(r["ideal"], ring),
                           detail::verdict(r["reduced"]), detail::verdict(r["normal"]), detail::verdict(r["smooth_away"])});
    }
    c.mixing_attempts = static_cast<int>(detail::integer(w["mixing_attempts"], "mixing_attempts"));
    detail::expect_keys(j["boundary"], {"divisors"}, "boundary");
    if (detail::divisors(j["boundary"]["divisors"], ring) != c.mixed)
      throw InvalidArgument("boundary divisors differ from the mixed equations");
    c.discrepancy = discrepancy;
    c.hypotheses = hypotheses;
    c.cited_steps = cited;
    c.conclusion = conclusion;
    c.seed = seed;
    c.config = config;
    return c;
  }
  throw InvalidArgument("unknown certificate kind '" + kind + "'");
}

/// Parses certificate bytes. Syntax errors carry the line and column;
/// structural errors are InvalidArgument, unknown versions UnsupportedVersion.
inline Certificate deserialize(std::string_view bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::parse_error& e) {
    auto [line, column] = detail::line_and_column(bytes, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(std::string("malformed certificate JSON: ") + e.what(), line, column);
  }
  try {
    return certificate_from_json(j);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed certificate: ") + e.what());
  }
}

namespace detail {

class Audit {
 public:
  void check(bool ok, const std::string& what) {
    if (!ok) mismatches_.push_back(what);
  }
  template <class F>
  void guarded(const std::string& stage, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      mismatches_.push_back(stage + ": " + e.what());
    }
  }
  bool clean() const { return mismatches_.empty(); }
  PredicateVerdict verdict() const {
    return {"reverify", clean(), {{"mismatches", mismatches_}}, "every stored verdict recomputed and the build replayed"};
  }

 private:
  std::vector<std::string> mismatches_;
};

inline void audit_inputs(Audit& a, const RingPtr& ring, const Ideal& ambient, const std::vector<Polynomial>& center,
                         const HypothesisSet& h, const SingularAmbient& sing, const BuildConfig& config,
                         const ProblemSpec& problem) {
  a.check(same_ring(ring, problem.ring), "ring differs from the problem");
  if (!a.clean()) return;
  a.check(ambient.generators() == problem.ambient.generators(), "ambient ideal differs from the problem");
  a.check(center == problem.center.generators(), "center ideal differs from the problem");
  a.check(h == problem.hypotheses, "hypotheses differ from the problem's declarations");
  auto expected = resolve_singular_ambient(problem.ambient, problem.sing_ambient);
  a.check(sing.mode == expected.mode, "singular ambient mode mismatch");
  a.check(sing.ideal.generators() == expected.ideal.generators(), "singular ambient ideal mismatch");
  a.guarded("config", [&] { config.validate(); });
}

inline void audit(Audit& a, const LcCertificate& c, const ProblemSpec& problem) {
  const auto& w = c.witness;
  audit_inputs(a, c.ring(), w.ambient, w.center.generators(), c.hypotheses, w.singular_ambient, c.config, problem);
  if (!a.clean()) return;
  a.guarded("witness", [&] {
    auto inside = variety_containment(w.center, w.singular_ambient.ideal);
    a.check(w.center_outside_singular_ambient ==
                PredicateVerdict{"center_outside_singular_ambient", !inside.pass, inside.evidence, "Z is not contained in Sing X"},
            "center_outside_singular_ambient verdict mismatch");
    a.check(w.degree == degree_bound(w.center), "degree mismatch");
    a.check(w.basis == graded_piece_basis(w.center.canonical_basis(), w.degree), "basis mismatch");
    auto r = projective_dimension(w.ambient) - projective_dimension(w.center);
    a.check(r >= 1 && static_cast<std::size_t>(r) == w.r(), "number of equations differs from the codimension");
    a.check(w.steps.size() == w.r(), "step count mismatch");
    if (!a.clean()) return;
    Ideal current = w.ambient;
    for (std::size_t i = 0; i < w.r(); ++i) {
      const auto& k = w.combinations[i];
      auto tag = "equation " + std::to_string(i + 1) + ": ";
      a.check(!w.basis.empty() && k.lambda.size() == w.basis.size() && detail::combine(w.basis, k.lambda) == k.g, tag + "g != Σ λ_i f_i");
      a.check(!k.g.is_zero(), tag + "g is zero");
      a.check(ideal_membership(k.g, w.center), tag + "g is not in I_Z");
      a.check(k.retries >= 0 && k.retries <= c.config.max_retries, tag + "retry count out of range");
      if (k.g.is_zero()) return;
      a.check(check_step(k.g, current, w.center, w.ambient) == w.steps[i], tag + "step verdicts mismatch");
      current = current.plus(k.g);
    }
    a.check(w.component == is_component(w.center, current), "component verdict mismatch");
    auto residual = residual_record(current, w.center);
    if (residual.ideal.is_unit()) {
      a.check(!w.residual.has_value(), "residual recorded for a unit quotient");
    } else {
      a.check(w.residual.has_value() && w.residual->ideal.generators() == residual.ideal.generators() &&
                  w.residual->verdict == residual.verdict,
              "residual mismatch");
    }
    a.check(w.verified(), "witness has a failing verdict");
  });
  if (!a.clean()) return;
  a.guarded("boundary", [&] { a.check(c.snc == verify_snc_locus(w), "snc verdict mismatch"); });
  a.check(c.snc.pass, "snc verdict fails");
  a.guarded("discrepancy", [&] {
    a.check(c.discrepancy == discrepancy_certificate(w), "discrepancy record differs from the re-derivation");
  });
  a.check(c.discrepancy.discrepancy == -1, "discrepancy is not -1");
  a.check(c.cited_steps == potential_lc_steps(c.hypotheses), "cited steps mismatch");
  a.check(c.conclusion ==
              conclude(c.hypotheses, potential_lc_requirements(), true, kPotentialLcStatement),
          "conclusion mismatch");
  a.check(c.embedding_attempts >= 1 && c.embedding_attempts <= c.config.max_retries + 1, "embedding attempts out of range");
}

inline void audit(Audit& a, const SpecialLcCertificate& c, const ProblemSpec& problem) {
  audit_inputs(a, c.ring(), c.ambient, c.generators, c.hypotheses, c.singular_ambient, c.config, problem);
  if (!a.clean()) return;
  a.guarded("witness", [&] {
    a.check(c.generators.size() <= static_cast<std::size_t>(c.config.max_r), "r exceeds max_r");
    a.check(c.regular_sequence == is_regular_sequence(c.generators, c.ambient), "regular sequence verdict mismatch");
    auto inside = variety_containment(c.w(), c.singular_ambient.ideal);
    a.check(c.outside_singular_ambient ==
                PredicateVerdict{"center_outside_singular_ambient", !inside.pass, inside.evidence, "W is not contained in Sing X"},
            "outside_singular_ambient verdict mismatch");
    const auto& field = c.ring()->field;
    a.check(c.mixing.entries.size() == c.generators.size(), "mixing matrix has the wrong size");
    if (!a.clean()) return;
    a.check(determinant(c.mixing.entries, field) == c.mixing.determinant && !c.mixing.determinant.is_zero(),
            "mixing determinant mismatch");
    a.check(c.mixing.retries >= 0 && c.mixing.retries < kMatrixSampleCap, "matrix retry count out of range");
    a.check(c.mixed == mix_generators(c.generators, c.mixing), "mixed generators mismatch");
    a.check(c.mixed_regular_sequence == is_regular_sequence(c.mixed, c.ambient), "mixed regular sequence mismatch");
    auto excluded = excluded_locus(c.w(), c.ambient, c.singular_ambient.ideal);
    auto reports = verify_all_subsets(c.mixed, c.ambient, excluded);
    a.check(c.reports == reports, "subset reports mismatch");
    for (const auto& r : c.reports) a.check(r.pass(), "subset " + subset_label(r.subset) + " fails");
  });
  if (!a.clean()) return;
  a.check(c.discrepancy == DiscrepancyRecord::derive(static_cast<long long>(c.generators.size()), {"W"}),
          "discrepancy record differs from the re-derivation");
  a.check(c.discrepancy.discrepancy == -1, "discrepancy is not -1");
  a.check(c.cited_steps == special_lc_steps(c.hypotheses), "cited steps mismatch");
  a.check(c.conclusion == conclude(c.hypotheses, special_lc_requirements(), c.mixed_regular_sequence.pass, kSpecialLcStatement),
          "conclusion mismatch");
  a.check(c.mixing_attempts >= 1 && c.mixing_attempts <= c.config.max_retries + 1, "mixing attempts out of range");
}

inline Certificate rebuild(const Certificate& cert, const ProblemSpec& problem) {
  if (auto lc = std::get_if<LcCertificate>(&cert))
    return build_boundary(problem.ambient, problem.center, problem.sing_ambient, problem.hypotheses, lc->seed, lc->config);
  const auto& sp = std::get<SpecialLcCertificate>(cert);
  return build_special_boundary(problem.ambient, problem.center.generators(), problem.sing_ambient, problem.hypotheses,
                                sp.seed, sp.config);
}

}  // namespace detail

/// Recomputes every stored verdict from the stored equations (no
/// randomness), re-derives the discrepancy, then replays the seeded build
/// and compares bytes. Mismatches are listed in the evidence.
inline PredicateVerdict reverify(const Certificate& cert, const ProblemSpec& problem) {
  detail::Audit a;
  std::visit([&](const auto& c) { detail::audit(a, c, problem); }, cert);
  if (a.clean())
    a.guarded("replay", [&] { a.check(serialize(detail::rebuild(cert, problem)) == serialize(cert), "replay differs"); });
  return a.verdict();
}

/// reverify on raw bytes, also requiring the bytes to be canonical.
inline PredicateVerdict reverify_bytes(std::string_view bytes, const ProblemSpec& problem) {
  detail::Audit a;
  std::optional<Certificate> cert;
  a.guarded("parse", [&] { cert = deserialize(bytes); });
  if (!cert) return a.verdict();
  a.check(serialize(*cert) == bytes, "bytes are not in canonical form");
  if (!a.clean()) return a.verdict();
  return reverify(*cert, problem);
}

}  // namespace lcforge
