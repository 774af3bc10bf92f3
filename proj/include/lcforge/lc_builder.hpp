#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcforge/config.hpp"
#include "lcforge/graded.hpp"
#include "lcforge/hypotheses.hpp"
#include "lcforge/predicates.hpp"

namespace lcforge {

inline constexpr const char* kCertificateVersion = "lcforge-certificate/1";
inline constexpr const char* kPotentialLcStatement =
    "Z is a log canonical center of (X, D_1 + ... + D_r); (X, Δ) is not claimed lc globally";

/// g = Σ λ_i f_i over a fixed graded-piece basis.
struct GenericCombination {
  std::vector<FieldElement> lambda;
  Polynomial g;
  int retries = 0;
};

/// Checks attached to one step X + (g_1..g_{i-1}) → X + (g_1..g_i).
struct StepVerdicts {
  PredicateVerdict non_zerodivisor;
  PredicateVerdict reduced;
  PredicateVerdict dimension_drop;
  PredicateVerdict multiplicity_one;

  std::vector<const PredicateVerdict*> all() const {
    return {&non_zerodivisor, &reduced, &dimension_drop, &multiplicity_one};
  }
  bool pass() const {
    for (auto* v : all())
      if (!v->pass) return false;
    return true;
  }
  friend bool operator==(const StepVerdicts&, const StepVerdicts&) = default;
};

struct SingularAmbient {
  std::string mode;  // "declared", "computed" or "projective_space"
  Ideal ideal;
};

/// W : I_Z, the union of the other components of W.
struct ResidualRecord {
  Ideal ideal;
  PredicateVerdict verdict;
};

struct CompleteIntersectionWitness {
  Ideal ambient;
  Ideal center;
  SingularAmbient singular_ambient;
  PredicateVerdict center_outside_singular_ambient;
  std::uint64_t degree = 0;
  std::vector<Polynomial> basis;
  std::vector<GenericCombination> combinations;
  std::vector<StepVerdicts> steps;
  PredicateVerdict component;
  std::optional<ResidualRecord> residual;

  std::size_t r() const { return combinations.size(); }
  std::vector<Polynomial> equations() const {
    std::vector<Polynomial> out;
    for (const auto& c : combinations) out.push_back(c.g);
    return out;
  }
  /// W = X + (g_1, ..., g_r).
  Ideal complete_intersection() const { return ambient.plus(equations()); }
  bool verified() const {
    if (!center_outside_singular_ambient.pass || !component.pass || steps.size() != r() || r() == 0) return false;
    for (const auto& s : steps)
      if (!s.pass()) return false;
    return true;
  }
};

/// Divisor arithmetic on the blow-up of W: every exceptional divisor E has
/// coefficient r - 1 in K_Y - f*K_X and appears with multiplicity one in
/// each f*D_i.
struct DiscrepancyRecord {
  long long r = 0;
  long long canonical_coefficient = 0;
  std::vector<long long> boundary_coefficients;
  std::vector<long long> multiplicities;
  std::vector<std::string> components;
  long long discrepancy = 0;

  static DiscrepancyRecord derive(long long r, std::vector<std::string> components) {
    if (r < 1) throw InvalidArgument("discrepancy needs r >= 1");
    DiscrepancyRecord d;
    d.r = r;
    d.canonical_coefficient = r - 1;
    d.boundary_coefficients.assign(static_cast<std::size_t>(r), 1);
    d.multiplicities.assign(static_cast<std::size_t>(r), 1);
    d.components = std::move(components);
    d.discrepancy = d.canonical_coefficient;
    for (std::size_t i = 0; i < d.boundary_coefficients.size(); ++i)
      d.discrepancy -= d.boundary_coefficients[i] * d.multiplicities[i];
    return d;
  }
  friend bool operator==(const DiscrepancyRecord&, const DiscrepancyRecord&) = default;
};

/// Largest degree in the reduced grevlex basis of Z.
inline std::uint64_t degree_bound(const Ideal& z) {
  if (z.is_zero()) throw InvalidArgument("degree bound of the zero ideal");
  std::uint64_t d = 0;
  for (const auto& g : z.canonical_basis()) d = std::max(d, g.total_degree());
  return d;
}

/// Sing X: the declared ideal if given, (1) for projective space, else the
/// Jacobian ideal of X.
inline SingularAmbient resolve_singular_ambient(const Ideal& ambient, const std::optional<Ideal>& declared) {
  if (declared) return {"declared", *declared};
  if (ambient.is_zero()) return {"projective_space", Ideal::unit(ambient.ring())};
  return {"computed", Ideal(ambient.ring(), singular_locus_ideal(ambient, Ideal::zero(ambient.ring())).canonical_basis())};
}

/// D = X ∩ V(g) is smooth at the generic point of Z: some (c_X + 1)-minor of
/// the Jacobian of (X, g) does not vanish on Z.
inline PredicateVerdict is_multiplicity_one(const Polynomial& g, const Ideal& z, const Ideal& ambient) {
  auto rows = ambient.generators();
  rows.push_back(g);
  auto size = static_cast<std::size_t>(static_cast<int>(ambient.ring()->nvars()) - affine_dimension(ambient) + 1);
  json witness = nullptr;
  for (const auto& m : minors_ideal(jacobian_matrix(rows), size, ambient.ring()))
    if (!radical_membership(m, z)) {
      witness = to_json(m);
      break;
    }
  return {"multiplicity_one",
          !witness.is_null(),
          {{"minor_size", size}, {"witness", witness}},
          "a Jacobian minor of the right size is nonzero at the generic point of Z"};
}

/// All checks for adding g to `current`.
inline StepVerdicts check_step(const Polynomial& g, const Ideal& current, const Ideal& z, const Ideal& ambient) {
  StepVerdicts s;
  s.non_zerodivisor = is_non_zerodivisor(g, current);
  auto next = current.plus(g);
  s.reduced = is_generically_reduced(next, ambient);
  int before = affine_dimension(current), after = affine_dimension(next);
  s.dimension_drop = {"dimension_drop", after == before - 1, {{"before", before}, {"after", after}},
                      "a non-zerodivisor cuts the dimension by one"};
  s.multiplicity_one = is_multiplicity_one(g, z, ambient);
  return s;
}

namespace detail {

inline Polynomial combine(const std::vector<Polynomial>& basis, const std::vector<FieldElement>& lambda) {
  if (basis.size() != lambda.size()) throw InvalidArgument("coefficient vector does not match basis");
  Polynomial g(basis.front().ring());
  for (std::size_t i = 0; i < basis.size(); ++i) g += basis[i].scaled(lambda[i]);
  return g;
}

struct Pick {
  GenericCombination combination;
  StepVerdicts verdicts;
};

inline Pick pick(const std::vector<Polynomial>& basis, const Ideal& current, const Ideal& z, const Ideal& ambient,
                 Rng& rng, const BuildConfig& config) {
  if (basis.empty()) throw InvalidArgument("empty graded piece");
  const auto& field = current.ring()->field;
  std::vector<std::string> failures;
  for (int attempt = 0; attempt <= config.max_retries; ++attempt) {
    std::vector<FieldElement> lambda;
    for (std::size_t i = 0; i < basis.size(); ++i) lambda.push_back(rng.sample(field, config.sample_bound));
    auto g = combine(basis, lambda);
    std::string label = "attempt " + std::to_string(attempt) + ": ";
    if (g.is_zero()) {
      failures.push_back(label + "zero combination");
      continue;
    }
    auto steps = check_step(g, current, z, ambient);
    if (steps.pass()) return {{std::move(lambda), std::move(g), attempt}, std::move(steps)};
    for (auto* v : steps.all())
      if (!v->pass) failures.push_back(label + v->name);
  }
  throw GenericityFailure("no generic combination found within " + std::to_string(config.max_retries) + " retries",
                          std::move(failures));
}

}  // namespace detail

/// Samples λ until g = Σ λ_i f_i passes every step check against `current`.
inline GenericCombination pick_generic_combination(const std::vector<Polynomial>& basis, const Ideal& current,
                                                   const Ideal& z, const Ideal& ambient, Rng& rng,
                                                   const BuildConfig& config) {
  return detail::pick(basis, current, z, ambient, rng, config).combination;
}

/// Pass iff W : I_Z is a proper ideal of the same dimension as Z.
inline ResidualRecord residual_record(const Ideal& w, const Ideal& z) {
  auto residual = ideal_quotient(w, z);
  bool proper = !residual.is_unit();
  int dim = proper ? projective_dimension(residual) : -1;
  int z_dim = projective_dimension(z);
  return {residual,
          {"residual_center",
           proper && dim == z_dim && dim >= 0,
           {{"dimension", dim}, {"center_dimension", z_dim}, {"ideal", to_json(residual.canonical_basis())}},
           "every component of W is a log canonical center"}};
}

/// Embeds Z in a complete intersection W = X + (g_1, ..., g_r) of degree-d
/// combinations with Z a component of W.
inline CompleteIntersectionWitness embed_in_ci(const Ideal& ambient, const Ideal& z, const SingularAmbient& sing,
                                               Rng& rng, const BuildConfig& config) {
  if (!same_ring(ambient.ring(), z.ring())) throw RingMismatch();
  if (!ambient.is_homogeneous() || !z.is_homogeneous()) throw InvalidArgument("ideals must be homogeneous");
  if (z.is_unit() || projective_dimension(z) < 0) throw InvalidArgument("Z must be a nonempty projective scheme");
  for (const auto& f : ambient.generators())
    if (!ideal_membership(f, z)) throw InvalidArgument("Z is not contained in X");
  int r = projective_dimension(ambient) - projective_dimension(z);
  if (r <= 0) throw InvalidArgument("Z has codimension 0 in X");

  CompleteIntersectionWitness w;
  w.ambient = ambient;
  w.center = z;
  w.singular_ambient = sing;
  auto inside = variety_containment(z, sing.ideal);
  w.center_outside_singular_ambient = {"center_outside_singular_ambient", !inside.pass, inside.evidence,
                                       "Z is not contained in Sing X"};
  if (!w.center_outside_singular_ambient.pass) throw VerificationFailure("Z lies inside the singular locus of X");

  w.degree = degree_bound(z);
  w.basis = graded_piece_basis(z.canonical_basis(), w.degree);
  Ideal current = ambient;
  for (int i = 0; i < r; ++i) {
    auto [combo, verdicts] = detail::pick(w.basis, current, z, ambient, rng, config);
    current = current.plus(combo.g);
    w.combinations.push_back(std::move(combo));
    w.steps.push_back(std::move(verdicts));
  }
  w.component = is_component(z, current);
  if (!w.component.pass) throw VerificationFailure("Z is not a component of the complete intersection");
  auto residual = residual_record(current, z);
  if (!residual.ideal.is_unit()) w.residual = std::move(residual);
  return w;
}

/// Discrepancy of every known exceptional divisor, -1 by construction.
inline DiscrepancyRecord discrepancy_certificate(const CompleteIntersectionWitness& w) {
  if (!w.verified()) throw VerificationFailure("discrepancy requested for an unverified witness");
  std::vector<std::string> components{"center"};
  if (w.residual && w.residual->verdict.pass) components.push_back("residual");
  return DiscrepancyRecord::derive(static_cast<long long>(w.r()), std::move(components));
}

/// The locus where the partial intersections X ∩ D_S fail to be smooth of the
/// expected dimension, for every nonempty S.
inline Ideal non_transversality_locus(const Ideal& ambient, const std::vector<Polynomial>& gs, std::uint32_t subset) {
  auto rows = ambient.generators();
  std::size_t picked = 0;
  for (std::size_t i = 0; i < gs.size(); ++i)
    if (subset & (1u << i)) {
      rows.push_back(gs[i]);
      ++picked;
    }
  auto codim_x = static_cast<std::size_t>(static_cast<int>(ambient.ring()->nvars()) - affine_dimension(ambient));
  auto minors = minors_ideal(jacobian_matrix(rows), codim_x + picked, ambient.ring());
  return Ideal(ambient.ring(), rows).plus(minors);
}

/// The snc locus of (X, Δ) avoids nothing but Sing W ∪ Sing X.
inline PredicateVerdict verify_snc_locus(const CompleteIntersectionWitness& w) {
  const auto& ring = w.ambient.ring();
  auto gs = w.equations();
  auto sing_w = singular_locus_ideal(w.complete_intersection(), w.ambient).canonical_basis();
  std::vector<Polynomial> bad;
  for (const auto& a : sing_w)
    for (const auto& b : w.singular_ambient.ideal.canonical_basis()) bad.push_back(a * b);
  Ideal excluded(ring, bad);
  bool pass = true;
  json subsets = json::array();
  for (std::uint32_t s = 1; s < (1u << gs.size()); ++s) {
    auto locus = non_transversality_locus(w.ambient, gs, s);
    auto v = variety_containment(locus, excluded);
    pass = pass && v.pass;
    subsets.push_back({{"subset", s}, {"pass", v.pass}, {"locus_dimension", v.evidence["source_dimension"]}});
  }
  return {"snc_away_from_singular_loci", pass, {{"subsets", subsets}},
          "(X, Δ) is snc away from Sing W ∪ Sing X"};
}

struct CitedStep {
  std::string claim;
  std::vector<std::string> consumes;
  bool satisfied = false;
  friend bool operator==(const CitedStep&, const CitedStep&) = default;
};

struct Conclusion {
  bool asserted = false;
  std::string statement;
  std::vector<std::string> missing;
  friend bool operator==(const Conclusion&, const Conclusion&) = default;
};

inline std::vector<CitedStep> cite(const HypothesisSet& h, std::vector<CitedStep> steps) {
  for (auto& s : steps) s.satisfied = h.missing(s.consumes).empty();
  return steps;
}

inline Conclusion conclude(const HypothesisSet& h, const std::vector<std::string>& required, bool verified,
                           std::string statement) {
  Conclusion c{false, std::move(statement), h.missing(required)};
  c.asserted = verified && c.missing.empty();
  return c;
}

struct LcCertificate {
  std::string version = kCertificateVersion;
  CompleteIntersectionWitness witness;
  PredicateVerdict snc;
  DiscrepancyRecord discrepancy;
  HypothesisSet hypotheses;
  std::vector<CitedStep> cited_steps;
  Conclusion conclusion;
  std::uint64_t seed = 0;
  BuildConfig config;
  int embedding_attempts = 1;

  const RingPtr& ring() const { return witness.ambient.ring(); }
};

inline std::vector<CitedStep> potential_lc_steps(const HypothesisSet& h) {
  return cite(h, {
                     {"the blow-up of X along W has exceptional divisors with coefficient r-1 in K_Y - f*K_X",
                      {"X-CM", "X-normal", "X-Q-Gorenstein"}},
                     {"each D_i pulls back to its strict transform plus every exceptional divisor once",
                      {"not-in-SingX"}},
                     {"the exceptional divisor over Z has discrepancy -1, so Z is a log canonical center",
                      {"Z-prime"}},
                 });
}

namespace detail {

template <class F>
auto staged(const char* stage, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const GenericityFailure& e) {
    throw GenericityFailure(std::string(stage) + ": " + e.what(), e.failures());
  } catch (const ResourceExhausted& e) {
    throw ResourceExhausted(std::string(stage) + ": " + e.what());
  } catch (const VerificationFailure& e) {
    throw VerificationFailure(std::string(stage) + ": " + e.what());
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(std::string(stage) + ": " + e.what());
  }
}

}  // namespace detail

/// Δ = D_1 + ... + D_r making Z a log canonical center of (X, Δ), valid
/// under the declared hypotheses. Embeddings failing the snc check are
/// redrawn up to config.max_retries times.
inline LcCertificate build_boundary(const Ideal& ambient, const Ideal& z, const std::optional<Ideal>& declared_sing,
                                    const HypothesisSet& declared, std::uint64_t seed, const BuildConfig& config) {
  config.validate();
  LcCertificate cert;
  cert.hypotheses = declared;
  cert.seed = seed;
  cert.config = config;
  Rng rng(seed);
  auto sing = detail::staged("singular ambient", [&] { return resolve_singular_ambient(ambient, declared_sing); });
  for (int attempt = 0;; ++attempt) {
    cert.witness = detail::staged("embed_in_ci", [&] { return embed_in_ci(ambient, z, sing, rng, config); });
    cert.snc = detail::staged("verify_snc_locus", [&] { return verify_snc_locus(cert.witness); });
    cert.embedding_attempts = attempt + 1;
    if (cert.snc.pass) break;
    if (attempt >= config.max_retries) throw VerificationFailure("verify_snc_locus: no embedding passed the snc check");
  }
  cert.discrepancy = detail::staged("discrepancy", [&] { return discrepancy_certificate(cert.witness); });
  cert.cited_steps = potential_lc_steps(declared);
  cert.conclusion = conclude(declared, potential_lc_requirements(), true,
                             kPotentialLcStatement);
  return cert;
}

}  // namespace lcforge
