#pragma once

#include <cstdint>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "lcforge/lc_builder.hpp"

namespace lcforge {

/// Invertible r×r matrix Ξ with G_i = Σ_j μ_ij F_j.
struct MixingMatrix {
  FieldMatrix entries;
  FieldElement determinant;
  int retries = 0;
};

inline constexpr int kMatrixSampleCap = 100;
inline constexpr const char* kSpecialLcStatement =
    "(X, D_1 + ... + D_r) is a log canonical pair and W is a log canonical center";

inline MixingMatrix sample_invertible_matrix(std::size_t r, Rng& rng, const BuildConfig& config,
                                             const FieldSpec& field) {
  if (r == 0) throw InvalidArgument("mixing matrix needs r >= 1");
  for (int attempt = 0; attempt < kMatrixSampleCap; ++attempt) {
    FieldMatrix m(r, std::vector<FieldElement>(r));
    for (auto& row : m)
      for (auto& e : row) e = rng.sample(field, config.sample_bound);
    auto det = determinant(m, field);
    if (!det.is_zero()) return {std::move(m), std::move(det), attempt};
  }
  throw GenericityFailure("no invertible matrix among " + std::to_string(kMatrixSampleCap) + " samples",
                          {"singular mixing matrix"});
}

/// G_i = Σ_j μ_ij F_j for equal-degree F; ideal(G) = ideal(F) is asserted.
inline std::vector<Polynomial> mix_generators(const std::vector<Polynomial>& fs, const MixingMatrix& xi) {
  if (fs.empty() || xi.entries.size() != fs.size()) throw InvalidArgument("matrix size does not match generators");
  const auto& ring = fs.front().ring();
  std::optional<std::uint64_t> degree;
  for (const auto& f : fs) {
    auto h = f.homogeneity();
    if (!h.homogeneous || !h.degree) throw InvalidArgument("generators must be nonzero forms");
    if (degree && *degree != *h.degree) throw InvalidArgument("not a special complete intersection: degrees differ");
    degree = h.degree;
  }
  if (determinant(xi.entries, ring->field).is_zero()) throw InvalidArgument("singular mixing matrix");
  std::vector<Polynomial> gs;
  for (const auto& row : xi.entries) {
    if (row.size() != fs.size()) throw InvalidArgument("mixing matrix is not square");
    Polynomial g(ring);
    for (std::size_t j = 0; j < fs.size(); ++j) g += fs[j].scaled(row[j]);
    gs.push_back(std::move(g));
  }
  if (!same_ideal(Ideal(ring, gs), Ideal(ring, fs))) throw std::logic_error("internal error: mixing changed the ideal");
  return gs;
}

/// Verdicts for the partial intersection D_S = X ∩ V(G_i : i ∈ S).
struct SubsetReport {
  std::uint32_t subset = 0;
  std::vector<Polynomial> ideal;  // canonical basis of X + (G_S)
  PredicateVerdict reduced;
  PredicateVerdict normal;
  PredicateVerdict smooth_away;

  bool pass() const { return reduced.pass && normal.pass && smooth_away.pass; }
  friend bool operator==(const SubsetReport&, const SubsetReport&) = default;
};

inline std::string subset_label(std::uint32_t subset) {
  std::string out = "{";
  for (std::uint32_t i = 0; i < 32; ++i)
    if (subset & (1u << i)) out += (out.size() > 1 ? "," : "") + std::to_string(i + 1);
  return out + "}";
}

/// `excluded` is Sing W · Sing X.
inline SubsetReport verify_subset_ci(const std::vector<Polynomial>& gs, std::uint32_t subset, const Ideal& ambient,
                                     const Ideal& excluded) {
  SubsetReport rep;
  rep.subset = subset;
  const std::uint32_t full = (1u << gs.size()) - 1;
  if (subset == 0) {
    rep.ideal = ambient.canonical_basis();
    rep.reduced = {"reduced", true, {{"declared", "X-normal"}}, "D_S = X, normal by declaration"};
    rep.normal = {"normal", true, {{"declared", "X-normal"}}, "D_S = X, normal by declaration"};
    rep.smooth_away = {"smooth_away", true, {{"declared", "X-normal"}}, "D_S = X"};
    return rep;
  }
  std::vector<Polynomial> picked;
  for (std::size_t i = 0; i < gs.size(); ++i)
    if (subset & (1u << i)) picked.push_back(gs[i]);
  auto d = ambient.plus(picked);
  rep.ideal = d.canonical_basis();
  rep.reduced = is_generically_reduced(d, ambient);
  rep.normal = is_normal_ci(d, ambient);
  if (subset == full) {
    rep.smooth_away = {"smooth_away", true, {{"vacuous", true}}, "D_S = W"};
  } else {
    auto v = variety_containment(singular_locus_ideal(d, ambient), excluded);
    rep.smooth_away = {"smooth_away", v.pass, v.evidence, "D_S is smooth away from Sing W ∪ Sing X"};
  }
  return rep;
}

/// Reports for every S ⊆ {1..r}, ordered by bitmask.
inline std::vector<SubsetReport> verify_all_subsets(const std::vector<Polynomial>& gs, const Ideal& ambient,
                                                    const Ideal& excluded, bool parallel = true) {
  const std::uint32_t count = 1u << gs.size();
  std::vector<SubsetReport> out;
  if (!parallel) {
    for (std::uint32_t s = 0; s < count; ++s) out.push_back(verify_subset_ci(gs, s, ambient, excluded));
    return out;
  }
  std::vector<std::future<SubsetReport>> jobs;
  for (std::uint32_t s = 0; s < count; ++s)
    jobs.push_back(std::async(std::launch::async, [&, s] { return verify_subset_ci(gs, s, ambient, excluded); }));
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

struct SpecialLcCertificate {
  std::string version = kCertificateVersion;
  Ideal ambient;
  std::vector<Polynomial> generators;  // F
  SingularAmbient singular_ambient;
  PredicateVerdict regular_sequence;
  PredicateVerdict outside_singular_ambient;
  MixingMatrix mixing;
  std::vector<Polynomial> mixed;  // G
  PredicateVerdict mixed_regular_sequence;
  std::vector<SubsetReport> reports;
  DiscrepancyRecord discrepancy;
  HypothesisSet hypotheses;
  std::vector<CitedStep> cited_steps;
  Conclusion conclusion;
  std::uint64_t seed = 0;
  BuildConfig config;
  int mixing_attempts = 1;

  const RingPtr& ring() const { return ambient.ring(); }
  Ideal w() const { return ambient.plus(generators); }
};

inline std::vector<CitedStep> special_lc_steps(const HypothesisSet& h) {
  return cite(h, {
                     {"each partial intersection D_S with the trace of the remaining D_i is a Du Bois pair",
                      {"X-lc", "W-lc", "W-irreducible"}},
                     {"by excision the blow-up of W with its boundary components is Du Bois", {"X-lc", "not-in-SingX"}},
                     {"a Du Bois pair on a normal variety with K_X Cartier is log canonical, so (X, Δ) is lc with W an "
                      "lc center",
                      {"X-normal", "K_X-Cartier", "X-CM"}},
                 });
}

/// Excluded locus Sing W · Sing X from canonical bases.
inline Ideal excluded_locus(const Ideal& w, const Ideal& ambient, const Ideal& sing_ambient) {
  std::vector<Polynomial> bad;
  auto sing_w = singular_locus_ideal(w, ambient).canonical_basis();
  for (const auto& a : sing_w)
    for (const auto& b : sing_ambient.canonical_basis()) bad.push_back(a * b);
  return Ideal(w.ring(), bad);
}

/// Δ = Σ V(G_i) ∩ X for W = X ∩ V(F_1..F_r) of equal degrees, with the
/// lattice of partial intersections verified. Redraws Ξ up to
/// config.max_retries times before giving up.
inline SpecialLcCertificate build_special_boundary(const Ideal& ambient, const std::vector<Polynomial>& fs,
                                                   const std::optional<Ideal>& declared_sing,
                                                   const HypothesisSet& declared, std::uint64_t seed,
                                                   const BuildConfig& config) {
  config.validate();
  if (fs.empty()) throw InvalidArgument("W needs at least one equation");
  if (fs.size() > static_cast<std::size_t>(config.max_r))
    throw InvalidArgument("r = " + std::to_string(fs.size()) + " exceeds max_r = " + std::to_string(config.max_r));
  for (const auto& f : fs)
    if (!same_ring(f.ring(), ambient.ring())) throw RingMismatch();
  SpecialLcCertificate cert;
  cert.ambient = ambient;
  cert.generators = fs;
  cert.hypotheses = declared;
  cert.seed = seed;
  cert.config = config;
  cert.singular_ambient = detail::staged("singular ambient", [&] { return resolve_singular_ambient(ambient, declared_sing); });
  cert.regular_sequence = is_regular_sequence(fs, ambient);
  if (!cert.regular_sequence.pass) throw VerificationFailure("W's equations are not a regular sequence in X");
  auto w = cert.w();
  auto inside = variety_containment(w, cert.singular_ambient.ideal);
  cert.outside_singular_ambient = {"center_outside_singular_ambient", !inside.pass, inside.evidence,
                                   "W is not contained in Sing X"};
  if (!cert.outside_singular_ambient.pass) throw VerificationFailure("W lies inside the singular locus of X");

  auto excluded = excluded_locus(w, ambient, cert.singular_ambient.ideal);
  Rng rng(seed);
  std::vector<std::string> failing;
  for (int attempt = 0; attempt <= config.max_retries; ++attempt) {
    cert.mixing = detail::staged("sample_invertible_matrix",
                                 [&] { return sample_invertible_matrix(fs.size(), rng, config, ambient.ring()->field); });
    cert.mixed = detail::staged("mix_generators", [&] { return mix_generators(fs, cert.mixing); });
    cert.reports = detail::staged("verify_subset_ci", [&] { return verify_all_subsets(cert.mixed, ambient, excluded); });
    cert.mixing_attempts = attempt + 1;
    failing.clear();
    for (const auto& rep : cert.reports)
      if (!rep.pass()) failing.push_back(subset_label(rep.subset));
    if (failing.empty()) break;
  }
  if (!failing.empty()) throw SpecialVerificationFailure("subset reports failed for every sampled mixing matrix", failing);
  cert.mixed_regular_sequence = is_regular_sequence(cert.mixed, ambient);
  cert.discrepancy = DiscrepancyRecord::derive(static_cast<long long>(fs.size()), {"W"});
  cert.cited_steps = special_lc_steps(declared);
  cert.conclusion = conclude(declared, special_lc_requirements(), cert.mixed_regular_sequence.pass,
                             kSpecialLcStatement);
  return cert;
}

}  // namespace lcforge
