// Acceptance runner: one PASS/FAIL line per criterion.
// usage: acceptance <path-to-lcforge-cli> <problems-dir>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "lcforge/certificate.hpp"
#include "lcforge/cli.hpp"
#include "lcforge/oracle.hpp"
#include "mutations.hpp"

using namespace lcforge;
using namespace lcforge::testing;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  std::string summary;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (notes.size() < 8) notes.push_back(what);
    }
  }
};

HypothesisSet declared(const std::vector<std::string>& names) {
  HypothesisSet h;
  for (const auto& n : names) h.declare(n, "acceptance fixture");
  return h;
}

struct Problem {
  std::string name;
  Ideal ambient;
  Ideal center;
};

Polynomial random_linear(std::mt19937_64& rng, const RingPtr& ring) {
  Polynomial out(ring);
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    auto c = static_cast<long long>(rng() % 11) - 5;
    out += Polynomial::variable(ring, i).scaled(FieldElement::from_int(c, ring->field));
  }
  return out;
}

/// Linear subspaces, twisted cubics in random coordinates, and plane conics.
std::vector<Problem> random_problems(std::uint64_t seed, const FieldSpec& field, int count) {
  std::mt19937_64 rng(seed);
  auto p2 = make_ring({"x", "y", "z"}, field);
  auto p3 = make_ring({"x", "y", "z", "w"}, field);
  std::vector<Problem> out;
  while (static_cast<int>(out.size()) < count) {
    auto kind = rng() % 3;
    const auto& ring = kind == 0 && rng() % 2 ? p2 : p3;
    const int n = static_cast<int>(ring->nvars()) - 1;
    Problem p{"", Ideal::zero(ring), Ideal::zero(ring)};
    if (kind == 0) {
      int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
      std::vector<Polynomial> ls;
      for (int i = 0; i < k; ++i) ls.push_back(random_linear(rng, ring));
      p.center = Ideal(ring, ls);
      if (p.center.is_unit() || projective_dimension(p.center) != n - k) continue;
      p.name = "linear codim " + std::to_string(k) + " in P^" + std::to_string(n);
    } else if (kind == 1) {
      std::vector<Polynomial> l;
      for (int i = 0; i < 4; ++i) l.push_back(random_linear(rng, ring));
      p.center = Ideal(ring, {l[0] * l[2] - l[1] * l[1], l[1] * l[3] - l[2] * l[2], l[0] * l[3] - l[1] * l[2]});
      if (p.center.is_unit() || projective_dimension(p.center) != 1 || !is_generically_reduced(p.center, p.ambient).pass)
        continue;
      p.name = "twisted cubic in random coordinates";
    } else {
      auto l = random_linear(rng, ring);
      auto q = random_form(rng, ring, 2, 6, 5);
      p.center = Ideal(ring, {l, q});
      if (p.center.is_unit() || projective_dimension(p.center) != 1 || !is_generically_reduced(p.center, p.ambient).pass)
        continue;
      p.name = "plane conic in P^3";
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Problem> shipped_fixtures() {
  std::vector<Problem> out;
  for (auto& f : lc_fixtures())
    if (f.name != "ruling_on_cone") out.push_back({f.name, f.ambient, f.center});
  return out;
}

LcCertificate build(const Problem& p, std::uint64_t seed) {
  return build_boundary(p.ambient, p.center, std::nullopt, declared(potential_lc_requirements()), seed, {});
}

Outcome discrepancy_exactness() {
  Outcome o;
  auto problems = shipped_fixtures();
  for (const auto& field : {FieldSpec::rationals(), FieldSpec::prime(101)})
    for (auto& p : random_problems(field.is_prime() ? 101 : 7, field, 12)) problems.push_back(std::move(p));
  double worst = 0;
  for (const auto& p : problems) {
    auto t0 = Clock::now();
    try {
      auto cert = build(p, 1);
      const auto& d = cert.discrepancy;
      long long r = projective_dimension(p.ambient) - projective_dimension(p.center);
      long long boundary = 0;
      for (std::size_t i = 0; i < d.boundary_coefficients.size(); ++i)
        boundary += d.boundary_coefficients[i] * d.multiplicities.at(i);
      o.require(d.r == r && d.canonical_coefficient == r - 1, p.name + ": canonical coefficient is not r-1");
      o.require(d.canonical_coefficient - boundary == -1 && d.discrepancy == -1, p.name + ": discrepancy != -1");
    } catch (const std::exception& e) {
      o.require(false, p.name + ": " + e.what());
    }
    worst = std::max(worst, seconds_since(t0));
  }
  o.require(worst < 10, "a problem took longer than 10 s");
  std::ostringstream s;
  s << problems.size() << " problems (4 fixtures, 24 random over Q and GF(101)), slowest " << worst << " s";
  o.summary = s.str();
  return o;
}

Outcome pipeline_soundness() {
  Outcome o;
  int runs = 0;
  for (const auto& field : {FieldSpec::rationals(), FieldSpec::prime(101)})
    for (const auto& f : lc_fixtures(field))
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto tag = f.name + " " + field.to_string() + " seed " + std::to_string(seed);
        ++runs;
        try {
          Rng rng(seed);
          auto w = embed_in_ci(f.ambient, f.center, resolve_singular_ambient(f.ambient, std::nullopt), rng, {});
          Ideal current = f.ambient;
          int dim = affine_dimension(current);
          for (const auto& k : w.combinations) {
            o.require(ideal_membership(k.g, f.center), tag + ": g not in I_Z");
            o.require(k.retries <= 10, tag + ": more than 10 retries");
            current = current.plus(k.g);
            int next = affine_dimension(current);
            o.require(next == dim - 1, tag + ": dimension did not drop by one");
            o.require(is_generically_reduced(current, f.ambient).pass, tag + ": partial ideal not reduced");
            dim = next;
          }
          o.require(is_component(f.center, current).pass, tag + ": Z is not a component");
        } catch (const std::exception& e) {
          o.require(false, tag + ": " + e.what());
        }
      }
  o.summary = std::to_string(runs) + " embeddings over 5 fixtures, Q and GF(101)";
  return o;
}

Outcome mixing_preserves_regularity() {
  Outcome o;
  auto t0 = Clock::now();
  auto r = make_ring({"x", "y", "z", "w"}, FieldSpec::rationals());
  std::vector<std::pair<std::string, std::vector<Polynomial>>> fixtures{
      {"quadric cone", {parse_polynomial("x^2+y^2+z^2", r)}},
      {"elliptic quartic", {parse_polynomial("x^2+y^2+z^2+w^2", r), parse_polynomial("x^2+2*y^2+3*z^2+4*w^2", r)}},
      {"point", {parse_polynomial("x", r), parse_polynomial("y", r), parse_polynomial("z", r)}},
      {"two quadrics through a twisted cubic", {parse_polynomial("x*z-y^2", r), parse_polynomial("y*w-z^2", r)}},
  };
  int mixes = 0;
  for (const auto& [name, fs] : fixtures) {
    o.require(is_regular_sequence(fs, Ideal::zero(r)).pass, name + ": input is not a regular sequence");
    auto before = Ideal(r, fs).canonical_basis();
    Rng rng(2024);
    for (int k = 0; k < 50; ++k, ++mixes) {
      auto xi = sample_invertible_matrix(fs.size(), rng, {}, r->field);
      auto gs = mix_generators(fs, xi);
      o.require(is_regular_sequence(gs, Ideal::zero(r)).pass, name + ": mixed sequence not regular");
      o.require(Ideal(r, gs).canonical_basis() == before, name + ": mixing changed the ideal");
    }
  }
  double t = seconds_since(t0);
  o.require(t < 30, "took longer than 30 s");
  std::ostringstream s;
  s << mixes << " mixes over " << fixtures.size() << " regular sequences in " << t << " s";
  o.summary = s.str();
  return o;
}

Outcome special_lattice() {
  Outcome o;
  auto r = make_ring({"x", "y", "z", "w"}, FieldSpec::rationals());
  std::vector<std::pair<std::string, std::vector<Polynomial>>> fixtures{
      {"quadric cone", {parse_polynomial("x^2+y^2+z^2", r)}},
      {"elliptic quartic", {parse_polynomial("x^2+y^2+z^2+w^2", r), parse_polynomial("x^2+2*y^2+3*z^2+4*w^2", r)}},
  };
  int reports = 0, deletions = 0, false_conclusions = 0;
  for (const auto& [name, fs] : fixtures) {
    try {
      auto full = build_special_boundary(Ideal::zero(r), fs, std::nullopt, declared(special_lc_requirements()), 1, {});
      o.require(full.reports.size() == (1u << fs.size()), name + ": wrong number of subset reports");
      for (const auto& rep : full.reports) {
        ++reports;
        o.require(rep.pass(), name + ": subset " + subset_label(rep.subset) + " fails");
      }
      o.require(full.conclusion.asserted, name + ": conclusion withheld with every hypothesis declared");
      for (const auto& missing : special_lc_requirements()) {
        auto h = declared(special_lc_requirements());
        h.retract(missing);
        auto cert = build_special_boundary(Ideal::zero(r), fs, std::nullopt, h, 1, {});
        ++deletions;
        if (cert.conclusion.asserted) ++false_conclusions;
      }
    } catch (const std::exception& e) {
      o.require(false, name + ": " + e.what());
    }
  }
  o.require(false_conclusions == 0, std::to_string(false_conclusions) + " false conclusions");
  o.summary = std::to_string(reports) + " subset reports, " + std::to_string(deletions) + " single deletions, " +
              std::to_string(false_conclusions) + " false conclusions";
  return o;
}

Polynomial random_monomial(std::mt19937_64& rng, const RingPtr& ring, std::uint64_t deg) {
  auto monos = Monomial::all_of_degree(ring->nvars(), deg);
  return Polynomial::monomial(ring, monos[rng() % monos.size()], FieldElement::one(ring->field));
}

Outcome oracle_equivalence() {
  Outcome o;
  auto t0 = Clock::now();
  std::mt19937_64 rng(77);
  const auto field = FieldSpec::prime(7);
  int dims = 0;
  while (dims < 50) {
    auto n = 2 + rng() % 3;
    std::vector<std::string> vars{"a", "b", "c", "d"};
    vars.resize(n);
    auto ring = make_ring(vars, field);
    std::vector<Polynomial> gens;
    auto count = 1 + rng() % 3;
    for (std::uint64_t k = 0; k < count; ++k) {
      auto deg = 1 + rng() % 3;
      auto m = random_monomial(rng, ring, deg);
      gens.push_back(rng() % 2 ? m : m - random_monomial(rng, ring, deg));
    }
    Ideal ideal(ring, gens);
    if (ideal.is_zero()) continue;
    ++dims;
    o.require(affine_dimension(ideal) == hilbert_dimension(ideal), "dimension routes disagree");
  }

  int nzd = 0;
  for (const auto& inst : nzd_corpus(2024, 150)) {
    ++nzd;
    bool engine = is_non_zerodivisor(inst.g, inst.ideal).pass;
    o.require(engine == !brute_force_zerodivisor(inst.g, inst.ideal, 6), "zerodivisor oracle disagrees on " + inst.g.to_string());
  }

  int radical = 0;
  auto fixtures = zero_dimensional_fixtures();
  const auto& ring = fixtures.front().ring();
  std::vector<Polynomial> probes;
  for (std::uint64_t d : {1u, 2u})
    for (const auto& m : Monomial::all_of_degree(ring->nvars(), d))
      probes.push_back(Polynomial::monomial(ring, m, FieldElement::one(ring->field)));
  for (const char* f : {"x-z", "y-2*z", "x+y-z", "x*(x-z)", "y*(y+z)", "x-y", "(x-z)*y"})
    probes.push_back(parse_polynomial(f, ring));
  for (const auto& ideal : fixtures) {
    auto pts = brute_force_points(ideal);
    for (const auto& f : probes) {
      bool vanishes = true;
      for (const auto& pt : pts.points) {
        std::vector<FieldElement> v;
        for (auto c : pt) v.push_back(FieldElement::from_int(static_cast<long long>(c), ring->field));
        vanishes = vanishes && f.evaluate(v).is_zero();
      }
      ++radical;
      o.require(radical_membership(f, ideal) == vanishes, "radical membership disagrees on " + f.to_string());
    }
  }
  double t = seconds_since(t0);
  o.require(t < 60, "took longer than 60 s");
  std::ostringstream s;
  s << dims << " dimension pairs, " << nzd << " zerodivisor cases, " << radical << " radical probes in " << t << " s";
  o.summary = s.str();
  return o;
}

Outcome certificate_integrity() {
  Outcome o;
  std::vector<std::pair<ProblemSpec, Certificate>> built;
  for (const auto& p : shipped_fixtures()) {
    ProblemSpec spec{p.ambient.ring(), p.ambient, p.center, std::nullopt, declared(potential_lc_requirements()),
                     Mode::PotentialLc};
    for (std::uint64_t seed : {1u, 2u}) built.emplace_back(spec, build(p, seed));
  }
  auto r = make_ring({"x", "y", "z", "w"}, FieldSpec::rationals());
  for (const char* w : {"x^2+y^2+z^2", "x^2+y^2+z^2+w^2;x^2+2*y^2+3*z^2+4*w^2"}) {
    std::vector<Polynomial> fs;
    std::string text = w;
    for (std::size_t start = 0; start <= text.size();) {
      auto end = std::min(text.find(';', start), text.size());
      fs.push_back(parse_polynomial(text.substr(start, end - start), r));
      start = end + 1;
    }
    ProblemSpec spec{r, Ideal::zero(r), Ideal(r, fs), std::nullopt, declared(special_lc_requirements()), Mode::SpecialLc};
    built.emplace_back(spec, build_special_boundary(spec.ambient, fs, std::nullopt, spec.hypotheses, 3, {}));
  }
  int mutant_count = 0, genuine = 0, accepted = 0;
  for (std::size_t i = 0; i < built.size(); ++i) {
    const auto& [spec, cert] = built[i];
    auto bytes = serialize(cert);
    o.require(serialize(deserialize(bytes)) == bytes, "round trip is not byte-identical");
    o.require(reverify_bytes(bytes, spec).pass, "reverify rejected an untouched certificate");
    if (i % 2) continue;
    for (const auto& m : mutants(bytes)) {
      ++mutant_count;
      if (genuine_config_edit(m, spec)) {
        ++genuine;
        o.require(reverify_bytes(m.bytes, spec).pass, "genuine certificate at " + m.path + " rejected");
        continue;
      }
      if (reverify_bytes(m.bytes, spec).pass) {
        ++accepted;
        o.require(false, "mutant at " + m.path + " accepted");
      }
    }
  }
  o.require(mutant_count >= 200, "fewer than 200 mutants");
  o.summary = std::to_string(built.size()) + " certificates round-tripped and reverified, " + std::to_string(mutant_count) +
              " mutants, " + std::to_string(genuine) +
              " of them genuine builds under the edited config, " + std::to_string(accepted) + " corrupt mutants accepted";
  return o;
}

Outcome determinism(const std::string& cli, const fs::path& problems) {
  Outcome o;
  auto dir = fs::temp_directory_path() / ("lcforge_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  int pairs = 0;
  for (const auto& entry : fs::directory_iterator(problems)) {
    if (entry.path().extension() != ".lcp") continue;
    for (const char* seed : {"0", "18446744073709551615"}) {
      std::string bytes[2];
      for (int run = 0; run < 2; ++run) {
        auto out = dir / (entry.path().stem().string() + "_" + std::to_string(run) + ".json");
        std::string cmd = "\"" + cli + "\" build --in \"" + entry.path().string() + "\" --seed " + seed + " --out \"" +
                          out.string() + "\" > /dev/null 2>&1";
        int code = std::system(cmd.c_str());
        o.require(code == 0, entry.path().filename().string() + ": build exited with " + std::to_string(code));
        bytes[run] = cli::detail::read_file(out.string());
      }
      ++pairs;
      o.require(!bytes[0].empty() && bytes[0] == bytes[1], entry.path().filename().string() + ": bytes differ");
    }
  }
  fs::remove_all(dir);
  o.require(pairs > 0, "no problem files found");
  o.summary = std::to_string(pairs) + " (problem, seed) pairs built twice in separate processes";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <lcforge-cli> <problems-dir>\n";
    return 2;
  }
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"discrepancy exactness", discrepancy_exactness},
      {"embedding pipeline soundness", pipeline_soundness},
      {"mixing preserves regular sequences", mixing_preserves_regularity},
      {"special lc subset lattice", special_lattice},
      {"engine and oracle agreement", oracle_equivalence},
      {"certificate integrity", certificate_integrity},
      {"cross-process determinism", [&] { return determinism(argv[1], argv[2]); }},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("uncaught: ") + e.what());
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " (" << o.summary
              << ")\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
  }
  return all ? 0 : 1;
}
