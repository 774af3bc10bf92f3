#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lcforge/certificate.hpp"
#include "lcforge/problem.hpp"

namespace lcforge::cli {

enum ExitCode : int { kOk = 0, kVerificationFailure = 1, kUsage = 2, kResourceExhausted = 3 };

struct BuildOptions {
  std::string mode;
  std::string in;
  std::string out;
  std::string cert;
  std::uint64_t seed = 0;
  BuildConfig config;
  std::string field;
  bool verify_only = false;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << bytes) || !out.flush()) throw InvalidArgument("cannot write '" + path + "'");
}

inline ProblemSpec load_problem(const std::string& path, const std::string& field) {
  std::optional<FieldSpec> override_field;
  if (!field.empty()) override_field = FieldSpec::parse(field);
  return parse_problem(read_file(path), override_field);
}

inline std::string ring_label(const RingPtr& ring) {
  std::string out = ring->field.to_string() + "[";
  for (std::size_t i = 0; i < ring->nvars(); ++i) out += (i ? "," : "") + ring->variables[i];
  return out + "]";
}

inline void verdict_row(std::ostream& out, const std::string& label, const PredicateVerdict& v) {
  out << "  " << std::left << std::setw(44) << label << (v.pass ? "pass" : "FAIL") << "\n";
}

inline void conclusion_lines(std::ostream& out, const Conclusion& c) {
  if (c.asserted) {
    out << "conclusion: " << c.statement << "\n";
    return;
  }
  out << "conclusion: withheld";
  if (!c.missing.empty()) {
    out << " (undeclared:";
    for (const auto& m : c.missing) out << " " << m;
    out << ")";
  }
  out << "\n";
}

inline void discrepancy_line(std::ostream& out, const DiscrepancyRecord& d) {
  out << "discrepancy: " << d.discrepancy << " (K coefficient " << d.canonical_coefficient << ", boundary multiplicity "
      << (d.multiplicities.empty() ? 0 : d.multiplicities.front()) << ")\n";
}

inline void summarize(std::ostream& out, const LcCertificate& c) {
  const auto& w = c.witness;
  out << "mode: potential-lc\nring: " << ring_label(c.ring()) << "\n";
  out << "r = " << w.r() << ", degree = " << w.degree << ", embedding attempts = " << c.embedding_attempts << "\n";
  for (std::size_t i = 0; i < w.r(); ++i) out << "D_" << i + 1 << ": " << w.combinations[i].g.to_string() << "\n";
  discrepancy_line(out, c.discrepancy);
  out << "verdicts:\n";
  verdict_row(out, "center outside Sing X", w.center_outside_singular_ambient);
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    auto tag = "g_" + std::to_string(i + 1) + " ";
    verdict_row(out, tag + "non-zerodivisor", w.steps[i].non_zerodivisor);
    verdict_row(out, tag + "generically reduced", w.steps[i].reduced);
    verdict_row(out, tag + "dimension drop", w.steps[i].dimension_drop);
    verdict_row(out, tag + "multiplicity one", w.steps[i].multiplicity_one);
  }
  verdict_row(out, "Z is a component", w.component);
  if (w.residual) verdict_row(out, "residual center", w.residual->verdict);
  verdict_row(out, "snc away from Sing W and Sing X", c.snc);
  conclusion_lines(out, c.conclusion);
}

inline void summarize(std::ostream& out, const SpecialLcCertificate& c) {
  out << "mode: special-lc\nring: " << ring_label(c.ring()) << "\n";
  out << "r = " << c.generators.size() << ", degree = " << c.generators.front().total_degree()
      << ", mixing attempts = " << c.mixing_attempts << "\n";
  for (std::size_t i = 0; i < c.mixed.size(); ++i) out << "D_" << i + 1 << ": " << c.mixed[i].to_string() << "\n";
  discrepancy_line(out, c.discrepancy);
  out << "verdicts:\n";
  verdict_row(out, "regular sequence", c.regular_sequence);
  verdict_row(out, "W outside Sing X", c.outside_singular_ambient);
  verdict_row(out, "mixed regular sequence", c.mixed_regular_sequence);
  for (const auto& r : c.reports) {
    auto tag = "D_" + subset_label(r.subset) + " ";
    verdict_row(out, tag + "reduced", r.reduced);
    verdict_row(out, tag + "normal", r.normal);
    verdict_row(out, tag + "smooth away", r.smooth_away);
  }
  conclusion_lines(out, c.conclusion);
}

inline Mode resolve_mode(const BuildOptions& o, const ProblemSpec& spec) {
  if (!o.mode.empty()) {
    auto m = parse_mode(o.mode);
    if (!m) throw InvalidArgument("unknown mode '" + o.mode + "'");
    return *m;
  }
  if (spec.mode) return *spec.mode;
  throw InvalidArgument("no mode given on the command line or in the problem file");
}

/// Checks the construction's computable preconditions without sampling.
inline std::vector<PredicateVerdict> preconditions(const ProblemSpec& spec, Mode mode) {
  std::vector<PredicateVerdict> out;
  auto sing = resolve_singular_ambient(spec.ambient, spec.sing_ambient);
  bool homogeneous = spec.ambient.is_homogeneous() && spec.center.is_homogeneous();
  out.push_back({"homogeneous", homogeneous, {{"ambient", spec.ambient.is_homogeneous()}}, "all generators are forms"});
  if (mode == Mode::SpecialLc) {
    auto gens = spec.center.generators();
    bool equal = true;
    for (const auto& g : gens) equal = equal && g.total_degree() == gens.front().total_degree();
    out.push_back({"equal_degrees", equal, json::object(), "W is cut out by forms of one degree"});
    out.push_back(is_regular_sequence(gens, spec.ambient));
    auto inside = variety_containment(spec.ambient.plus(gens), sing.ideal);
    out.push_back({"center_outside_singular_ambient", !inside.pass, inside.evidence, "W is not contained in Sing X"});
    return out;
  }
  bool contains = true;
  for (const auto& f : spec.ambient.generators()) contains = contains && ideal_membership(f, spec.center);
  out.push_back({"center_in_ambient", contains, json::object(), "I_X ⊆ I_Z"});
  int codim = projective_dimension(spec.ambient) - projective_dimension(spec.center);
  out.push_back({"positive_codimension", codim >= 1, {{"codimension", codim}}, "Z is a proper subvariety of X"});
  auto inside = variety_containment(spec.center, sing.ideal);
  out.push_back({"center_outside_singular_ambient", !inside.pass, inside.evidence, "Z is not contained in Sing X"});
  return out;
}

inline int verify_certificate(const std::string& cert_path, const std::string& in, const std::string& field,
                              std::ostream& out, std::ostream& err) {
  auto spec = load_problem(in, field);
  auto bytes = read_file(cert_path);
  auto cert = deserialize(bytes);
  auto v = reverify_bytes(bytes, spec);
  std::visit([&](const auto& c) { summarize(out, c); }, cert);
  out << "reverify: " << (v.pass ? "pass" : "FAIL") << "\n";
  for (const auto& m : v.evidence["mismatches"]) err << "mismatch: " << m.get<std::string>() << "\n";
  return v.pass ? kOk : kVerificationFailure;
}

inline int build(const BuildOptions& o, std::ostream& out, std::ostream& err) {
  auto spec = load_problem(o.in, o.field);
  auto mode = resolve_mode(o, spec);
  if (mode == Mode::Verify) {
    if (o.cert.empty()) throw InvalidArgument("mode verify needs --cert");
    return verify_certificate(o.cert, o.in, o.field, out, err);
  }
  require_mode_hypotheses(spec, mode);
  o.config.validate();
  if (o.verify_only) {
    bool pass = true;
    out << "mode: " << to_string(mode) << " (preconditions only)\nverdicts:\n";
    for (const auto& v : preconditions(spec, mode)) {
      verdict_row(out, v.name, v);
      pass = pass && v.pass;
    }
    return pass ? kOk : kVerificationFailure;
  }
  Certificate cert = mode == Mode::PotentialLc
                         ? Certificate(build_boundary(spec.ambient, spec.center, spec.sing_ambient, spec.hypotheses,
                                                      o.seed, o.config))
                         : Certificate(build_special_boundary(spec.ambient, spec.center.generators(), spec.sing_ambient,
                                                              spec.hypotheses, o.seed, o.config));
  std::visit([&](const auto& c) { summarize(out, c); }, cert);
  if (!o.out.empty()) {
    write_file(o.out, serialize(cert));
    out << "certificate: " << o.out << "\n";
  }
  return kOk;
}

template <class F>
int guarded(std::ostream& err, F&& f) {
  try {
    return f();
  } catch (const SpecialVerificationFailure& e) {
    err << "error: " << e.what() << "\n";
    for (const auto& s : e.failing_subsets()) err << "  failing subset " << s << "\n";
    return kVerificationFailure;
  } catch (const GenericityFailure& e) {
    err << "error: " << e.what() << "\n";
    for (const auto& f : e.failures()) err << "  " << f << "\n";
    return kVerificationFailure;
  } catch (const VerificationFailure& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const ResourceExhausted& e) {
    err << "error: " << e.what() << "\n";
    return kResourceExhausted;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const RingMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kResourceExhausted;
  }
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Exact constructions of boundaries making a subvariety a log canonical center", "lcforge"};
  app.require_subcommand(1);

  BuildOptions o;
  auto* build = app.add_subcommand("build", "construct and certify a boundary");
  build->add_option("--mode", o.mode, "potential-lc, special-lc or verify (defaults to the file's mode line)");
  build->add_option("--in", o.in, "problem file")->required();
  build->add_option("--out", o.out, "certificate output path");
  build->add_option("--cert", o.cert, "certificate to check when the mode is verify");
  build->add_option("--seed", o.seed, "64-bit seed")->capture_default_str();
  build->add_option("--sample-bound", o.config.sample_bound, "coefficients are drawn from [-B, B]")->capture_default_str();
  build->add_option("--max-retries", o.config.max_retries, "redraws before giving up")->capture_default_str();
  build->add_option("--max-r", o.config.max_r, "largest r for special-lc")->capture_default_str();
  build->add_option("--field", o.field, "override the problem's field, e.g. Q or GF(101)");
  build->add_flag("--verify-only", o.verify_only, "check preconditions without building");

  std::string cert, in, field;
  auto* verify = app.add_subcommand("verify", "re-verify a certificate against its problem");
  verify->add_option("--cert", cert, "certificate file")->required();
  verify->add_option("--in", in, "problem file")->required();
  verify->add_option("--field", field, "field override used at build time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << e.what() << "\n\n" << app.help() << std::flush;
    return kUsage;
  }
  if (build->parsed()) return detail::guarded(err, [&] { return detail::build(o, out, err); });
  return detail::guarded(err, [&] { return detail::verify_certificate(cert, in, field, out, err); });
}

}  // namespace lcforge::cli
