#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcforge/groebner.hpp"
#include "lcforge/hypotheses.hpp"
#include "lcforge/parse.hpp"

namespace lcforge {

enum class Mode { PotentialLc, SpecialLc, Verify };

inline std::string to_string(Mode m) {
  switch (m) {
    case Mode::PotentialLc: return "potential-lc";
    case Mode::SpecialLc: return "special-lc";
    case Mode::Verify: return "verify";
  }
  return "";
}

inline std::optional<Mode> parse_mode(std::string_view s) {
  if (s == "potential-lc") return Mode::PotentialLc;
  if (s == "special-lc") return Mode::SpecialLc;
  if (s == "verify") return Mode::Verify;
  return std::nullopt;
}

/// A parsed problem file. For special-lc the center lists the equations of W.
struct ProblemSpec {
  RingPtr ring;
  Ideal ambient;
  Ideal center;
  std::optional<Ideal> sing_ambient;
  HypothesisSet hypotheses;
  std::optional<Mode> mode;
};

inline std::vector<std::string> mode_requirements(Mode m) {
  switch (m) {
    case Mode::PotentialLc: return potential_lc_requirements();
    case Mode::SpecialLc: return special_lc_requirements();
    case Mode::Verify: return {};
  }
  return {};
}

/// Throws InvalidArgument naming every hypothesis the mode needs but the
/// problem does not declare.
inline void require_mode_hypotheses(const ProblemSpec& spec, Mode m) {
  auto missing = spec.hypotheses.missing(mode_requirements(m));
  if (missing.empty()) return;
  std::string names;
  for (const auto& n : missing) names += (names.empty() ? "" : ", ") + n;
  throw InvalidArgument("mode " + to_string(m) + " needs declarations: " + names);
}

namespace detail {

struct Located {
  std::string text;
  std::size_t line;
  std::size_t column;
};

struct Section {
  std::size_t line = 0;
  std::vector<Located> items;
};

inline bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

/// Splits `text` on ';' into trimmed, located items; blank items are dropped.
inline void split_items(std::string_view text, std::size_t line, std::size_t column, std::vector<Located>& out) {
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    auto piece = text.substr(start, end - start);
    std::size_t lead = 0;
    while (lead < piece.size() && std::isspace(static_cast<unsigned char>(piece[lead]))) ++lead;
    std::size_t trail = piece.size();
    while (trail > lead && std::isspace(static_cast<unsigned char>(piece[trail - 1]))) --trail;
    if (trail > lead) out.push_back({std::string(piece.substr(lead, trail - lead)), line, column + start + lead});
    start = end + 1;
  }
}

inline const std::vector<std::string_view>& list_sections() {
  static const std::vector<std::string_view> s{"ambient", "center", "sing_ambient", "declare"};
  return s;
}

inline Polynomial parse_generator(const Located& item, const RingPtr& ring) {
  auto p = parse_polynomial(item.text, ring, item.line, item.column);
  if (!p.homogeneity().homogeneous) {
    const auto& lead = p.terms().front();
    for (const auto& t : p.terms())
      if (t.monomial.degree() != lead.monomial.degree()) {
        auto show = [&](const Term& term) {
          return Polynomial::from_terms(ring, {term}).to_string() + " (degree " + std::to_string(term.monomial.degree()) + ")";
        };
        throw ParseError("non-homogeneous generator: terms " + show(lead) + " and " + show(t), item.line, item.column);
      }
  }
  return p;
}

inline void parse_declaration(const Located& item, HypothesisSet& h) {
  std::string_view s = item.text;
  std::size_t n = 0;
  while (n < s.size() && !std::isspace(static_cast<unsigned char>(s[n])) && s[n] != '"') ++n;
  std::string name(s.substr(0, n));
  if (!HypothesisSet::is_known(name)) throw ParseError("unknown hypothesis '" + name + "'", item.line, item.column);
  if (h.has(name)) throw ParseError("hypothesis '" + name + "' declared twice", item.line, item.column);
  auto rest = s.substr(n);
  std::size_t k = 0;
  while (k < rest.size() && std::isspace(static_cast<unsigned char>(rest[k]))) ++k;
  rest = rest.substr(k);
  std::string provenance;
  if (!rest.empty()) {
    if (rest.size() < 2 || rest.front() != '"' || rest.back() != '"' ||
        rest.substr(1, rest.size() - 2).find('"') != std::string_view::npos)
      throw ParseError("provenance must be a single quoted string", item.line, item.column + n + k);
    provenance = std::string(rest.substr(1, rest.size() - 2));
  }
  h.declare(name, provenance);
}

}  // namespace detail

/// Parses the line-oriented problem format:
///
///   # comment
///   field Q                 (or GF(p))
///   ring x y z
///   ambient:                generators separated by ';' or newlines
///   center: x; y
///   sing_ambient: ...       optional
///   declare: X-normal "provenance"; X-CM
///   mode: potential-lc      optional
///
/// `field_override` replaces the file's field line.
inline ProblemSpec parse_problem(std::string_view text, std::optional<FieldSpec> field_override = std::nullopt) {
  std::optional<detail::Located> field_line, ring_line, mode_line;
  std::map<std::string, detail::Section, std::less<>> sections;
  detail::Section* open = nullptr;

  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    for (std::size_t c = 0; c < line.size(); ++c)
      if (static_cast<unsigned char>(line[c]) >= 0x80 || (std::iscntrl(static_cast<unsigned char>(line[c])) && line[c] != '\t'))
        throw ParseError("unexpected byte", line_no, c + 1);
    if (detail::blank(line)) continue;

    std::size_t indent = 0;
    while (std::isspace(static_cast<unsigned char>(line[indent]))) ++indent;
    std::size_t word_end = indent;
    while (word_end < line.size() && (std::isalnum(static_cast<unsigned char>(line[word_end])) || line[word_end] == '_'))
      ++word_end;
    std::string word(line.substr(indent, word_end - indent));
    bool has_colon = word_end < line.size() && line[word_end] == ':';

    auto single = [&](std::optional<detail::Located>& slot, std::size_t skip) {
      if (slot) throw ParseError("duplicate '" + word + "' line", line_no, indent + 1);
      auto rest = line.substr(skip);
      std::size_t lead = 0;
      while (lead < rest.size() && std::isspace(static_cast<unsigned char>(rest[lead]))) ++lead;
      auto value = rest.substr(lead);
      while (!value.empty() && std::isspace(static_cast<unsigned char>(value.back()))) value.remove_suffix(1);
      if (value.empty()) throw ParseError("'" + word + "' needs a value", line_no, skip + 1);
      slot = detail::Located{std::string(value), line_no, skip + lead + 1};
      open = nullptr;
    };

    if (has_colon && std::find(detail::list_sections().begin(), detail::list_sections().end(), word) !=
                         detail::list_sections().end()) {
      if (sections.count(word)) throw ParseError("duplicate section '" + word + "'", line_no, indent + 1);
      open = &sections[word];
      open->line = line_no;
      detail::split_items(line.substr(word_end + 1), line_no, word_end + 2, open->items);
    } else if (has_colon && word == "mode") {
      single(mode_line, word_end + 1);
    } else if (!has_colon && (word == "field" || word == "ring") && word_end < line.size() &&
               std::isspace(static_cast<unsigned char>(line[word_end]))) {
      single(word == "field" ? field_line : ring_line, word_end);
    } else if (open) {
      detail::split_items(line, line_no, 1, open->items);
    } else {
      throw ParseError("expected a section keyword", line_no, indent + 1);
    }
  }

  if (!field_line && !field_override) throw ParseError("missing 'field' line", line_no, 1);
  if (!ring_line) throw ParseError("missing 'ring' line", line_no, 1);
  FieldSpec field;
  if (field_override) {
    field = *field_override;
  } else {
    try {
      field = FieldSpec::parse(field_line->text);
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), field_line->line, field_line->column);
    }
  }

  std::vector<std::string> vars;
  {
    std::vector<detail::Located> names;
    std::string_view rt = ring_line->text;
    std::size_t i = 0;
    while (i < rt.size()) {
      while (i < rt.size() && std::isspace(static_cast<unsigned char>(rt[i]))) ++i;
      std::size_t start = i;
      while (i < rt.size() && !std::isspace(static_cast<unsigned char>(rt[i]))) ++i;
      if (i > start) names.push_back({std::string(rt.substr(start, i - start)), ring_line->line, ring_line->column + start});
    }
    for (const auto& n : names) {
      bool ident = (std::isalpha(static_cast<unsigned char>(n.text[0])) || n.text[0] == '_') &&
                   std::all_of(n.text.begin(), n.text.end(),
                               [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
      if (!ident) throw ParseError("invalid variable name '" + n.text + "'", n.line, n.column);
      if (std::find(vars.begin(), vars.end(), n.text) != vars.end())
        throw ParseError("duplicate variable '" + n.text + "'", n.line, n.column);
      vars.push_back(n.text);
    }
    if (vars.size() > 16) throw ParseError("at most 16 variables are supported", ring_line->line, ring_line->column);
  }

  ProblemSpec spec;
  spec.ring = make_ring(vars, field);
  auto ideal_of = [&](const char* name) -> std::optional<Ideal> {
    auto it = sections.find(name);
    if (it == sections.end()) return std::nullopt;
    std::vector<Polynomial> gens;
    for (const auto& item : it->second.items) gens.push_back(detail::parse_generator(item, spec.ring));
    return Ideal(spec.ring, std::move(gens));
  };
  auto ambient = ideal_of("ambient");
  auto center = ideal_of("center");
  if (!center) throw ParseError("missing 'center:' section", line_no, 1);
  if (center->is_zero()) throw ParseError("'center:' has no generators", sections["center"].line, 1);
  spec.ambient = ambient ? *ambient : Ideal::zero(spec.ring);
  spec.center = *center;
  spec.sing_ambient = ideal_of("sing_ambient");
  if (auto it = sections.find("declare"); it != sections.end())
    for (const auto& item : it->second.items) detail::parse_declaration(item, spec.hypotheses);
  if (mode_line) {
    spec.mode = parse_mode(mode_line->text);
    if (!spec.mode) throw ParseError("unknown mode '" + mode_line->text + "'", mode_line->line, mode_line->column);
    try {
      require_mode_hypotheses(spec, *spec.mode);
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), mode_line->line, mode_line->column);
    }
  }
  return spec;
}

}  // namespace lcforge
