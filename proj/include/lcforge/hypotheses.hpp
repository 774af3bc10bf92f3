#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lcforge/json_io.hpp"

namespace lcforge {

/// Hypotheses a user may assert without proof. Each carries free-text
/// provenance (a reference, "by construction", ...).
class HypothesisSet {
 public:
  static constexpr std::array<std::string_view, 9> kKnown{
      "X-normal", "X-Q-Gorenstein", "K_X-Cartier", "X-CM", "X-lc", "Z-prime", "W-lc", "W-irreducible", "not-in-SingX"};

  static bool is_known(std::string_view name) {
    return std::find(kKnown.begin(), kKnown.end(), name) != kKnown.end();
  }

  void declare(const std::string& name, std::string provenance = "") {
    if (!is_known(name)) throw InvalidArgument("unknown hypothesis '" + name + "'");
    declared_[name] = std::move(provenance);
  }
  void retract(const std::string& name) { declared_.erase(name); }
  bool has(const std::string& name) const { return declared_.count(name) != 0; }

  std::vector<std::string> missing(const std::vector<std::string>& required) const {
    std::vector<std::string> out;
    for (const auto& r : required)
      if (!has(r)) out.push_back(r);
    return out;
  }
  const std::map<std::string, std::string>& declarations() const noexcept { return declared_; }

  friend bool operator==(const HypothesisSet&, const HypothesisSet&) = default;

 private:
  std::map<std::string, std::string> declared_;
};

inline json to_json(const HypothesisSet& h) {
  json out = json::object();
  for (const auto& [name, provenance] : h.declarations()) out[name] = provenance;
  return out;
}

inline HypothesisSet hypotheses_from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("hypotheses must be an object");
  HypothesisSet h;
  for (const auto& [name, provenance] : j.items()) h.declare(name, provenance.get<std::string>());
  return h;
}

/// Hypotheses consumed by the potential lc center construction.
inline const std::vector<std::string>& potential_lc_requirements() {
  static const std::vector<std::string> r{"X-normal", "X-Q-Gorenstein", "X-CM", "Z-prime", "not-in-SingX"};
  return r;
}

/// Hypotheses consumed by the lc pair construction for special complete
/// intersections.
inline const std::vector<std::string>& special_lc_requirements() {
  static const std::vector<std::string> r{"X-normal", "X-lc",          "K_X-Cartier", "X-CM",
                                          "W-lc",     "W-irreducible", "not-in-SingX"};
  return r;
}

}  // namespace lcforge
