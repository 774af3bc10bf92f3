#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcforge/groebner.hpp"
#include "lcforge/parse.hpp"

namespace lcforge::testing {

struct LcFixture {
  std::string name;
  Ideal ambient;
  Ideal center;
};

inline Ideal ideal_of(const RingPtr& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial> polys;
  for (const auto& g : gens) polys.push_back(parse_polynomial(g, ring));
  return Ideal(ring, std::move(polys));
}

/// The four potential-lc fixtures plus a ruling on a singular quadric cone.
inline std::vector<LcFixture> lc_fixtures(FieldSpec field = FieldSpec::rationals()) {
  auto p2 = make_ring({"x", "y", "z"}, field);
  auto p3 = make_ring({"x", "y", "z", "w"}, field);
  return {
      {"point_p2", Ideal::zero(p2), ideal_of(p2, {"x", "y"})},
      {"line_p3", Ideal::zero(p3), ideal_of(p3, {"x", "y"})},
      {"twisted_cubic", Ideal::zero(p3), ideal_of(p3, {"x*z-y^2", "y*w-z^2", "x*w-y*z"})},
      {"quadric_cone", Ideal::zero(p3), ideal_of(p3, {"x^2+y^2+z^2"})},
      {"ruling_on_cone", ideal_of(p3, {"x*z-y^2"}), ideal_of(p3, {"x", "y"})},
  };
}

}  // namespace lcforge::testing
