#pragma once

#include <cstdint>
#include <limits>
#include <random>

#include "lcforge/field.hpp"
#include "lcforge/json_io.hpp"

namespace lcforge {

struct BuildConfig {
  long long sample_bound = 20;  // rational draws come from {-B, ..., B}
  int max_retries = 10;
  int max_r = 6;

  void validate() const {
    if (sample_bound < 0 || sample_bound > 1'000'000'000) throw InvalidArgument("sample bound out of range");
    if (max_retries < 0 || max_retries > 10'000) throw InvalidArgument("max retries out of range");
    if (max_r < 1 || max_r > 16) throw InvalidArgument("max r out of range");
  }
  friend bool operator==(const BuildConfig&, const BuildConfig&) = default;
};

inline json to_json(const BuildConfig& c) {
  return {{"sample_bound", c.sample_bound}, {"max_retries", c.max_retries}, {"max_r", c.max_r}};
}

inline BuildConfig config_from_json(const json& j) {
  if (!j.is_object() || j.size() != 3) throw InvalidArgument("malformed config");
  BuildConfig c{j.at("sample_bound").get<long long>(), j.at("max_retries").get<int>(), j.at("max_r").get<int>()};
  c.validate();
  return c;
}

/// Seeded source of field coefficients. Uses its own range reduction so the
/// stream is identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw InvalidArgument("empty sampling range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % n;
  }

  /// Uniform over {-bound..bound} for Q, over all of GF(p) otherwise.
  FieldElement sample(const FieldSpec& field, long long bound) {
    if (field.is_prime()) return FieldElement::from_int(static_cast<long long>(below(field.modulus)), field);
    auto span = static_cast<std::uint64_t>(2 * bound + 1);
    return FieldElement::from_int(static_cast<long long>(below(span)) - bound, field);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lcforge
