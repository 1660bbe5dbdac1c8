#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qcalc/rational.hpp"

namespace qcalc {

/// One verification trial's exact inputs: the base q, the five operator
/// parameters a..e, and any identity-specific extras (sigma, tau, x2, ...).
struct ParamSet {
  Rational q{1, 2};
  Rational a, b, c, d, e;
  std::map<std::string, Rational, std::less<>> extras;

  const Rational& extra(std::string_view name) const;
  void set_extra(std::string name, Rational value) { extras[std::move(name)] = std::move(value); }

  /// Checks 0 < q < 1 and that neither d nor e lies in {q^-j : 0 <= j <= order}.
  /// Throws std::invalid_argument with the violated condition.
  void validate(int order) const;

  /// Named values in a fixed order: q, a, b, c, d, e, then extras by name.
  std::vector<std::pair<std::string, Rational>> entries() const;
};

/// Deterministic parameter sampler. Numerators are drawn uniformly from
/// [-8, 8] \ {0} and denominators from [9, 32]; the ratio is halved, so
/// sampled parameters satisfy 0 < |p| <= 4/9. The base q uses a positive
/// numerator without halving, so 0 < q <= 8/9.
class ParamSampler {
 public:
  explicit ParamSampler(std::uint64_t seed) : rng_(seed) {}

  /// Seed derived from a run seed, an identity tag and a trial index, so a
  /// trial's parameters do not depend on which other identities run.
  static std::uint64_t derive_seed(std::uint64_t run_seed, std::string_view tag, std::uint64_t trial);

  Rational draw_parameter();
  Rational draw_q();
  /// Full set: q, a..e, plus one draw per requested extra name.
  ParamSet draw_set(const std::vector<std::string>& extra_names);

 private:
  long uniform(long lo, long hi);

  std::mt19937_64 rng_;
};

}  // namespace qcalc
