#pragma once

#include <random>

#include "qcalc/params.hpp"
#include "qcalc/poly.hpp"

namespace testing_support {

inline qcalc::Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 12);
  return qcalc::make_rational(num(rng), den(rng));
}

/// Random polynomial of total x-degree and y-degree at most deg.
inline qcalc::Poly random_poly(std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<int> e(0, deg), count(1, 5);
  qcalc::Poly p;
  for (int i = count(rng); i > 0; --i) p.add_term(qcalc::Exponent{e(rng), e(rng)}, small_rational(rng));
  return p;
}

inline qcalc::ParamSet random_params(std::uint64_t seed) {
  qcalc::ParamSampler s(seed);
  return s.draw_set({});
}

}  // namespace testing_support
