#include "qcalc/params.hpp"

#include <limits>
#include <stdexcept>

namespace qcalc {

const Rational& ParamSet::extra(std::string_view name) const {
  auto it = extras.find(name);
  if (it == extras.end()) throw std::invalid_argument("missing parameter '" + std::string(name) + "'");
  return it->second;
}

void ParamSet::validate(int order) const {
  if (!(q > 0 && q < 1)) throw std::invalid_argument("q must satisfy 0 < q < 1, got " + to_string(q));
  Rational qinv_power(1);
  const Rational qinv = Rational(1) / q;
  for (int j = 0; j <= order; ++j) {
    if (d == qinv_power) throw std::invalid_argument("d = q^-" + std::to_string(j) + " is a pole");
    if (e == qinv_power) throw std::invalid_argument("e = q^-" + std::to_string(j) + " is a pole");
    qinv_power *= qinv;
  }
}

std::vector<std::pair<std::string, Rational>> ParamSet::entries() const {
  std::vector<std::pair<std::string, Rational>> out{{"q", q}, {"a", a}, {"b", b}, {"c", c}, {"d", d}, {"e", e}};
  for (const auto& [k, v] : extras) out.emplace_back(k, v);
  return out;
}

std::uint64_t ParamSampler::derive_seed(std::uint64_t run_seed, std::string_view tag, std::uint64_t trial) {
  // FNV-1a over the tag, then a splitmix64 finalizer over the combination.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : tag) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::uint64_t z = run_seed ^ (h + 0x9e3779b97f4a7c15ULL * (trial + 1));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long ParamSampler::uniform(long lo, long hi) {
  // Explicit rejection sampling: std::uniform_int_distribution differs
  // between standard libraries, which would break report reproducibility.
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t v;
  do {
    v = rng_();
  } while (v >= limit);
  return lo + static_cast<long>(v % span);
}

Rational ParamSampler::draw_parameter() {
  long num = uniform(-8, 7);
  if (num >= 0) ++num;  // skip zero
  long den = uniform(9, 32);
  return make_rational(num, 2 * den);
}

Rational ParamSampler::draw_q() { return make_rational(uniform(1, 8), uniform(9, 32)); }

ParamSet ParamSampler::draw_set(const std::vector<std::string>& extra_names) {
  ParamSet p;
  p.q = draw_q();
  p.a = draw_parameter();
  p.b = draw_parameter();
  p.c = draw_parameter();
  p.d = draw_parameter();
  p.e = draw_parameter();
  for (const auto& name : extra_names) p.extras[name] = draw_parameter();
  return p;
}

}  // namespace qcalc
