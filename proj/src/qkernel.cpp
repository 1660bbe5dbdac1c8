#include "qcalc/qkernel.hpp"

#include <stdexcept>
#include <string>

namespace qcalc {

namespace {

void require_monomial(const Poly& mono, const char* who) {
  if (!mono.is_monomial() && !mono.is_zero())
    throw std::invalid_argument(std::string(who) + ": argument must be a monomial, got " + mono.to_string());
}

}  // namespace

Rational qpow(const Rational& q, long e) { return pow(q, e); }

Rational qpoch(const Rational& a, const Rational& q, int n) {
  if (n < 0) throw std::invalid_argument("qpoch: negative length");
  Rational out(1), aqi = a;
  for (int i = 0; i < n; ++i) {
    out *= 1 - aqi;
    aqi *= q;
  }
  return out;
}

Rational qpoch(std::span<const Rational> as, const Rational& q, int n) {
  Rational out(1);
  for (const auto& a : as) out *= qpoch(a, q, n);
  return out;
}

Rational qbinom(int n, int k, const Rational& q) {
  if (k < 0 || k > n) return Rational(0);
  // Product form: prod_{i<k} (1 - q^{n-i}) / (1 - q^{i+1}).
  Rational out(1), qn = qpow(q, n), qi = q;
  for (int i = 0; i < k; ++i) {
    out *= (1 - qn) / (1 - qi);
    qn /= q;
    qi *= q;
  }
  return out;
}

std::vector<Rational> phi_rs_terms(const PhiSpec& spec, int count) {
  const int sign_exp = spec.sign_exponent();
  std::vector<Rational> terms;
  terms.reserve(static_cast<std::size_t>(count) + 1);
  terms.emplace_back(1);
  Rational qn(1);  // q^n
  for (int n = 0; n < count; ++n) {
    // term_{n+1}/term_n = [(-1) q^n]^sign_exp prod(1 - a q^n) / [prod(1 - b q^n) (1 - q^{n+1})]
    Rational ratio(1);
    for (const auto& a : spec.numerators) ratio *= 1 - a * qn;
    Rational den = 1 - qn * spec.q;
    for (const auto& b : spec.denominators) den *= 1 - b * qn;
    if (is_zero(den)) throw PoleError("vanishing denominator in basic hypergeometric term", n + 1);
    ratio /= den;
    if (sign_exp != 0) {
      Rational factor = -qn;
      ratio *= pow(factor, sign_exp);
    }
    terms.push_back(terms.back() * ratio);
    qn *= spec.q;
  }
  return terms;
}

TSeries phi_rs_series(const PhiSpec& spec, const Poly& mono, int order, int t_step) {
  require_monomial(mono, "phi_rs_series");
  if (t_step < 1) throw std::invalid_argument("phi_rs_series: t_step must be positive");
  const int count = order / t_step;
  auto terms = phi_rs_terms(spec, count);
  TSeries out(order);
  Poly power(1);
  for (int n = 0; n <= count; ++n) {
    out.set_coeff(n * t_step, power * terms[n]);
    power *= mono;
  }
  return out;
}

TSeries euler_inv_poch_series(const Poly& mono, const Rational& q, int order, int t_step) {
  return phi_rs_series(PhiSpec{{Rational(0)}, {}, q}, mono, order, t_step);
}

TSeries euler_poch_series(const Poly& mono, const Rational& q, int order, int t_step) {
  // 0P0: sign exponent 1 gives (-1)^n q^binom(n,2) / (q;q)_n.
  return phi_rs_series(PhiSpec{{}, {}, q}, mono, order, t_step);
}

TSeries finite_poch_series(const Poly& mono, const Rational& q, int k, int order) {
  require_monomial(mono, "finite_poch_series");
  TSeries out = TSeries::one(order);
  Rational qi(1);
  for (int i = 0; i < k; ++i) {
    TSeries factor = TSeries::one(order);
    factor.add_to_coeff(1, -(mono * qi));
    out *= factor;
    qi *= q;
  }
  return out;
}

TSeries inv_finite_poch_series(const Poly& mono, const Rational& q, int k, int order) {
  require_monomial(mono, "inv_finite_poch_series");
  TSeries out = TSeries::one(order);
  Rational qi(1);
  for (int i = 0; i < k; ++i) {
    TSeries geometric(order);
    Poly step = mono * qi, power(1);
    for (int n = 0; n <= order; ++n) {
      geometric.set_coeff(n, power);
      power *= step;
    }
    out *= geometric;
    qi *= q;
  }
  return out;
}

}  // namespace qcalc
