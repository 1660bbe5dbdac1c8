#include "qcalc/qops.hpp"

#include <stdexcept>

#include "qcalc/qkernel.hpp"

namespace qcalc {

Poly dq_apply(const Poly& p, const Rational& q) {
  Poly out;
  Rational qi;
  for (const auto& [e, c] : p.terms()) {
    if (e.x == 0) continue;
    qi = qpow(q, e.x);
    out.add_term(Exponent{e.x - 1, e.y}, c * (1 - qi));
  }
  return out;
}

Poly theta_apply(const Poly& p, const Rational& q) {
  // x^i -> (q^-i - 1) q x^{i-1} = q^{1-i} (1 - q^i) x^{i-1}
  Poly out;
  for (const auto& [e, c] : p.terms()) {
    if (e.x == 0) continue;
    out.add_term(Exponent{e.x - 1, e.y}, c * qpow(q, 1 - e.x) * (1 - qpow(q, e.x)));
  }
  return out;
}

Poly op_power(DiffOp op, const Poly& p, int k, const Rational& q) {
  if (k < 0) throw std::invalid_argument("op_power: negative power");
  Poly out = p;
  for (int i = 0; i < k && !out.is_zero(); ++i)
    out = op == DiffOp::dq ? dq_apply(out, q) : theta_apply(out, q);
  return out;
}

Poly leibniz(DiffOp op, const Poly& f, const Poly& g, int n, const Rational& q) {
  if (n < 0) throw std::invalid_argument("leibniz: negative order");
  Poly out;
  for (int k = 0; k <= n; ++k) {
    Poly fk = op_power(op, f, k, q);
    if (fk.is_zero()) break;
    if (op == DiffOp::dq) {
      Poly g_shift = g.shifted(qpow(q, k), Rational(1));
      Rational w = qpow(q, static_cast<long>(k) * (k - n)) * qbinom(n, k, q);
      out += fk * op_power(op, g_shift, n - k, q) * w;
    } else {
      Poly g_shift = g.shifted(qpow(q, -k), Rational(1));
      out += fk * op_power(op, g_shift, n - k, q) * qbinom(n, k, q);
    }
  }
  return out;
}

Rational operator_weight(const OperatorSpec& spec, int n) {
  const ParamSet& p = spec.params;
  Rational den = qpoch(p.q, p.q, n) * qpoch(p.d, p.q, n) * qpoch(p.e, p.q, n);
  if (is_zero(den)) throw PoleError("vanishing (q,d,e;q)_n in operator weight", n);
  Rational w = qpoch(p.a, p.q, n) * qpoch(p.b, p.q, n) * qpoch(p.c, p.q, n) / den;
  if (spec.kind == OperatorKind::E) {
    w *= qpow(p.q, binom2(n));
    if (n % 2 != 0) w = -w;
  }
  return w;
}

Poly apply_operator(const OperatorSpec& spec, const Poly& p) {
  const DiffOp op = spec.kind == OperatorKind::T ? DiffOp::dq : DiffOp::theta;
  Poly out;
  Poly power = p;  // op^n p
  Poly y_power(1);
  for (int n = 0; !power.is_zero(); ++n) {
    Rational w = operator_weight(spec, n);
    if (!is_zero(w)) out += power * y_power * w;
    power = op == DiffOp::dq ? dq_apply(power, spec.params.q) : theta_apply(power, spec.params.q);
    y_power *= Poly::y();
  }
  return out;
}

}  // namespace qcalc
