#include "qcalc/polys.hpp"

#include <stdexcept>

#include "qcalc/qkernel.hpp"

namespace qcalc {

Poly cauchy_pn(int n, const Rational& q) {
  Poly out(1);
  Rational qi(1);
  for (int i = 0; i < n; ++i) {
    out *= Poly::x() - Poly::y() * qi;
    qi *= q;
  }
  return out;
}

Rational cauchy_pn(int n, const Rational& x, const Rational& y, const Rational& q) {
  Rational out(1), qi(1);
  for (int i = 0; i < n; ++i) {
    out *= x - qi * y;
    qi *= q;
  }
  return out;
}

Poly rogers_szego_h(int n, const Rational& q) {
  Poly out;
  for (int k = 0; k <= n; ++k) out.add_term(Exponent{k, n - k}, qbinom(n, k, q));
  return out;
}

Rational rogers_szego_h(int n, const Rational& a, const Rational& b, const Rational& q) {
  Rational out(0);
  for (int k = 0; k <= n; ++k) out += qbinom(n, k, q) * pow(a, k) * pow(b, n - k);
  return out;
}

Poly asc_classical(AscKind kind, int n, const Rational& a, const Rational& q) {
  Poly out;
  for (int k = 0; k <= n; ++k) {
    Rational w = qbinom(n, k, q);
    if (kind == AscKind::phi) {
      w *= qpoch(a, q, k);
    } else {
      w *= qpow(q, static_cast<long>(k) * (k - n)) * qpoch(a * qpow(q, 1 - k), q, k);
    }
    out.add_term(Exponent{k, 0}, w);
  }
  return out;
}

Poly asc_gen3(AscKind kind, int n, const Rational& a, const Rational& b, const Rational& c, const Rational& q) {
  Poly out;
  for (int k = 0; k <= n; ++k) {
    Rational den = qpoch(c, q, k);
    if (is_zero(den)) throw PoleError("vanishing (c;q)_k in generalized Al-Salam-Carlitz polynomial", k);
    Rational w = qbinom(n, k, q) * qpoch(a, q, k) * qpoch(b, q, k) / den;
    if (kind == AscKind::psi) {
      w *= qpow(q, binom2(k + 1) - static_cast<long>(n) * k);
      if (k % 2 != 0) w = -w;
    }
    out.add_term(Exponent{k, n - k}, w);
  }
  return out;
}

Rational asc_new_weight(AscKind kind, int n, int k, const ParamSet& p) {
  Rational den = qpoch(p.d, p.q, k) * qpoch(p.e, p.q, k);
  if (is_zero(den)) throw PoleError("vanishing (d,e;q)_k in Al-Salam-Carlitz polynomial", k);
  Rational w = qbinom(n, k, p.q) * qpoch(p.a, p.q, k) * qpoch(p.b, p.q, k) * qpoch(p.c, p.q, k) / den;
  if (kind == AscKind::psi) {
    w *= qpow(p.q, static_cast<long>(k) * (k - n));
    if (k % 2 != 0) w = -w;
  }
  return w;
}

Poly asc_new(AscKind kind, int n, const ParamSet& params) {
  if (n < 0) throw std::invalid_argument("asc_new: negative degree");
  Poly out;
  for (int k = 0; k <= n; ++k) out.add_term(Exponent{n - k, k}, asc_new_weight(kind, n, k, params));
  return out;
}

Rational asc_new_value(AscKind kind, int n, const ParamSet& params, const Rational& x, const Rational& y) {
  Rational out(0);
  for (int k = 0; k <= n; ++k) out += asc_new_weight(kind, n, k, params) * pow(x, n - k) * pow(y, k);
  return out;
}

}  // namespace qcalc
