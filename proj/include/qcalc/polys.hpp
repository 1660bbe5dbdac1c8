#pragma once

#include "qcalc/params.hpp"
#include "qcalc/poly.hpp"

namespace qcalc {

/// Cauchy polynomial p_n(x,y) = (x - y)(x - qy)...(x - q^{n-1} y), symbolic.
Poly cauchy_pn(int n, const Rational& q);
/// p_n evaluated at rational x, y.
Rational cauchy_pn(int n, const Rational& x, const Rational& y, const Rational& q);

/// Homogeneous Rogers-Szego polynomial h_n(x,y|q) = sum_k [n;k] x^k y^{n-k}.
Poly rogers_szego_h(int n, const Rational& q);
Rational rogers_szego_h(int n, const Rational& a, const Rational& b, const Rational& q);

enum class AscKind { phi, psi };

/// Classical Al-Salam-Carlitz polynomials in x:
///   phi_n^{(a)}(x) = sum_k [n;k] (a;q)_k x^k
///   psi_n^{(a)}(x) = sum_k [n;k] q^{k(k-n)} (a q^{1-k};q)_k x^k
Poly asc_classical(AscKind kind, int n, const Rational& a, const Rational& q);

/// Three-parameter generalization (weights on x^k y^{n-k}):
///   phi: [n;k] (a,b;q)_k / (c;q)_k
///   psi: [n;k] (-1)^k q^{binom(k+1,2) - nk} (a,b;q)_k / (c;q)_k
/// Throws PoleError if (c;q)_k vanishes for some k <= n.
Poly asc_gen3(AscKind kind, int n, const Rational& a, const Rational& b, const Rational& c, const Rational& q);

/// Five-parameter family (weights on x^{n-k} y^k):
///   phi: [n;k] (a,b,c;q)_k / (d,e;q)_k
///   psi: [n;k] (-1)^k q^{k(k-n)} (a,b,c;q)_k / (d,e;q)_k
/// Equal to T{x^n} and E{x^n} respectively (see qops.hpp).
Poly asc_new(AscKind kind, int n, const ParamSet& params);

/// Scalar weight of x^{n-k} y^k in asc_new.
Rational asc_new_weight(AscKind kind, int n, int k, const ParamSet& params);

/// asc_new(phi) evaluated at rational x, y.
Rational asc_new_value(AscKind kind, int n, const ParamSet& params, const Rational& x, const Rational& y);

}  // namespace qcalc
