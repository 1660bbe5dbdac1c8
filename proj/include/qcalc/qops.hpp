#pragma once

#include "qcalc/params.hpp"
#include "qcalc/poly.hpp"

namespace qcalc {

/// D_x p = (p(x) - p(qx)) / x. Acts on x only; y is a passive symbol.
Poly dq_apply(const Poly& p, const Rational& q);

/// theta_x p = (p(x/q) - p(x)) / (x/q).
Poly theta_apply(const Poly& p, const Rational& q);

enum class DiffOp { dq, theta };

/// k-fold application of D_x or theta_x.
Poly op_power(DiffOp op, const Poly& p, int k, const Rational& q);

/// Right-hand side of the q-Leibniz rule for op^n (f g):
///   D:     sum_k q^{k(k-n)} [n;k] D^k f * D^{n-k} (g(x q^k))
///   theta: sum_k            [n;k] theta^k f * theta^{n-k} (g(x q^-k))
Poly leibniz(DiffOp op, const Poly& f, const Poly& g, int n, const Rational& q);

enum class OperatorKind { T, E };

/// Operator series
///   T(a,b,c,d,e; y D_x)     = sum_n (a,b,c;q)_n / (q,d,e;q)_n (y D_x)^n
///   E(a,b,c,d,e; y theta_x) = sum_n (-1)^n q^binom(n,2) (a,b,c;q)_n / (q,d,e;q)_n (y theta_x)^n
struct OperatorSpec {
  OperatorKind kind = OperatorKind::T;
  ParamSet params;
};

/// Weight of the n-th operator term, including the sign/q-power for E.
/// Throws PoleError if (d,e;q)_n vanishes.
Rational operator_weight(const OperatorSpec& spec, int n);

/// Applies the operator series to p. The sum stops once the operator power
/// annihilates p, so the result is exact and always finite.
Poly apply_operator(const OperatorSpec& spec, const Poly& p);

}  // namespace qcalc
