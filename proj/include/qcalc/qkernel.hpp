#pragma once

#include <span>
#include <vector>

#include "qcalc/poly.hpp"
#include "qcalc/rational.hpp"
#include "qcalc/series.hpp"

namespace qcalc {

/// q^e for any integer e (q != 0 when e < 0).
Rational qpow(const Rational& q, long e);

/// (a;q)_n = prod_{i<n} (1 - a q^i); 1 for n = 0.
Rational qpoch(const Rational& a, const Rational& q, int n);

/// (a_1,...,a_m;q)_n.
Rational qpoch(std::span<const Rational> as, const Rational& q, int n);

/// Gaussian binomial [n;k]_q; 0 when k < 0 or k > n.
Rational qbinom(int n, int k, const Rational& q);

/// n(n-1)/2.
constexpr long binom2(long n) { return n * (n - 1) / 2; }

/// Parameters of a basic hypergeometric series rPs.
struct PhiSpec {
  std::vector<Rational> numerators;
  std::vector<Rational> denominators;
  Rational q;

  /// 1 + s - r: the power of (-1)^n q^binom(n,2) in each term.
  int sign_exponent() const {
    return 1 + static_cast<int>(denominators.size()) - static_cast<int>(numerators.size());
  }
};

/// Truncated rPs with argument z = mono * t^t_step: the t^(n*t_step)
/// coefficient is term_n * mono^n, with term_n built by the ratio
/// recurrence. A zero denominator parameter contributes (0;q)_n = 1.
/// Throws PoleError naming n if some (b_j;q)_n vanishes within the order.
TSeries phi_rs_series(const PhiSpec& spec, const Poly& mono, int order, int t_step = 1);

/// Scalar coefficients term_0..term_count of rPs (without the argument
/// power). Same pole behaviour as phi_rs_series.
std::vector<Rational> phi_rs_terms(const PhiSpec& spec, int count);

/// 1/(mono t^step; q)_inf = sum_n mono^n t^(n step) / (q;q)_n.
TSeries euler_inv_poch_series(const Poly& mono, const Rational& q, int order, int t_step = 1);

/// (mono t^step; q)_inf = sum_n (-1)^n q^binom(n,2) mono^n t^(n step) / (q;q)_n.
TSeries euler_poch_series(const Poly& mono, const Rational& q, int order, int t_step = 1);

/// (mono t; q)_k as a polynomial in t (degree k, truncated at order).
TSeries finite_poch_series(const Poly& mono, const Rational& q, int k, int order);

/// 1/(mono t; q)_k as a truncated series: product of k geometric series.
TSeries inv_finite_poch_series(const Poly& mono, const Rational& q, int k, int order);

}  // namespace qcalc
