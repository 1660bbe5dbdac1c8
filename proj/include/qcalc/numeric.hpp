#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcalc/bigfloat.hpp"
#include "qcalc/params.hpp"

namespace qcalc {

struct QuadratureConfig {
  /// Half-width of [m - L, m + L]; 0 derives the smallest integer L with
  /// exp(-L^2) < tail_tol, plus one.
  long half_width = 0;
  int nodes_per_panel = 40;
  int panel_count = 32;
};

struct NumericConfig {
  long precision_bits = 256;
  /// Absolute size below which terms, factors and tails are neglected.
  BigFloat tail_tol = BigFloat::pow10(-40);
  /// Relative agreement required between the two sides of an identity.
  BigFloat compare_tol = BigFloat::pow10(-12);
  long max_terms = 100000;
  QuadratureConfig quad;

  /// Default config with precision doubled and tail_tol tightened by 10^-10.
  NumericConfig refined() const;
  long resolved_half_width() const;
};

/// A numerically evaluated quantity. error_budget accumulates heuristic
/// tail estimates; it is not a rigorous bound.
struct NumValue {
  ComplexBF value;
  BigFloat error_budget;
  bool converged = true;
};

/// (a;q)_inf, truncated once |a| q^i < tail_tol. The neglected log-tail
/// |a| q^i / (1 - q) is added to the budget.
NumValue poch_inf_num(const ComplexBF& a, const BigFloat& q, const NumericConfig& cfg);

/// Finite (a;q)_n.
ComplexBF poch_num(const ComplexBF& a, const BigFloat& q, long n);

/// Sums term(0), term(1), ... until three consecutive terms fall below
/// tail_tol in absolute value. The budget gets a geometric tail estimate
/// from the ratio of the last two nonzero terms.
NumValue sum_until_tail(const std::function<ComplexBF(long)>& term, const NumericConfig& cfg);

/// rPs(a; b; q; z) with the (-1)^n q^binom(n,2) factor to the power 1+s-r.
NumValue phi_rs_num(const std::vector<ComplexBF>& num, const std::vector<ComplexBF>& den, const BigFloat& q,
                    const ComplexBF& z, const NumericConfig& cfg);

/// Five-parameter phi_n^{(a,b,c;d,e)}(x, y) at numeric arguments.
ComplexBF asc_phi_num(long n, const std::vector<BigFloat>& abcde, const BigFloat& q, const ComplexBF& x,
                      const ComplexBF& y);

/// Parameters of the transformation connecting
///   sum_k phi_k(x,y) (t,s;q)_k / (q,r;q)_k
/// with (xt, s;q)_inf / (x, r;q)_inf sum_k (r/s, x;q)_k s^k / (q, xt;q)_k
///   * 4P3(a, b, c, t; d, e, xt q^k; q; y q^k).
struct TransformParams {
  Rational q, a, b, c, d, e, x, y, t, s, r;
};

struct SideBySide {
  NumValue lhs;
  NumValue rhs;
  BigFloat rel_diff;
};

/// `typeset_numerator` replaces the 4P3 numerator t by 1/t.
SideBySide verify_transformation(const TransformParams& p, const NumericConfig& cfg, bool typeset_numerator = false);

/// Parameters of the U(n+1) q-binomial sum over y in N^n.
struct UnParams {
  Rational q, b, z;
  std::vector<Rational> x;
  /// If set, z^{|y|} is replaced by phi_{|y|}^{(r,s,t;u,v)}(z, poly_y).
  std::optional<std::vector<Rational>> poly_params;
  Rational poly_y;
};

/// min_m (prod_i |x_i|) |x_m|^{-n} q^{(n-1)/2}: the |z| bound enforced
/// before summing.
BigFloat un_convergence_bound(const UnParams& p);

/// The multi-index sum by shells |y| = m, stopping after two consecutive
/// shells whose absolute sum is below tail_tol. Throws
/// std::invalid_argument when |z| violates un_convergence_bound.
NumValue u_n_lhs(const UnParams& p, const NumericConfig& cfg);

/// (bz;q)_inf/(z;q)_inf, times 4P3(r,s,t,b; u,v,bz; q; poly_y) when
/// poly_params is set.
NumValue u_n_rhs(const UnParams& p, const NumericConfig& cfg);

struct RamanujanParams {
  Rational q, a, b, m;
  /// If set, the integrand carries 3P2(r,s,t; u,v; q; y q^{1/2} e^{2ikx}).
  std::optional<std::vector<Rational>> phi_params;
  Rational y;
};

/// k = sqrt(-ln q / 2).
BigFloat ramanujan_k(const BigFloat& q);

/// Composite Gauss-Legendre over [m - L, m + L]. Evaluated at panel_count
/// and 2 * panel_count; disagreement beyond compare_tol clears converged.
NumValue ramanujan_integral(const RamanujanParams& p, const NumericConfig& cfg);

/// sqrt(pi) e^{m^2} (-aq e^{2mki}, -bq e^{-2mki};q)_inf / (abq;q)_inf,
/// times 4P3(r,s,t, sign e^{2mki}/b; u,v, -aq e^{2mki}; q; ybq) when
/// phi_params is set. sign = -1 is the form that holds; +1 is as typeset.
NumValue ramanujan_rhs(const RamanujanParams& p, const NumericConfig& cfg, int numerator_sign = -1);

/// Gauss-Legendre nodes and weights on [-1, 1] at working precision.
std::vector<std::pair<BigFloat, BigFloat>> gauss_legendre(int n);

BigFloat relative_difference(const ComplexBF& lhs, const ComplexBF& rhs);

// Suite -----------------------------------------------------------------

enum class NumStatus { pass, fail, nonconvergent };
std::string_view to_string(NumStatus s);

struct NumericReport {
  std::string id;
  std::string description;
  std::vector<std::pair<std::string, std::string>> params;
  NumStatus status = NumStatus::pass;
  ComplexBF lhs, rhs;
  BigFloat rel_diff;
  BigFloat error_budget;
  long precision_bits = 0;
  std::string message;
  double runtime_ms = 0.0;
};

struct NumericCheck {
  std::string id;
  std::string description;
  std::vector<std::pair<std::string, std::string>> params;
  std::function<SideBySide(const NumericConfig&)> run;
};

/// Documented instances: transformation (full, y = 0 reduction, r = s),
/// U(n+1) q-binomial and polynomial-weighted sums for n = 1, 2, the
/// Ramanujan integral, its weighted generalization, and the Gaussian case.
const std::vector<NumericCheck>& numeric_catalog();
/// As-typeset forms that disagree with the direct evaluation.
const std::vector<NumericCheck>& numeric_erratum_catalog();

NumericReport run_numeric(const NumericCheck& check, const NumericConfig& cfg);

}  // namespace qcalc
