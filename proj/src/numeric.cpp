#include "qcalc/numeric.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <stdexcept>

#include "qcalc/qkernel.hpp"

namespace qcalc {

NumericConfig NumericConfig::refined() const {
  NumericConfig out = *this;
  out.precision_bits = precision_bits * 2;
  out.tail_tol = tail_tol * BigFloat::pow10(-10);
  return out;
}

long NumericConfig::resolved_half_width() const {
  if (quad.half_width > 0) return quad.half_width;
  // exp(-L^2) < tail_tol  <=>  L > sqrt(-ln tail_tol)
  PrecisionScope ps(64);
  double need = std::sqrt(-log(tail_tol).to_double());
  return static_cast<long>(std::ceil(need)) + 1;
}

namespace {

BigFloat one() { return BigFloat(1); }

void require_unit_base(const BigFloat& q) {
  if (!(q > BigFloat(0) && q < one())) throw std::invalid_argument("numeric base must satisfy 0 < q < 1");
}

}  // namespace

ComplexBF poch_num(const ComplexBF& a, const BigFloat& q, long n) {
  ComplexBF out(1);
  ComplexBF aq = a;
  for (long i = 0; i < n; ++i) {
    out *= ComplexBF(1) - aq;
    aq *= q;
  }
  return out;
}

NumValue poch_inf_num(const ComplexBF& a, const BigFloat& q, const NumericConfig& cfg) {
  PrecisionScope ps(cfg.precision_bits);
  require_unit_base(q);
  NumValue out{ComplexBF(1), BigFloat(0), true};
  BigFloat mag = abs(a);
  ComplexBF aq = a;
  for (long i = 0; !mag.is_zero(); ++i) {
    if (mag < cfg.tail_tol) {
      out.error_budget = abs(out.value) * mag / (one() - q);
      break;
    }
    if (i >= cfg.max_terms) {
      out.converged = false;
      break;
    }
    out.value *= ComplexBF(1) - aq;
    aq *= q;
    mag *= q;
  }
  return out;
}

NumValue sum_until_tail(const std::function<ComplexBF(long)>& term, const NumericConfig& cfg) {
  PrecisionScope ps(cfg.precision_bits);
  NumValue out{ComplexBF(0), BigFloat(0), true};
  BigFloat last, prev;
  int small = 0;
  for (long n = 0;; ++n) {
    if (n >= cfg.max_terms) {
      out.converged = false;
      break;
    }
    ComplexBF t = term(n);
    BigFloat m = abs(t);
    out.value += t;
    if (!m.is_zero()) {
      prev = std::move(last);
      last = m;
    }
    small = m < cfg.tail_tol ? small + 1 : 0;
    if (small >= 3) break;
  }
  if (!last.is_zero()) {
    if (!prev.is_zero() && last < prev) {
      BigFloat r = last / prev;
      out.error_budget = last * r / (one() - r);
    } else {
      out.error_budget = last;
    }
  }
  return out;
}

NumValue phi_rs_num(const std::vector<ComplexBF>& num, const std::vector<ComplexBF>& den, const BigFloat& q,
                    const ComplexBF& z, const NumericConfig& cfg) {
  PrecisionScope ps(cfg.precision_bits);
  require_unit_base(q);
  const int e = 1 + static_cast<int>(den.size()) - static_cast<int>(num.size());
  ComplexBF current(1);
  BigFloat qn(1);  // q^n for the step n -> n+1
  long produced = 0;
  auto term = [&](long n) -> ComplexBF {
    // Terms are requested in order; the recurrence carries state.
    if (n != produced) throw std::logic_error("phi_rs_num terms requested out of order");
    ++produced;
    if (n == 0) return current;
    ComplexBF ratio = z;
    BigFloat qprev = qn;  // q^{n-1}
    for (const auto& a : num) ratio *= ComplexBF(1) - a * qprev;
    ComplexBF d(one() - qprev * q);
    for (const auto& b : den) d *= ComplexBF(1) - b * qprev;
    if (d.is_zero()) throw PoleError("vanishing denominator Pochhammer in rPs", static_cast<int>(n));
    ratio /= d;
    if (e != 0) {
      BigFloat f = -qprev;
      for (int i = 0; i < std::abs(e); ++i) {
        if (e > 0) ratio *= f;
        else ratio /= ComplexBF(f);
      }
    }
    current *= ratio;
    qn = qprev * q;
    return current;
  };
  return sum_until_tail(term, cfg);
}

ComplexBF asc_phi_num(long n, const std::vector<BigFloat>& abcde, const BigFloat& q, const ComplexBF& x,
                      const ComplexBF& y) {
  if (abcde.size() != 5) throw std::invalid_argument("asc_phi_num needs five parameters");
  // c_k = [n;k] (a,b,c;q)_k/(d,e;q)_k, stepped by its ratio.
  std::vector<ComplexBF> xpow(static_cast<std::size_t>(n) + 1);
  xpow[0] = ComplexBF(1);
  for (long i = 1; i <= n; ++i) xpow[i] = xpow[i - 1] * x;
  ComplexBF sum;
  BigFloat c(1);
  ComplexBF ypow(1);
  BigFloat qk(1);
  BigFloat qn = pow(q, n);
  for (long k = 0; k <= n; ++k) {
    sum += xpow[n - k] * ypow * c;
    if (k == n) break;
    // [n;k+1]/[n;k] = (1 - q^{n-k}) / (1 - q^{k+1})
    BigFloat ratio = (one() - qn / qk) / (one() - qk * q);
    ratio *= (one() - abcde[0] * qk) * (one() - abcde[1] * qk) * (one() - abcde[2] * qk);
    BigFloat den = (one() - abcde[3] * qk) * (one() - abcde[4] * qk);
    if (den.is_zero()) throw PoleError("vanishing (d,e;q)_k", static_cast<int>(k + 1));
    c *= ratio / den;
    ypow *= y;
    qk *= q;
  }
  return sum;
}

BigFloat relative_difference(const ComplexBF& lhs, const ComplexBF& rhs) {
  BigFloat diff = abs(lhs - rhs);
  BigFloat scale = abs(rhs);
  return scale.is_zero() ? diff : diff / scale;
}

namespace {

void absorb(NumValue& into, const NumValue& factor) {
  // Product rule for budgets: |uv - u'v'| <= |u| e_v + |v| e_u.
  into.error_budget = abs(into.value) * factor.error_budget + abs(factor.value) * into.error_budget;
  into.value *= factor.value;
  into.converged = into.converged && factor.converged;
}

void divide(NumValue& into, const NumValue& factor) {
  BigFloat m = abs(factor.value);
  into.value /= factor.value;
  into.error_budget = (into.error_budget + abs(into.value) * factor.error_budget) / m;
  into.converged = into.converged && factor.converged;
}

std::vector<BigFloat> to_bf(const std::vector<Rational>& v) {
  std::vector<BigFloat> out;
  out.reserve(v.size());
  for (const auto& r : v) out.emplace_back(r);
  return out;
}

}  // namespace

SideBySide verify_transformation(const TransformParams& p, const NumericConfig& cfg, bool typeset_numerator) {
  PrecisionScope ps(cfg.precision_bits);
  const BigFloat q(p.q), x(p.x), y(p.y), t(p.t), s(p.s), r(p.r);
  const std::vector<BigFloat> abcde = to_bf({p.a, p.b, p.c, p.d, p.e});
  if (!(abs(r) < one() && abs(x) < one() && abs(x * t) < one() && abs(s) < one()))
    throw std::invalid_argument("transformation requires |r|, |x|, |xt|, |s| < 1");

  SideBySide out;
  {
    BigFloat w(1);
    BigFloat qk(1);
    out.lhs = sum_until_tail(
        [&](long k) {
          ComplexBF term = asc_phi_num(k, abcde, q, x, y) * w;
          BigFloat den = (one() - qk * q) * (one() - r * qk);
          if (den.is_zero()) throw PoleError("vanishing (q,r;q)_k", static_cast<int>(k + 1));
          w *= (one() - t * qk) * (one() - s * qk) / den;
          qk *= q;
          return term;
        },
        cfg);
  }
  {
    const std::vector<ComplexBF> num{abcde[0], abcde[1], abcde[2], typeset_numerator ? one() / t : t};
    const BigFloat xt = x * t;
    BigFloat w(1);  // (r/s, x;q)_k s^k / (q, xt;q)_k
    BigFloat qk(1);
    BigFloat inner_budget;
    bool inner_ok = true;
    NumValue sum = sum_until_tail(
        [&](long) {
          NumValue inner = phi_rs_num(num, {abcde[3], abcde[4], xt * qk}, q, y * qk, cfg);
          inner_ok = inner_ok && inner.converged;
          inner_budget += abs(w) * inner.error_budget;
          ComplexBF term = inner.value * w;
          BigFloat den = (one() - qk * q) * (one() - xt * qk);
          if (den.is_zero()) throw PoleError("vanishing (q,xt;q)_k", 0);
          w *= (one() - r / s * qk) * (one() - x * qk) * s / den;
          qk *= q;
          return term;
        },
        cfg);
    sum.error_budget += inner_budget;
    sum.converged = sum.converged && inner_ok;
    absorb(sum, poch_inf_num(xt, q, cfg));
    absorb(sum, poch_inf_num(s, q, cfg));
    divide(sum, poch_inf_num(x, q, cfg));
    divide(sum, poch_inf_num(r, q, cfg));
    out.rhs = std::move(sum);
  }
  out.rel_diff = relative_difference(out.lhs.value, out.rhs.value);
  return out;
}

BigFloat un_convergence_bound(const UnParams& p) {
  const long n = static_cast<long>(p.x.size());
  BigFloat prod(1);
  for (const auto& xi : p.x) prod *= abs(BigFloat(xi));
  BigFloat best;
  bool first = true;
  for (const auto& xm : p.x) {
    BigFloat v = prod * pow(abs(BigFloat(xm)), -n);
    if (first || v < best) best = v;
    first = false;
  }
  return best * sqrt(pow(BigFloat(p.q), n - 1));
}

namespace {

// Calls f on every y in N^n with |y| = m.
void for_each_composition(int n, int m, std::vector<int>& y, int pos, const std::function<void(const std::vector<int>&)>& f) {
  if (pos == n - 1) {
    y[pos] = m;
    f(y);
    return;
  }
  for (int v = 0; v <= m; ++v) {
    y[pos] = v;
    for_each_composition(n, m - v, y, pos + 1, f);
  }
}

}  // namespace

NumValue u_n_lhs(const UnParams& p, const NumericConfig& cfg) {
  PrecisionScope ps(cfg.precision_bits);
  const int n = static_cast<int>(p.x.size());
  if (n < 1) throw std::invalid_argument("U(n+1) sum needs n >= 1");
  const BigFloat q(p.q), b(p.b), z(p.z);
  require_unit_base(q);
  if (!(abs(z) < un_convergence_bound(p)))
    throw std::invalid_argument("|z| outside the U(n+1) convergence region");
  for (std::size_t i = 0; i < p.x.size(); ++i)
    for (std::size_t j = i + 1; j < p.x.size(); ++j)
      if (p.x[i] == p.x[j]) throw std::invalid_argument("U(n+1) sum needs distinct x_i");

  const std::vector<BigFloat> xs = to_bf(p.x);
  std::vector<std::vector<BigFloat>> ratio(n, std::vector<BigFloat>(n));
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) ratio[r][s] = xs[r] / xs[s];
  // Reciprocal (q x_r/x_s;q)_j, extended as shells grow.
  std::vector<std::vector<std::vector<BigFloat>>> inv_poch(n, std::vector<std::vector<BigFloat>>(n));
  auto inv_poch_at = [&](int r, int s, int j) -> const BigFloat& {
    auto& tab = inv_poch[r][s];
    if (tab.empty()) tab.emplace_back(1);
    while (static_cast<int>(tab.size()) <= j) {
      long i = static_cast<long>(tab.size());  // factor (1 - x_r/x_s q^i)
      BigFloat f = one() - ratio[r][s] * pow(q, i);
      if (f.is_zero()) throw PoleError("vanishing (q x_r/x_s;q)_j", static_cast<int>(i));
      tab.push_back(tab.back() / f);
    }
    return tab[j];
  };

  std::optional<std::vector<BigFloat>> poly;
  if (p.poly_params) poly = to_bf(*p.poly_params);
  const BigFloat poly_y(p.poly_y);

  NumValue out{ComplexBF(0), BigFloat(0), true};
  BigFloat last, prev;
  int small = 0;
  long terms = 0;
  BigFloat bpoch(1);  // (b;q)_m
  BigFloat zpow(1);   // z^m
  std::vector<int> y(n);
  for (int m = 0;; ++m) {
    if (m > 0) {
      bpoch *= one() - b * pow(q, m - 1);
      zpow *= z;
    }
    ComplexBF weight = poly ? asc_phi_num(m, *poly, q, ComplexBF(z), ComplexBF(poly_y)) * bpoch
                            : ComplexBF(bpoch * zpow);
    if ((n - 1) % 2 != 0 && m % 2 != 0) weight = -weight;
    ComplexBF shell;
    BigFloat shell_abs;
    for_each_composition(n, m, y, 0, [&](const std::vector<int>& ys) {
      BigFloat term(1);
      long qexp = 0;
      for (int r = 0; r < n; ++r) {
        qexp += static_cast<long>(r) * ys[r] + static_cast<long>(n - 1) * binom2(ys[r]);
        for (int s = r + 1; s < n; ++s) {
          qexp -= static_cast<long>(ys[r]) * ys[s];
          term *= (one() - ratio[r][s] * pow(q, ys[r] - ys[s])) / (one() - ratio[r][s]);
        }
        for (int s = 0; s < n; ++s) term *= inv_poch_at(r, s, ys[r]);
        term *= pow(xs[r], static_cast<long>(n) * ys[r] - m);
      }
      term *= pow(q, qexp);
      ComplexBF t = weight * term;
      shell_abs += abs(t);
      shell += t;
      ++terms;
    });
    out.value += shell;
    if (!shell_abs.is_zero()) {
      prev = std::move(last);
      last = shell_abs;
    }
    small = shell_abs < cfg.tail_tol ? small + 1 : 0;
    if (small >= 2) break;
    if (terms > cfg.max_terms) {
      out.converged = false;
      break;
    }
  }
  if (!last.is_zero()) {
    if (!prev.is_zero() && last < prev) {
      BigFloat r = last / prev;
      out.error_budget = last * r / (one() - r);
    } else {
      out.error_budget = last;
    }
  }
  return out;
}

NumValue u_n_rhs(const UnParams& p, const NumericConfig& cfg) {
  PrecisionScope ps(cfg.precision_bits);
  const BigFloat q(p.q), b(p.b), z(p.z);
  NumValue out = poch_inf_num(b * z, q, cfg);
  divide(out, poch_inf_num(z, q, cfg));
  if (p.poly_params) {
    const auto rs = to_bf(*p.poly_params);
    absorb(out, phi_rs_num({rs[0], rs[1], rs[2], b}, {rs[3], rs[4], b * z}, q, BigFloat(p.poly_y), cfg));
  }
  return out;
}

BigFloat ramanujan_k(const BigFloat& q) { return sqrt(-log(q) / BigFloat(2)); }

std::vector<std::pair<BigFloat, BigFloat>> gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("Gauss-Legendre needs n >= 1");
  const long prec = working_precision();
  static thread_local std::map<std::pair<int, long>, std::vector<std::pair<BigFloat, BigFloat>>> cache;
  auto key = std::make_pair(n, prec);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  std::vector<std::pair<BigFloat, BigFloat>> nodes(n);
  const BigFloat eps = pow(BigFloat(2), -(prec - 8));
  const BigFloat pi = BigFloat::pi();
  for (int i = 0; i < (n + 1) / 2; ++i) {
    BigFloat x;
    {
      BigFloat guess = (BigFloat(4 * i + 3) / BigFloat(4 * n + 2)) * pi;
      BigFloat s, c;
      sin_cos(guess, s, c);
      x = c;
    }
    BigFloat dp;
    for (int iter = 0; iter < 200; ++iter) {
      BigFloat p0(1), p1 = x;
      for (int k = 2; k <= n; ++k) {
        BigFloat p2 = (BigFloat(2 * k - 1) * x * p1 - BigFloat(k - 1) * p0) / BigFloat(k);
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      if (n == 1) p0 = BigFloat(1);
      dp = BigFloat(n) * (x * p1 - p0) / (x * x - one());
      BigFloat dx = p1 / dp;
      x -= dx;
      if (abs(dx) < eps) break;
    }
    // Derivative at the converged node.
    {
      BigFloat p0(1), p1 = x;
      for (int k = 2; k <= n; ++k) {
        BigFloat p2 = (BigFloat(2 * k - 1) * x * p1 - BigFloat(k - 1) * p0) / BigFloat(k);
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      if (n == 1) p0 = BigFloat(1);
      dp = BigFloat(n) * (x * p1 - p0) / (x * x - one());
    }
    BigFloat w = BigFloat(2) / ((one() - x * x) * dp * dp);
    nodes[i] = {-x, w};
    nodes[n - 1 - i] = {x, w};
  }
  if (n % 2 == 1) nodes[n / 2].first = BigFloat(0);
  cache.emplace(key, nodes);
  return nodes;
}

namespace {

ComplexBF ramanujan_integrand(const BigFloat& xval, const BigFloat& m, const BigFloat& k, const BigFloat& sq,
                              const BigFloat& q, const BigFloat& a, const BigFloat& b,
                              const std::optional<std::vector<BigFloat>>& phi, const BigFloat& y,
                              const NumericConfig& cfg, BigFloat& budget, bool& ok) {
  ComplexBF e = expi(BigFloat(2) * k * xval);
  NumValue v{ComplexBF(exp(-xval * xval + BigFloat(2) * m * xval)), BigFloat(0), true};
  divide(v, poch_inf_num(e * (a * sq), q, cfg));
  divide(v, poch_inf_num(conj(e) * (b * sq), q, cfg));
  if (phi) {
    const auto& r = *phi;
    absorb(v, phi_rs_num({r[0], r[1], r[2]}, {r[3], r[4]}, q, e * (y * sq), cfg));
  }
  budget = v.error_budget;
  ok = v.converged;
  return v.value;
}

NumValue integrate_panels(const RamanujanParams& p, const NumericConfig& cfg, int panels) {
  const BigFloat q(p.q), a(p.a), b(p.b), m(p.m), y(p.y);
  const BigFloat k = ramanujan_k(q);
  const BigFloat sq = sqrt(q);
  std::optional<std::vector<BigFloat>> phi;
  if (p.phi_params) phi = to_bf(*p.phi_params);
  const BigFloat L(cfg.resolved_half_width());
  const auto nodes = gauss_legendre(cfg.quad.nodes_per_panel);
  const BigFloat h = BigFloat(2) * L / BigFloat(panels);
  const BigFloat half = h / BigFloat(2);
  NumValue out{ComplexBF(0), BigFloat(0), true};
  for (int j = 0; j < panels; ++j) {
    BigFloat mid = m - L + h * BigFloat(j) + half;
    ComplexBF panel;
    for (const auto& [xi, wi] : nodes) {
      BigFloat budget;
      bool ok = true;
      ComplexBF f = ramanujan_integrand(mid + half * xi, m, k, sq, q, a, b, phi, y, cfg, budget, ok);
      panel += f * wi;
      out.error_budget += budget * wi * half;
      out.converged = out.converged && ok;
    }
    out.value += panel * half;
  }
  return out;
}

}  // namespace

NumValue ramanujan_integral(const RamanujanParams& p, const NumericConfig& cfg) {
  PrecisionScope ps(cfg.precision_bits);
  const BigFloat q(p.q), a(p.a), b(p.b);
  require_unit_base(q);
  const BigFloat sq = sqrt(q);
  if (!(abs(a * b * q) < one() && abs(a) * sq < one() && abs(b) * sq < one()))
    throw std::invalid_argument("Ramanujan integral requires |abq|, |a|q^{1/2}, |b|q^{1/2} < 1");
  if (p.phi_params && !(abs(BigFloat(p.y)) * sq < one()))
    throw std::invalid_argument("weighted Ramanujan integral requires |y| q^{1/2} < 1");
  NumValue coarse = integrate_panels(p, cfg, cfg.quad.panel_count);
  NumValue fine = integrate_panels(p, cfg, 2 * cfg.quad.panel_count);
  BigFloat disagreement = relative_difference(coarse.value, fine.value);
  // Mass outside [m - L, m + L] is at most about e^{m^2} sqrt(pi) erfc(L),
  // scaled by the integrand's product bound; tail_tol stands in for it.
  fine.error_budget += abs(fine.value - coarse.value) + cfg.tail_tol;
  if (!(disagreement < cfg.compare_tol)) fine.converged = false;
  return fine;
}

NumValue ramanujan_rhs(const RamanujanParams& p, const NumericConfig& cfg, int numerator_sign) {
  PrecisionScope ps(cfg.precision_bits);
  const BigFloat q(p.q), a(p.a), b(p.b), m(p.m), y(p.y);
  const BigFloat k = ramanujan_k(q);
  const ComplexBF e = expi(BigFloat(2) * m * k);
  NumValue out{ComplexBF(sqrt(BigFloat::pi()) * exp(m * m)), BigFloat(0), true};
  absorb(out, poch_inf_num(-(e * (a * q)), q, cfg));
  absorb(out, poch_inf_num(-(conj(e) * (b * q)), q, cfg));
  divide(out, poch_inf_num(a * b * q, q, cfg));
  if (p.phi_params) {
    if (b.is_zero()) throw std::invalid_argument("weighted Ramanujan closed form needs b != 0");
    const auto r = to_bf(*p.phi_params);
    ComplexBF extra = e / ComplexBF(b);
    if (numerator_sign < 0) extra = -extra;
    absorb(out, phi_rs_num({r[0], r[1], r[2], extra}, {r[3], r[4], -(e * (a * q))}, q, y * b * q, cfg));
  }
  return out;
}

std::string_view to_string(NumStatus s) {
  switch (s) {
    case NumStatus::pass: return "pass";
    case NumStatus::fail: return "fail";
    case NumStatus::nonconvergent: return "nonconvergent";
  }
  return "unknown";
}

namespace {

using Named = std::vector<std::pair<std::string, std::string>>;

TransformParams transform_base() {
  auto R = [](long n, long d) { return make_rational(n, d); };
  return {R(1, 2), R(1, 5), R(1, 7), R(1, 9), R(1, 4), R(1, 6), R(1, 3), R(1, 8), R(1, 5), R(1, 7), R(1, 6)};
}

Named describe(const TransformParams& p) {
  return {{"q", to_string(p.q)}, {"a", to_string(p.a)}, {"b", to_string(p.b)}, {"c", to_string(p.c)},
          {"d", to_string(p.d)}, {"e", to_string(p.e)}, {"x", to_string(p.x)}, {"y", to_string(p.y)},
          {"t", to_string(p.t)}, {"s", to_string(p.s)}, {"r", to_string(p.r)}};
}

std::vector<Rational> five_params() {
  return {make_rational(1, 5), make_rational(1, 7), make_rational(1, 9), make_rational(1, 4), make_rational(1, 6)};
}

UnParams un_base(int n) {
  UnParams p{make_rational(1, 2), make_rational(1, 4), make_rational(1, 10), {}, std::nullopt, Rational(0)};
  if (n == 1) p.x = {make_rational(1, 2)};
  else p.x = {Rational(1), make_rational(1, 3)};
  return p;
}

Named describe(const UnParams& p) {
  Named out{{"q", to_string(p.q)}, {"b", to_string(p.b)}, {"z", to_string(p.z)}};
  for (std::size_t i = 0; i < p.x.size(); ++i) out.emplace_back("x" + std::to_string(i + 1), to_string(p.x[i]));
  if (p.poly_params) {
    const char* names[] = {"r", "s", "t", "u", "v"};
    for (int i = 0; i < 5; ++i) out.emplace_back(names[i], to_string((*p.poly_params)[i]));
    out.emplace_back("y", to_string(p.poly_y));
  }
  return out;
}

RamanujanParams ram_base() {
  return {make_rational(1, 4), make_rational(1, 5), make_rational(1, 4), make_rational(1, 2), std::nullopt, Rational(0)};
}

Named describe(const RamanujanParams& p) {
  Named out{{"q", to_string(p.q)}, {"a", to_string(p.a)}, {"b", to_string(p.b)}, {"m", to_string(p.m)}};
  if (p.phi_params) {
    const char* names[] = {"r", "s", "t", "u", "v"};
    for (int i = 0; i < 5; ++i) out.emplace_back(names[i], to_string((*p.phi_params)[i]));
    out.emplace_back("y", to_string(p.y));
  }
  return out;
}

SideBySide compare(NumValue lhs, NumValue rhs) {
  return {lhs, rhs, relative_difference(lhs.value, rhs.value)};
}

std::vector<NumericCheck> build_numeric() {
  std::vector<NumericCheck> out;

  TransformParams full = transform_base();
  out.push_back({"NUM-TRANSFORM", "phi-weighted Heine-type transformation, full parameters", describe(full),
                 [full](const NumericConfig& cfg) { return verify_transformation(full, cfg); }});
  TransformParams heine = full;
  heine.y = 0;
  out.push_back({"NUM-TRANSFORM-HEINE", "transformation at y = 0, which is Heine's transformation", describe(heine),
                 [heine](const NumericConfig& cfg) { return verify_transformation(heine, cfg); }});
  TransformParams rs = full;
  rs.r = rs.s;
  out.push_back({"NUM-TRANSFORM-RS", "transformation at r = s, where the outer sum is a single term", describe(rs),
                 [rs](const NumericConfig& cfg) { return verify_transformation(rs, cfg); }});

  for (int n : {1, 2}) {
    UnParams p = un_base(n);
    out.push_back({"NUM-UBINOM-" + std::to_string(n), "U(n+1) q-binomial sum, n = " + std::to_string(n), describe(p),
                   [p](const NumericConfig& cfg) { return compare(u_n_lhs(p, cfg), u_n_rhs(p, cfg)); }});
  }
  for (int n : {1, 2}) {
    UnParams p = un_base(n);
    p.poly_params = five_params();
    p.poly_y = make_rational(1, 8);
    out.push_back({"NUM-UPOLY-" + std::to_string(n), "U(n+1) sum weighted by phi_{|y|}(z, y), n = " + std::to_string(n),
                   describe(p), [p](const NumericConfig& cfg) { return compare(u_n_lhs(p, cfg), u_n_rhs(p, cfg)); }});
  }
  {
    UnParams p = un_base(2);
    p.poly_params = five_params();
    UnParams plain = un_base(2);
    out.push_back({"NUM-UPOLY-2-Y0", "weighted U(n+1) sum at y = 0 equals the unweighted sum", describe(p),
                   [p, plain](const NumericConfig& cfg) { return compare(u_n_lhs(p, cfg), u_n_lhs(plain, cfg)); }});
  }

  RamanujanParams ram = ram_base();
  out.push_back({"NUM-RAMANUJAN", "Askey-Roy type integral with two infinite products", describe(ram),
                 [ram](const NumericConfig& cfg) { return compare(ramanujan_integral(ram, cfg), ramanujan_rhs(ram, cfg)); }});
  RamanujanParams asc = ram;
  asc.phi_params = five_params();
  asc.y = make_rational(1, 3);
  out.push_back({"NUM-RAMANUJAN-ASC", "integral weighted by 3P2(r,s,t;u,v;q;y q^{1/2} e^{2ikx})", describe(asc),
                 [asc](const NumericConfig& cfg) { return compare(ramanujan_integral(asc, cfg), ramanujan_rhs(asc, cfg)); }});
  RamanujanParams asc0 = asc;
  asc0.y = 0;
  out.push_back({"NUM-RAMANUJAN-ASC-Y0", "weighted integral at y = 0 against the unweighted closed form", describe(asc0),
                 [asc0, ram](const NumericConfig& cfg) {
                   return compare(ramanujan_integral(asc0, cfg), ramanujan_rhs(ram, cfg));
                 }});
  RamanujanParams gauss = ram;
  gauss.a = 0;
  gauss.b = 0;
  out.push_back({"NUM-GAUSSIAN", "a = b = 0: the Gaussian integral sqrt(pi) e^{m^2}", describe(gauss),
                 [gauss](const NumericConfig& cfg) {
                   PrecisionScope ps(cfg.precision_bits);
                   BigFloat m(gauss.m);
                   NumValue exact{ComplexBF(sqrt(BigFloat::pi()) * exp(m * m)), BigFloat(0), true};
                   return compare(ramanujan_integral(gauss, cfg), exact);
                 }});
  return out;
}

std::vector<NumericCheck> build_numeric_errata() {
  std::vector<NumericCheck> out;
  TransformParams full = transform_base();
  out.push_back({"ERR-NUM-TRANSFORM", "transformation with 1/t in the 4P3 numerator", describe(full),
                 [full](const NumericConfig& cfg) { return verify_transformation(full, cfg, true); }});
  RamanujanParams asc = ram_base();
  asc.phi_params = five_params();
  asc.y = make_rational(1, 3);
  out.push_back({"ERR-NUM-RAMANUJAN-ASC", "weighted integral with +e^{2mki}/b in the 4P3 numerator", describe(asc),
                 [asc](const NumericConfig& cfg) {
                   return compare(ramanujan_integral(asc, cfg), ramanujan_rhs(asc, cfg, +1));
                 }});
  return out;
}

}  // namespace

const std::vector<NumericCheck>& numeric_catalog() {
  static const std::vector<NumericCheck> cat = build_numeric();
  return cat;
}

const std::vector<NumericCheck>& numeric_erratum_catalog() {
  static const std::vector<NumericCheck> cat = build_numeric_errata();
  return cat;
}

NumericReport run_numeric(const NumericCheck& check, const NumericConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  PrecisionScope ps(cfg.precision_bits);
  NumericReport r;
  r.id = check.id;
  r.description = check.description;
  r.params = check.params;
  r.precision_bits = cfg.precision_bits;
  try {
    SideBySide s = check.run(cfg);
    r.lhs = s.lhs.value;
    r.rhs = s.rhs.value;
    r.rel_diff = s.rel_diff;
    r.error_budget = s.lhs.error_budget + s.rhs.error_budget;
    if (!s.lhs.converged || !s.rhs.converged) r.status = NumStatus::nonconvergent;
    else r.status = s.rel_diff < cfg.compare_tol ? NumStatus::pass : NumStatus::fail;
  } catch (const PoleError& e) {
    r.status = NumStatus::fail;
    r.message = e.what();
  }
  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace qcalc
