#include "qcalc/identities.hpp"

#include <chrono>
#include <map>

#include "qcalc/qkernel.hpp"

namespace qcalc {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::pole: return "pole";
  }
  return "unknown";
}

namespace {

Poly xm(const Rational& c) { return Poly::monomial(c, 1, 0); }
Poly ym(const Rational& c) { return Poly::monomial(c, 0, 1); }

/// (-1)^n q^binom(n,2)
Rational euler_sign(const Rational& q, int n) {
  Rational w = qpow(q, binom2(n));
  return n % 2 == 0 ? w : Rational(-w);
}

/// (a,b,c;q)_k / (q,d,e;q)_k
Rational asc_weight(const ParamSet& p, int k) {
  Rational den = qpoch(p.q, p.q, k) * qpoch(p.d, p.q, k) * qpoch(p.e, p.q, k);
  if (is_zero(den)) throw PoleError("vanishing (q,d,e;q)_k", k);
  return qpoch(p.a, p.q, k) * qpoch(p.b, p.q, k) * qpoch(p.c, p.q, k) / den;
}

Poly swap_xy(const Poly& p) {
  Poly out;
  for (const auto& [e, c] : p.terms()) out.add_term(Exponent{e.y, e.x}, c);
  return out;
}

ParamSet second_family(const ParamSet& p) {
  ParamSet out;
  out.q = p.q;
  out.a = p.extra("a2");
  out.b = p.extra("b2");
  out.c = p.extra("c2");
  out.d = p.extra("d2");
  out.e = p.extra("e2");
  return out;
}

// Three-parameter family generating functions, parametrized explicitly so
// the reduction checks can feed (a, b, d) for (a, b, c).
TSeries gen3_phi_series(const Rational& a, const Rational& b, const Rational& c, const Rational& q, int order) {
  return gf::weighted(order, q, [&](int n) { return asc_gen3(AscKind::phi, n, a, b, c, q); },
                      [](int) { return Rational(1); });
}

TSeries gen3_phi_closed_form(const Rational& a, const Rational& b, const Rational& c, const Rational& q, int order) {
  return euler_inv_poch_series(Poly::y(), q, order) * phi_rs_series(PhiSpec{{a, b}, {c}, q}, Poly::x(), order);
}

TSeries gen3_psi_series(const Rational& a, const Rational& b, const Rational& c, const Rational& q, int order) {
  return gf::weighted(order, q, [&](int n) { return asc_gen3(AscKind::psi, n, a, b, c, q); },
                      [&](int n) { return euler_sign(q, n); });
}

TSeries gen3_psi_closed_form(const Rational& a, const Rational& b, const Rational& c, const Rational& q, int order) {
  return euler_poch_series(Poly::y(), q, order) * phi_rs_series(PhiSpec{{a, b}, {c}, q}, Poly::x(), order);
}

// Cauchy-polynomial generating function with (s, t) = (sigma u, tau u):
//   sum_n phi_n p_n(t, s) / (q;q)_n
//     = (xs;q)_inf / (xt;q)_inf * 4P3(a,b,c,s/t; d,e,xs; q; yt)
// in the formal variable u. (s/t;q)_k t^k = p_k(t,s), so the 4P3 term is
// W_k y^k p_k(tau, sigma) u^k / (x sigma u;q)_k and the prefactor
// (x sigma u;q)_inf / (x sigma u;q)_k = (x sigma q^k u;q)_inf.
TSeries cauchy_gf_series(const ParamSet& p, int order, bool as_typeset) {
  const Rational& sigma = p.extra("sigma");
  const Rational& tau = p.extra("tau");
  return gf::weighted(order, p.q, [&](int n) { return asc_new(AscKind::phi, n, p); },
                      [&](int n) { return as_typeset ? cauchy_pn(n, sigma, tau, p.q) : cauchy_pn(n, tau, sigma, p.q); });
}

TSeries cauchy_gf_closed_form(const ParamSet& p, int order) {
  const Rational& sigma = p.extra("sigma");
  const Rational& tau = p.extra("tau");
  TSeries acc(order);
  Rational qk(1);
  for (int k = 0; k <= order; ++k) {
    Rational w = asc_weight(p, k) * cauchy_pn(k, tau, sigma, p.q);
    if (!is_zero(w))
      acc += TSeries::term(order, k, Poly::monomial(w, 0, k)) * euler_poch_series(xm(sigma * qk), p.q, order);
    qk *= p.q;
  }
  return euler_inv_poch_series(xm(tau), p.q, order) * acc;
}

// sum_n phi_n (-1)^n q^binom(n,2) t^n/(q;q)_n = (xt;q)_inf 3P3(a,b,c; d,e,xt; q; yt)
TSeries alternating_gf_series(const ParamSet& p, int order) {
  return gf::weighted(order, p.q, [&](int n) { return asc_new(AscKind::phi, n, p); },
                      [&](int n) { return euler_sign(p.q, n); });
}

TSeries alternating_gf_closed_form(const ParamSet& p, int order) {
  TSeries acc(order);
  Rational qk(1);
  for (int k = 0; k <= order; ++k) {
    Rational w = euler_sign(p.q, k) * asc_weight(p, k);
    acc += TSeries::term(order, k, Poly::monomial(w, 0, k)) * euler_poch_series(xm(qk), p.q, order);
    qk *= p.q;
  }
  return acc;
}

// sum_n phi_{n+k} t^n/(q;q)_n
//   = x^k/(xt;q)_inf sum_n W_n (yt)^n sum_j [n;j] (-1)^j q^{kj - binom(j,2)} (q^-k, xt;q)_j / (xt)^j
// (q^-k;q)_j vanishes for j > k, and (xt;q)_j/(xt)^j is a Laurent polynomial
// in xt whose negative powers are absorbed by x^k (yt)^n since j <= min(n,k).
TSeries shifted_gf_series(const ParamSet& p, int order, int k) {
  return gf::weighted(order, p.q, [&](int n) { return asc_new(AscKind::phi, n + k, p); },
                      [](int) { return Rational(1); });
}

TSeries shifted_gf_closed_form(const ParamSet& p, int order, int k, bool as_typeset) {
  const Rational& q = p.q;
  // Coefficients of (w;q)_j as a polynomial in w, for j <= k.
  std::vector<std::vector<Rational>> poch_coeffs{{Rational(1)}};
  for (int j = 1; j <= k; ++j) {
    const auto& prev = poch_coeffs.back();
    std::vector<Rational> next(prev.size() + 1);
    Rational qj = qpow(q, j - 1);
    for (std::size_t m = 0; m < prev.size(); ++m) {
      next[m] += prev[m];
      next[m + 1] -= prev[m] * qj;
    }
    poch_coeffs.push_back(std::move(next));
  }
  const Rational qmk = qpow(q, -k);
  TSeries inner(order);
  for (int n = 0; n <= order + k; ++n) {
    const Rational wn = asc_weight(p, n);
    for (int j = 0; j <= std::min(n, k); ++j) {
      long exponent = as_typeset ? static_cast<long>(n) * j - binom2(j) : static_cast<long>(k) * j - binom2(j);
      Rational base = wn * qbinom(n, j, q) * qpow(q, exponent) * qpoch(qmk, q, j);
      if (j % 2 != 0) base = -base;
      if (is_zero(base)) continue;
      for (std::size_t m = 0; m < poch_coeffs[j].size(); ++m) {
        int power = n + static_cast<int>(m) - j;
        if (power > order) continue;
        inner.add_to_coeff(power, Poly::monomial(base * poch_coeffs[j][m], k + static_cast<int>(m) - j, n));
      }
    }
  }
  return euler_inv_poch_series(Poly::x(), q, order) * inner;
}

// Product formula: x1 = x, y1 = y symbolic, (x2, y2) rational, second
// parameter family in extras a2..e2.
TSeries product_gf_series(const ParamSet& p, int order) {
  ParamSet p2 = second_family(p);
  const Rational& x2 = p.extra("x2");
  const Rational& y2 = p.extra("y2");
  return gf::weighted(order, p.q, [&](int n) { return asc_new(AscKind::phi, n, p); },
                      [&](int n) { return asc_new_value(AscKind::phi, n, p2, x2, y2); });
}

TSeries product_gf_closed_form(const ParamSet& p, int order) {
  const Rational& q = p.q;
  ParamSet p2 = second_family(p);
  const Rational& x2 = p.extra("x2");
  const Rational& y2 = p.extra("y2");
  TSeries acc(order);
  for (int j = 0; j <= order; ++j) {
    // sum over n >= j of W2_n y2^n (q^{n-j+1};q)_j x^{n-j} t^n
    TSeries outer(order);
    for (int n = j; n <= order; ++n) {
      Rational w = asc_weight(p2, n) * pow(y2, n) * qpoch(qpow(q, n - j + 1), q, j);
      outer.add_to_coeff(n, Poly::monomial(w, n - j, 0));
    }
    if (outer.is_zero()) continue;
    Rational qj = qpow(q, j);
    PhiSpec shifted{{p.a * qj, p.b * qj, p.c * qj}, {p.d * qj, p.e * qj}, q};
    TSeries piece = outer * Poly::monomial(asc_weight(p, j), 0, j);
    piece *= finite_poch_series(xm(x2), q, j, order);
    piece *= phi_rs_series(shifted, ym(x2), order);
    acc += piece;
  }
  return euler_inv_poch_series(xm(x2), q, order) * acc;
}

// Heine transformation with x -> x u, s -> sigma u, r -> rho u:
//   2P1(T, s; r; q; x) = (s, xT;q)_inf / (r, x;q)_inf 2P1(r/s, x; xT; q; s)
TSeries heine_series(const ParamSet& p, int order) {
  const Rational& q = p.q;
  const Poly sigma(p.extra("sigma"));
  const Poly rho(p.extra("rho"));
  const Rational& tt = p.extra("heine_t");
  TSeries acc(order);
  for (int n = 0; n <= order; ++n) {
    TSeries t = TSeries::term(order, n, Poly::monomial(qpoch(tt, q, n) / qpoch(q, q, n), n, 0));
    t *= finite_poch_series(sigma, q, n, order);
    t *= inv_finite_poch_series(rho, q, n, order);
    acc += t;
  }
  return acc;
}

TSeries heine_closed_form(const ParamSet& p, int order) {
  const Rational& q = p.q;
  const Rational& s = p.extra("sigma");
  const Rational& r = p.extra("rho");
  const Rational& tt = p.extra("heine_t");
  TSeries acc(order);
  Rational sk(1);
  for (int k = 0; k <= order; ++k) {
    Rational w = qpoch(r / s, q, k) * sk / qpoch(q, q, k);
    TSeries t = TSeries::term(order, k, Poly(w));
    t *= finite_poch_series(Poly::x(), q, k, order);
    t *= inv_finite_poch_series(xm(tt), q, k, order);
    acc += t;
    sk *= s;
  }
  TSeries pref = euler_poch_series(Poly(s), q, order) * euler_poch_series(xm(tt), q, order);
  pref *= euler_inv_poch_series(Poly(r), q, order);
  pref *= euler_inv_poch_series(Poly::x(), q, order);
  return pref * acc;
}

std::optional<std::string> nonzero_extra(const ParamSet& p, const char* name) {
  if (is_zero(p.extra(name))) return std::string(name) + " must be nonzero";
  return std::nullopt;
}

std::vector<IdentityCheck> build_catalog() {
  std::vector<IdentityCheck> cat;

  cat.push_back({"ID-1", "three-parameter phi generating function",
                 {},
                 {{"gf", [](const ParamSet& p, int N) { return gen3_phi_series(p.a, p.b, p.c, p.q, N); },
                   [](const ParamSet& p, int N) { return gen3_phi_closed_form(p.a, p.b, p.c, p.q, N); }}},
                 {}, {},
                 "sum phi_n^{(a,b,c)}(x,y) t^n/(q;q)_n = 1/(yt;q)_inf 2P1(a,b;c;q;xt)"});

  cat.push_back({"ID-2", "three-parameter psi generating function",
                 {},
                 {{"gf", [](const ParamSet& p, int N) { return gen3_psi_series(p.a, p.b, p.c, p.q, N); },
                   [](const ParamSet& p, int N) { return gen3_psi_closed_form(p.a, p.b, p.c, p.q, N); }}},
                 {}, {},
                 "sum psi_n^{(a,b,c)}(x,y) (-1)^n q^binom(n,2) t^n/(q;q)_n = (yt;q)_inf 2P1(a,b;c;q;xt)"});

  cat.push_back({"ID-3", "five-parameter phi generating function",
                 {},
                 {{"gf", gf::asc_phi_series, gf::asc_phi_closed_form}},
                 {}, {},
                 "sum phi_n t^n/(q;q)_n = 1/(xt;q)_inf 3P2(a,b,c;d,e;q;yt)"});

  cat.push_back({"ID-4", "five-parameter psi generating function",
                 {},
                 {{"gf", gf::asc_psi_series, gf::asc_psi_closed_form}},
                 {}, {},
                 "sum psi_n (-1)^n q^binom(n,2) t^n/(q;q)_n = (xt;q)_inf 3P3(a,b,c;0,d,e;q;-yt); "
                 "the typeset form without the (-1)^n q^binom(n,2) weight is ERR-ID-4"});

  cat.push_back({"ID-5", "Cauchy-polynomial generating function",
                 {"sigma", "tau"},
                 {{"gf", [](const ParamSet& p, int N) { return cauchy_gf_series(p, N, false); }, cauchy_gf_closed_form}},
                 {}, {},
                 "sum phi_n p_n(t,s)/(q;q)_n = (xs;q)_inf/(xt;q)_inf 4P3(a,b,c,s/t;d,e,xs;q;yt) "
                 "with (s,t) = (sigma u, tau u); the typeset p_n(s,t) is ERR-ID-5"});

  cat.push_back({"ID-6", "alternating phi generating function",
                 {},
                 {{"gf", alternating_gf_series, alternating_gf_closed_form}},
                 {}, {},
                 "sum phi_n (-1)^n q^binom(n,2) t^n/(q;q)_n = (xt;q)_inf 3P3(a,b,c;d,e,xt;q;yt)"});

  for (int k = 0; k <= 3; ++k) {
    cat.push_back({"ID-7.k" + std::to_string(k), "index-shifted phi generating function, k = " + std::to_string(k),
                   {},
                   {{"gf", [k](const ParamSet& p, int N) { return shifted_gf_series(p, N, k); },
                     [k](const ParamSet& p, int N) { return shifted_gf_closed_form(p, N, k, false); }}},
                   {}, {},
                   "inner sum read with [n;j] and q^{kj - binom(j,2)}; the typeset q^{nj - binom(j,2)} is ERR-ID-7"});
  }

  cat.push_back({"ID-8", "product of two five-parameter phi families",
                 {"a2", "b2", "c2", "d2", "e2", "x2", "y2"},
                 {{"gf", product_gf_series, product_gf_closed_form}},
                 {}, {},
                 "(x1, y1) = (x, y) symbolic, (x2, y2) rational; j-sum terminates via (q^{n-j+1};q)_j"});

  cat.push_back({"ID-9", "Cauchy identity",
                 {},
                 {{"gf",
                   [](const ParamSet& p, int N) {
                     return gf::weighted(N, p.q, [&](int n) { return cauchy_pn(n, p.q); }, [](int) { return Rational(1); });
                   },
                   [](const ParamSet& p, int N) {
                     return euler_poch_series(Poly::y(), p.q, N) * euler_inv_poch_series(Poly::x(), p.q, N);
                   }}},
                 {}, {},
                 "sum p_n(x,y) t^n/(q;q)_n = (yt;q)_inf/(xt;q)_inf"});

  cat.push_back({"ID-10", "Cauchy polynomial generating function with (lambda;q)_n",
                 {"xs", "ys", "lambda"},
                 {{"gf",
                   [](const ParamSet& p, int N) {
                     const Rational &xs = p.extra("xs"), &ys = p.extra("ys"), &lam = p.extra("lambda");
                     return gf::weighted(N, p.q, [&](int n) { return Poly(cauchy_pn(n, xs, ys, p.q)); },
                                         [&](int n) { return qpoch(lam, p.q, n); });
                   },
                   [](const ParamSet& p, int N) {
                     const Rational &xs = p.extra("xs"), &ys = p.extra("ys"), &lam = p.extra("lambda");
                     return phi_rs_series(PhiSpec{{lam, ys / xs}, {Rational(0)}, p.q}, Poly(xs), N);
                   }}},
                 {},
                 [](const ParamSet& p, int) { return nonzero_extra(p, "xs"); },
                 "sum p_n(x,y) (lambda;q)_n t^n/(q;q)_n = 2P1(lambda, y/x; 0; q; xt) at rational x, y"});

  cat.push_back({"ID-11", "Rogers-Szego Mehler formula",
                 {},
                 {{"gf",
                   [](const ParamSet& p, int N) {
                     return gf::weighted(N, p.q, [&](int n) { return rogers_szego_h(n, p.q); },
                                         [&](int n) { return rogers_szego_h(n, p.c, p.d, p.q); });
                   },
                   [](const ParamSet& p, int N) {
                     TSeries s = euler_poch_series(Poly::monomial(p.c * p.d, 1, 1), p.q, N, 2);
                     s *= euler_inv_poch_series(xm(p.c), p.q, N);
                     s *= euler_inv_poch_series(xm(p.d), p.q, N);
                     s *= euler_inv_poch_series(ym(p.c), p.q, N);
                     s *= euler_inv_poch_series(ym(p.d), p.q, N);
                     return s;
                   }}},
                 {}, {},
                 "sum h_n(x,y) h_n(c,d) t^n/(q;q)_n = (xycd t^2;q)_inf / (xct, xdt, yct, ydt;q)_inf"});

  cat.push_back({"ID-12", "Heine transformation",
                 {"sigma", "rho", "heine_t"},
                 {{"gf", heine_series, heine_closed_form}},
                 {},
                 [](const ParamSet& p, int) { return nonzero_extra(p, "sigma"); },
                 "x, s, r all scaled by the formal variable u; r must scale too or (r;q)_inf is not finite"});

  cat.push_back({"ID-13.phi", "c = e = 0 collapse of the five-parameter phi family to the three-parameter one",
                 {},
                 {{"series", gf::asc_phi_series,
                   [](const ParamSet& p, int N) { return gen3_phi_series(p.a, p.b, p.d, p.q, N).map(swap_xy); }},
                  {"closed form", gf::asc_phi_closed_form,
                   [](const ParamSet& p, int N) { return gen3_phi_closed_form(p.a, p.b, p.d, p.q, N).map(swap_xy); }}},
                 [](ParamSet& p) { p.c = 0; p.e = 0; },
                 {},
                 "correspondence: x <-> y, c -> d"});

  cat.push_back({"ID-13.psi", "c = e = 0 collapse of the five-parameter psi family to the three-parameter one",
                 {},
                 {{"series", gf::asc_psi_series,
                   [](const ParamSet& p, int N) { return gen3_psi_series(p.a, p.b, p.d, p.q, N).map(swap_xy); }},
                  {"closed form", gf::asc_psi_closed_form,
                   [](const ParamSet& p, int N) { return gen3_psi_closed_form(p.a, p.b, p.d, p.q, N).map(swap_xy); }}},
                 [](ParamSet& p) { p.c = 0; p.e = 0; },
                 {},
                 "correspondence: x <-> y, c -> d. Fails from t^2 on: the five-parameter psi weight "
                 "q^{k(k-n)} exceeds the three-parameter q^{binom(k+1,2)-nk} by q^{binom(k,2)}, which no "
                 "finite parameter choice removes"});

  return cat;
}

std::vector<IdentityCheck> build_reductions() {
  std::vector<IdentityCheck> red;
  red.push_back({"RED-K0", "index-shifted closed form at k = 0 equals the five-parameter phi closed form",
                 {},
                 {{"closed form", [](const ParamSet& p, int N) { return shifted_gf_closed_form(p, N, 0, false); },
                   gf::asc_phi_closed_form}},
                 {}, {}, ""});
  red.push_back({"RED-S0", "Cauchy-polynomial generating function at s = 0 equals the phi generating function",
                 {"sigma", "tau"},
                 {{"series", [](const ParamSet& p, int N) { return cauchy_gf_series(p, N, false); },
                   [](const ParamSet& p, int N) { return gf::asc_phi_series(p, N).rescaled(p.extra("tau")); }},
                  {"closed form", cauchy_gf_closed_form,
                   [](const ParamSet& p, int N) { return gf::asc_phi_closed_form(p, N).rescaled(p.extra("tau")); }}},
                 [](ParamSet& p) { p.set_extra("sigma", 0); },
                 {},
                 "t = tau u on the right"});
  red.push_back({"RED-T0", "Cauchy-polynomial generating function at t = 0 equals the alternating generating function",
                 {"sigma", "tau"},
                 {{"series", [](const ParamSet& p, int N) { return cauchy_gf_series(p, N, false); },
                   [](const ParamSet& p, int N) { return alternating_gf_series(p, N).rescaled(p.extra("sigma")); }},
                  {"closed form", cauchy_gf_closed_form,
                   [](const ParamSet& p, int N) { return alternating_gf_closed_form(p, N).rescaled(p.extra("sigma")); }}},
                 [](ParamSet& p) { p.set_extra("tau", 0); },
                 {},
                 "t = sigma u on the right"});
  return red;
}

std::vector<IdentityCheck> build_errata() {
  std::vector<IdentityCheck> err;
  err.push_back({"ERR-ID-4", "psi generating function without the (-1)^n q^binom(n,2) weight",
                 {},
                 {{"gf",
                   [](const ParamSet& p, int N) {
                     return gf::weighted(N, p.q, [&](int n) { return asc_new(AscKind::psi, n, p); },
                                         [](int) { return Rational(1); });
                   },
                   gf::asc_psi_closed_form}},
                 {}, {},
                 "fails at t^1: the x coefficient is +1 on the left, -1 on the right"});
  err.push_back({"ERR-ID-5", "Cauchy-polynomial generating function with p_n(s,t)",
                 {"sigma", "tau"},
                 {{"gf", [](const ParamSet& p, int N) { return cauchy_gf_series(p, N, true); }, cauchy_gf_closed_form}},
                 {}, {},
                 "at y = 0 the left side is (tx;q)_inf/(sx;q)_inf, the reciprocal of the prefactor"});
  for (int k = 1; k <= 3; ++k) {
    err.push_back({"ERR-ID-7.k" + std::to_string(k), "index-shifted closed form with q^{nj - binom(j,2)}",
                   {},
                   {{"gf", [k](const ParamSet& p, int N) { return shifted_gf_series(p, N, k); },
                     [k](const ParamSet& p, int N) { return shifted_gf_closed_form(p, N, k, true); }}},
                   {}, {},
                   "the q-Leibniz expansion of D^n[x^k/(xt;q)_inf] produces q^{kj - binom(j,2)}"});
  }
  return err;
}

}  // namespace

namespace gf {

TSeries weighted(int order, const Rational& q, const std::function<Poly(int)>& poly,
                 const std::function<Rational(int)>& weight) {
  TSeries out(order);
  for (int n = 0; n <= order; ++n) {
    Rational w = weight(n);
    if (is_zero(w)) continue;
    out.set_coeff(n, poly(n) * (w / qpoch(q, q, n)));
  }
  return out;
}

TSeries asc_phi_series(const ParamSet& p, int order) {
  return weighted(order, p.q, [&](int n) { return asc_new(AscKind::phi, n, p); }, [](int) { return Rational(1); });
}

TSeries asc_phi_closed_form(const ParamSet& p, int order) {
  return euler_inv_poch_series(Poly::x(), p.q, order) *
         phi_rs_series(PhiSpec{{p.a, p.b, p.c}, {p.d, p.e}, p.q}, Poly::y(), order);
}

TSeries asc_psi_series(const ParamSet& p, int order) {
  return weighted(order, p.q, [&](int n) { return asc_new(AscKind::psi, n, p); },
                  [&](int n) { return euler_sign(p.q, n); });
}

TSeries asc_psi_closed_form(const ParamSet& p, int order) {
  return euler_poch_series(Poly::x(), p.q, order) *
         phi_rs_series(PhiSpec{{p.a, p.b, p.c}, {Rational(0), p.d, p.e}, p.q}, ym(Rational(-1)), order);
}

}  // namespace gf

const std::vector<IdentityCheck>& identity_catalog() {
  static const std::vector<IdentityCheck> cat = build_catalog();
  return cat;
}

const std::vector<IdentityCheck>& reduction_catalog() {
  static const std::vector<IdentityCheck> red = build_reductions();
  return red;
}

const std::vector<IdentityCheck>& erratum_catalog() {
  static const std::vector<IdentityCheck> err = build_errata();
  return err;
}

const IdentityCheck& find_check(std::string_view id) {
  for (const auto* cat : {&identity_catalog(), &reduction_catalog(), &erratum_catalog()})
    for (const auto& c : *cat)
      if (c.id == id) return c;
  throw std::invalid_argument("unknown identity id '" + std::string(id) + "'");
}

bool id_matches(std::string_view id, std::string_view filter) {
  if (id == filter) return true;
  return id.size() > filter.size() && id.substr(0, filter.size()) == filter && id[filter.size()] == '.';
}

ParamSet sample_params(const IdentityCheck& check, std::uint64_t run_seed, int trial, int order) {
  ParamSampler sampler(ParamSampler::derive_seed(run_seed, check.id, static_cast<std::uint64_t>(trial)));
  for (int attempt = 0; attempt < 32; ++attempt) {
    ParamSet p = sampler.draw_set(check.extras);
    if (check.specialize) check.specialize(p);
    p.validate(order);
    if (!check.constraint || !check.constraint(p, order)) return p;
  }
  throw std::runtime_error("could not sample parameters satisfying the constraints of " + check.id);
}

Report verify(const IdentityCheck& check, ParamSet params, int order, int trial) {
  const auto start = std::chrono::steady_clock::now();
  params.validate(order);
  if (check.constraint) {
    if (auto violation = check.constraint(params, order))
      throw std::invalid_argument(check.id + ": " + *violation);
  }
  Report r;
  r.id = check.id;
  r.trial = trial;
  r.order = order;
  try {
    for (const auto& cmp : check.comparisons) {
      TSeries lhs = cmp.lhs(params, order);
      TSeries rhs = cmp.rhs(params, order);
      if (auto n = lhs.first_mismatch(rhs)) {
        r.status = Status::fail;
        r.first_mismatch = Mismatch{cmp.label, *n, lhs.coeff(*n), rhs.coeff(*n)};
        break;
      }
    }
  } catch (const PoleError& e) {
    r.status = Status::pole;
    r.pole_index = e.index();
    r.message = e.what();
  }
  r.params = std::move(params);
  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Poly qdiff_residual(QdiffEquation which, const Poly& f, const ParamSet& p) {
  const Rational& q = p.q;
  std::map<std::pair<int, int>, Poly> cache;
  auto F = [&](int x_shift, int y_shift) -> const Poly& {
    auto key = std::make_pair(x_shift, y_shift);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, f.shifted(qpow(q, x_shift), qpow(q, y_shift))).first;
    return it->second;
  };
  const Rational s1 = p.a + p.b + p.c;
  const Rational s2 = p.a * p.b + p.a * p.c + p.b * p.c;
  const Rational s3 = p.a * p.b * p.c;
  const Rational t1 = (p.d + p.e) / q;
  const Rational t2 = p.d * p.e / (q * q);
  // phi: f(x, y q^j) on the left, differences in x-shift on the right.
  // psi: the same shape with x -> xq on the left and y -> yq on the right.
  const int lx = which == QdiffEquation::phi_eq ? 0 : 1;
  const int ry = which == QdiffEquation::phi_eq ? 0 : 1;
  Poly lhs = F(lx, 0) - F(lx, 1);
  lhs -= (F(lx, 1) - F(lx, 2)) * t1;
  lhs += (F(lx, 2) - F(lx, 3)) * t2;
  lhs *= Poly::x();
  auto diff = [&](int j) {
    return which == QdiffEquation::phi_eq ? F(0, j + ry) - F(1, j + ry) : F(1, j + ry) - F(0, j + ry);
  };
  Poly rhs = diff(0);
  rhs -= diff(1) * s1;
  rhs += diff(2) * s2;
  rhs -= diff(3) * s3;
  rhs *= Poly::y();
  return lhs - rhs;
}

TSeries qdiff_residual(QdiffEquation which, const TSeries& f, const ParamSet& p) {
  return f.map([&](const Poly& c) { return qdiff_residual(which, c, p); });
}

NotInSpanError::NotInSpanError(int power, Poly remainder)
    : std::runtime_error("coefficient of t^" + std::to_string(power) + " is not in the basis span; remainder " +
                         remainder.to_string()),
      power_(power),
      remainder_(std::move(remainder)) {}

std::vector<Rational> expand_poly_in_basis(const Poly& f, AscKind basis, const ParamSet& p) {
  const int deg = f.degree_x();
  std::vector<Rational> mu(static_cast<std::size_t>(std::max(deg, -1) + 1));
  for (int m = 0; m <= deg; ++m) mu[m] = f.coeff(m, 0);
  Poly remainder = f - synthesize_from_basis(mu, basis, p);
  if (!remainder.is_zero()) throw NotInSpanError(0, std::move(remainder));
  return mu;
}

std::vector<Poly> expand_poly_in_basis_y(const Poly& f, AscKind basis, const ParamSet& p) {
  const int deg = f.degree_x();
  std::vector<Poly> mu(static_cast<std::size_t>(std::max(deg, -1) + 1));
  Poly rem = f;
  for (int m = deg; m >= 0; --m) {
    Poly lead;
    for (const auto& [e, c] : rem.terms())
      if (e.x == m) lead.add_term(Exponent{0, e.y}, c);
    if (lead.is_zero()) continue;
    rem -= lead * asc_new(basis, m, p);
    mu[m] = std::move(lead);
  }
  return mu;
}

Poly synthesize_from_basis_y(const std::vector<Poly>& mu, AscKind basis, const ParamSet& p) {
  Poly out;
  for (std::size_t m = 0; m < mu.size(); ++m)
    if (!mu[m].is_zero()) out += mu[m] * asc_new(basis, static_cast<int>(m), p);
  return out;
}

Poly synthesize_from_basis(const std::vector<Rational>& mu, AscKind basis, const ParamSet& p) {
  Poly out;
  for (std::size_t m = 0; m < mu.size(); ++m)
    if (!is_zero(mu[m])) out += asc_new(basis, static_cast<int>(m), p) * mu[m];
  return out;
}

std::vector<std::vector<Rational>> expand_in_basis(const TSeries& f, AscKind basis, const ParamSet& p) {
  std::vector<std::vector<Rational>> out;
  for (int n = 0; n <= f.order(); ++n) {
    try {
      out.push_back(expand_poly_in_basis(f.coeff(n), basis, p));
    } catch (const NotInSpanError& e) {
      throw NotInSpanError(n, e.remainder());
    }
  }
  return out;
}

TSeries synthesize_from_basis(const std::vector<std::vector<Rational>>& mu, AscKind basis, const ParamSet& p) {
  TSeries out(static_cast<int>(mu.size()) - 1);
  for (std::size_t n = 0; n < mu.size(); ++n) out.set_coeff(static_cast<int>(n), synthesize_from_basis(mu[n], basis, p));
  return out;
}

}  // namespace qcalc
