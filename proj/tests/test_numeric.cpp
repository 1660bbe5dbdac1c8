#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qcalc/numeric.hpp"
#include "qcalc/qkernel.hpp"

using namespace qcalc;

namespace {

NumericConfig defaults() { return NumericConfig{}; }

const NumericCheck& numeric_check(const std::string& id) {
  for (const auto* cat : {&numeric_catalog(), &numeric_erratum_catalog()})
    for (const auto& c : *cat)
      if (c.id == id) return c;
  throw std::invalid_argument(id);
}

}  // namespace

TEST_CASE("big floats") {
  PrecisionScope ps(128);
  BigFloat third = BigFloat(make_rational(1, 3));
  CHECK(third.precision() == 128);
  CHECK(abs(third * BigFloat(3) - BigFloat(1)) < BigFloat::pow10(-37));
  CHECK(BigFloat("0.25") == BigFloat(make_rational(1, 4)));
  CHECK_THROWS_AS(BigFloat("quarter"), std::invalid_argument);
  CHECK_THROWS_AS(PrecisionScope(32), std::invalid_argument);
  CHECK(BigFloat(make_rational(-3, 2)).to_string(4) == "-1.500e+00");
  {
    PrecisionScope inner(512);
    CHECK(working_precision() == 512);
    CHECK(BigFloat(1).precision() == 512);
  }
  CHECK(working_precision() == 128);
  ComplexBF i(BigFloat(0), BigFloat(1));
  CHECK(abs(i * i + ComplexBF(1)) < BigFloat::pow10(-37));
  ComplexBF z(BigFloat(3), BigFloat(4));
  CHECK(abs(z) == BigFloat(5));
  CHECK(abs(z / z - ComplexBF(1)) < BigFloat::pow10(-37));
  ComplexBF e = expi(BigFloat::pi());
  CHECK(abs(e + ComplexBF(1)) < BigFloat::pow10(-37));
}

TEST_CASE("infinite products") {
  NumericConfig cfg = defaults();
  PrecisionScope ps(cfg.precision_bits);
  BigFloat q(make_rational(1, 2));
  CHECK(poch_inf_num(ComplexBF(0), q, cfg).value.re == BigFloat(1));

  // Exact rational partial product far past the truncation depth.
  Rational a = make_rational(1, 2), exact(1), qi(1);
  for (int i = 0; i < 200; ++i) {
    exact *= 1 - a * qi;
    qi *= make_rational(1, 2);
  }
  NumValue v = poch_inf_num(ComplexBF(BigFloat(a)), q, cfg);
  CHECK(v.converged);
  CHECK(abs(v.value.re - BigFloat(exact)) < BigFloat::pow10(-38));
  CHECK(v.error_budget < BigFloat::pow10(-38));

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  for (int trial = 0; trial < 20; ++trial) {
    ComplexBF z(BigFloat(make_rational(static_cast<long>(u(rng) * 1000), 1000)),
                BigFloat(make_rational(static_cast<long>(u(rng) * 1000), 1000)));
    ComplexBF lhs = poch_inf_num(z, q, cfg).value;
    ComplexBF rhs = (ComplexBF(1) - z) * poch_inf_num(z * q, q, cfg).value;
    CHECK(relative_difference(lhs, rhs) < BigFloat::pow10(-38));
    CHECK(relative_difference(lhs / poch_inf_num(z * q, q, cfg).value, ComplexBF(1) - z) < cfg.compare_tol);
  }
  NumericConfig tight = cfg;
  tight.max_terms = 5;
  CHECK(!poch_inf_num(ComplexBF(BigFloat(a)), q, tight).converged);
  CHECK_THROWS_AS(poch_inf_num(ComplexBF(1), BigFloat(1), cfg), std::invalid_argument);
}

TEST_CASE("tail-controlled sums") {
  NumericConfig cfg = defaults();
  PrecisionScope ps(cfg.precision_bits);
  BigFloat half(make_rational(1, 2));
  NumValue g = sum_until_tail([&](long n) { return ComplexBF(pow(half, n)); }, cfg);
  CHECK(g.converged);
  CHECK(relative_difference(g.value, ComplexBF(2)) < cfg.compare_tol);
  CHECK(g.error_budget < cfg.tail_tol);
  NumValue zero = sum_until_tail([](long) { return ComplexBF(0); }, cfg);
  CHECK(zero.value.is_zero());
  CHECK(zero.converged);
  NumericConfig tight = cfg;
  tight.max_terms = 10;
  CHECK(!sum_until_tail([&](long n) { return ComplexBF(pow(half, n)); }, tight).converged);

  // 1P0(a;;q;z) = (az;q)_inf/(z;q)_inf
  BigFloat q(make_rational(1, 3)), a(make_rational(1, 4)), z(make_rational(1, 5));
  NumValue s = phi_rs_num({a}, {}, q, z, cfg);
  ComplexBF closed = poch_inf_num(a * z, q, cfg).value / poch_inf_num(z, q, cfg).value;
  CHECK(relative_difference(s.value, closed) < BigFloat::pow10(-38));
}

TEST_CASE("numeric five-parameter polynomial agrees with the exact one") {
  PrecisionScope ps(256);
  std::vector<Rational> r{make_rational(1, 5), make_rational(1, 7), make_rational(1, 9), make_rational(1, 4),
                          make_rational(1, 6)};
  std::vector<BigFloat> bf(r.begin(), r.end());
  ParamSet p;
  p.q = make_rational(1, 2);
  p.a = r[0], p.b = r[1], p.c = r[2], p.d = r[3], p.e = r[4];
  for (int n = 0; n <= 8; ++n) {
    Rational exact;
    for (int k = 0; k <= n; ++k)
      exact += qbinom(n, k, p.q) * qpoch(p.a, p.q, k) * qpoch(p.b, p.q, k) * qpoch(p.c, p.q, k) /
               (qpoch(p.d, p.q, k) * qpoch(p.e, p.q, k)) * pow(make_rational(1, 3), n - k) * pow(make_rational(1, 8), k);
    ComplexBF v = asc_phi_num(n, bf, BigFloat(p.q), BigFloat(make_rational(1, 3)), BigFloat(make_rational(1, 8)));
    CHECK(relative_difference(v, ComplexBF(BigFloat(exact))) < BigFloat::pow10(-70));
  }
}

TEST_CASE("transformation instances") {
  NumericConfig cfg = defaults();
  for (const char* id : {"NUM-TRANSFORM", "NUM-TRANSFORM-HEINE", "NUM-TRANSFORM-RS"}) {
    NumericReport r = run_numeric(numeric_check(id), cfg);
    INFO(id, " rel_diff ", r.rel_diff.to_string(6));
    CHECK(r.status == NumStatus::pass);
  }
  NumericReport typeset = run_numeric(numeric_check("ERR-NUM-TRANSFORM"), cfg);
  CHECK(typeset.status == NumStatus::fail);
  CHECK(typeset.rel_diff > BigFloat::pow10(-2));
  TransformParams bad{make_rational(1, 2), 0, 0, 0, 0, 0, Rational(2), 0, 0, 0, 0};
  CHECK_THROWS_AS(verify_transformation(bad, cfg), std::invalid_argument);
}

TEST_CASE("U(n+1) q-binomial sum at n = 1 is the q-binomial theorem") {
  NumericConfig cfg = defaults();
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(1, 8), den(9, 32);
  for (int trial = 0; trial < 20; ++trial) {
    UnParams p{make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)),
               make_rational(num(rng), den(rng)), {make_rational(num(rng), den(rng))}, std::nullopt, 0};
    NumValue lhs = u_n_lhs(p, cfg), rhs = u_n_rhs(p, cfg);
    CHECK(lhs.converged);
    CHECK(relative_difference(lhs.value, rhs.value) < cfg.compare_tol);
  }
}

TEST_CASE("U(n+1) sums") {
  NumericConfig cfg = defaults();
  for (const char* id : {"NUM-UBINOM-2", "NUM-UPOLY-1", "NUM-UPOLY-2", "NUM-UPOLY-2-Y0"}) {
    NumericReport r = run_numeric(numeric_check(id), cfg);
    INFO(id, " rel_diff ", r.rel_diff.to_string(6));
    CHECK(r.status == NumStatus::pass);
  }
  {
    PrecisionScope ps(256);
    UnParams p{make_rational(1, 2), make_rational(1, 4), make_rational(1, 10), {Rational(1), make_rational(1, 3)},
               std::nullopt, 0};
    // min over m of (1 * 1/3) |x_m|^-2 q^{1/2}
    BigFloat bound = un_convergence_bound(p);
    BigFloat want = BigFloat(make_rational(1, 3)) * sqrt(BigFloat(make_rational(1, 2)));
    CHECK(abs(bound - want) < BigFloat::pow10(-60));
    p.z = make_rational(1, 4);
    CHECK_THROWS_AS(u_n_lhs(p, cfg), std::invalid_argument);
    p.z = make_rational(1, 10);
    p.x = {Rational(1), Rational(1)};
    CHECK_THROWS_AS(u_n_lhs(p, cfg), std::invalid_argument);
  }
}

TEST_CASE("U(n+1) sum at n = 3 with a relaxed tolerance") {
  NumericConfig cfg;
  cfg.precision_bits = 128;
  cfg.tail_tol = BigFloat::pow10(-24);
  UnParams p{make_rational(1, 2), make_rational(1, 4), make_rational(1, 40),
             {Rational(1), make_rational(1, 3), make_rational(1, 5)}, std::nullopt, 0};
  NumValue lhs = u_n_lhs(p, cfg), rhs = u_n_rhs(p, cfg);
  CHECK(lhs.converged);
  CHECK(relative_difference(lhs.value, rhs.value) < cfg.compare_tol);
}

TEST_CASE("Gauss-Legendre rules") {
  PrecisionScope ps(256);
  auto nodes = gauss_legendre(20);
  REQUIRE(nodes.size() == 20);
  BigFloat wsum;
  for (const auto& [x, w] : nodes) wsum += w;
  CHECK(abs(wsum - BigFloat(2)) < BigFloat::pow10(-70));
  // Exact for degree 2n - 1 = 39: integral of x^38 over [-1, 1] is 2/39.
  BigFloat s;
  for (const auto& [x, w] : nodes) s += w * pow(x, 38);
  CHECK(abs(s - BigFloat(make_rational(2, 39))) < BigFloat::pow10(-70));
  CHECK(gauss_legendre(1).at(0).first.is_zero());
}

TEST_CASE("Ramanujan integrals") {
  NumericConfig cfg = defaults();
  {
    PrecisionScope ps(256);
    BigFloat k = ramanujan_k(BigFloat(make_rational(1, 4)));
    CHECK(abs(k * k * BigFloat(2) - log(BigFloat(4))) < BigFloat::pow10(-70));
  }
  CHECK(cfg.resolved_half_width() == 11);

  NumericReport gauss = run_numeric(numeric_check("NUM-GAUSSIAN"), cfg);
  CHECK(gauss.status == NumStatus::pass);
  CHECK(gauss.rel_diff < BigFloat::pow10(-12));

  for (const char* id : {"NUM-RAMANUJAN", "NUM-RAMANUJAN-ASC", "NUM-RAMANUJAN-ASC-Y0"}) {
    NumericReport r = run_numeric(numeric_check(id), cfg);
    INFO(id, " rel_diff ", r.rel_diff.to_string(6));
    CHECK(r.status == NumStatus::pass);
  }
  NumericReport typeset = run_numeric(numeric_check("ERR-NUM-RAMANUJAN-ASC"), cfg);
  CHECK(typeset.status == NumStatus::fail);

  // Doubling the panel count leaves the value unchanged to compare_tol.
  RamanujanParams p{make_rational(1, 4), make_rational(1, 5), make_rational(1, 4), make_rational(1, 2), std::nullopt, 0};
  NumericConfig doubled = cfg;
  doubled.quad.panel_count *= 2;
  NumValue a = ramanujan_integral(p, cfg), b = ramanujan_integral(p, doubled);
  CHECK(a.converged);
  CHECK(relative_difference(a.value, b.value) < cfg.compare_tol);

  RamanujanParams bad = p;
  bad.a = Rational(3);
  CHECK_THROWS_AS(ramanujan_integral(bad, cfg), std::invalid_argument);

  NumericConfig coarse = cfg;
  coarse.quad.nodes_per_panel = 2;
  coarse.quad.panel_count = 2;
  CHECK(!ramanujan_integral(p, coarse).converged);
}

TEST_CASE("refined config") {
  NumericConfig cfg = defaults();
  NumericConfig fine = cfg.refined();
  CHECK(fine.precision_bits == 512);
  PrecisionScope ps(128);
  CHECK(abs(fine.tail_tol / BigFloat::pow10(-50) - BigFloat(1)) < BigFloat::pow10(-30));
}
