#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "qcalc/qkernel.hpp"
#include "qcalc/series.hpp"

using namespace qcalc;
using testing_support::random_poly;

TEST_CASE("rationals are canonical") {
  Rational r = make_rational(6, -8);
  CHECK(to_string(r) == "-3/4");
  CHECK(r.get_den() > 0);
  CHECK(to_string(make_rational(0, 5)) == "0");
  CHECK(make_rational(0, 5).get_den() == 1);
  CHECK(parse_rational("10/4") == make_rational(5, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational(" 3/9 ") == make_rational(1, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
  CHECK(pow(make_rational(2, 3), -2) == make_rational(9, 4));
  CHECK(pow(make_rational(2, 3), 0) == Rational(1));
}

TEST_CASE("poly arithmetic") {
  const Poly x = Poly::x(), y = Poly::y();
  CHECK((x + y).to_string() == "x + y");
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK((Poly() * (x + y)).is_zero());
  CHECK((x - x).size() == 0);
  CHECK((x * Rational(0)).is_zero());
  Poly p = Poly::monomial(make_rational(-3, 4), 1, 1) + x * x + Poly(2);
  CHECK(p.to_string() == "x^2 - (3/4)x*y + 2");
  CHECK(p.degree_x() == 2);
  CHECK(p.degree_y() == 1);
  CHECK(Poly().degree_x() == -1);
  CHECK(p.coeff(1, 1) == make_rational(-3, 4));
  CHECK(p.coeff(5, 0) == Rational(0));
  CHECK_THROWS_AS(Poly::monomial(Rational(1), -1, 0), std::invalid_argument);
  const Poly sq = p * p - p;
  for (const auto& [e, c] : sq.terms()) CHECK(!is_zero(c));
}

TEST_CASE("poly ring axioms on random triples") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    Poly a = random_poly(rng, 4), b = random_poly(rng, 4), c = random_poly(rng, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
  }
}

TEST_CASE("poly shift") {
  const Rational q = make_rational(1, 2);
  Poly p = Poly::monomial(Rational(1), 2, 1);
  CHECK(p.shifted(q, q * q) == Poly::monomial(make_rational(1, 16), 2, 1));
  std::mt19937_64 rng(5);
  Poly r = random_poly(rng, 4);
  CHECK(r.shifted(1, 1) == r);
  CHECK(Poly(1).shifted(q, q) == Poly(1));
  CHECK(shift(Poly::x() + Poly(3), 0, 1) == Poly(3));
  for (int i = 0; i < 20; ++i) {
    Poly f = random_poly(rng, 4);
    Rational s = testing_support::small_rational(rng), u = testing_support::small_rational(rng);
    Rational s2 = testing_support::small_rational(rng), u2 = testing_support::small_rational(rng);
    CHECK(f.shifted(s, u).shifted(s2, u2) == f.shifted(s * s2, u * u2));
  }
}

TEST_CASE("poly y-free part") {
  Poly p = Poly::x() * Poly::x() + Poly::x() * Poly::y() + Poly(5);
  CHECK(p.y_free_part() == Poly::x() * Poly::x() + Poly(5));
}

TEST_CASE("series arithmetic") {
  const Poly t1(1);
  TSeries one_plus_t = TSeries::one(2) + TSeries::term(2, 1, t1);
  TSeries one_minus_t = TSeries::one(2) - TSeries::term(2, 1, t1);
  CHECK(one_plus_t * one_minus_t == TSeries::one(2) - TSeries::term(2, 2, t1));

  TSeries gx(6), gy(6);
  for (int n = 0; n <= 6; ++n) {
    gx.set_coeff(n, Poly::monomial(Rational(1), n, 0));
    gy.set_coeff(n, Poly::monomial(Rational(1), 0, n));
  }
  CHECK(gx * TSeries::one(6) == gx);
  Poly xx = Poly::x() * Poly::x(), xy = Poly::x() * Poly::y(), yy = Poly::y() * Poly::y();
  CHECK((gx * gy).coeff(2) == xx + xy + yy);
  CHECK(TSeries::term(3, 4, Poly(1)).is_zero());
  CHECK_THROWS_AS(gx + TSeries(5), std::invalid_argument);
  CHECK_THROWS_AS(gx * TSeries(5), std::invalid_argument);
  CHECK_THROWS_AS(gx.coeff(7), std::out_of_range);
  CHECK_THROWS_AS(gx.coeff(-1), std::out_of_range);
  CHECK(gx.coeff(6) == Poly::monomial(Rational(1), 6, 0));
  CHECK((gx * Poly::y()).coeff(3) == Poly::monomial(Rational(1), 3, 1));
  CHECK(gx.rescaled(make_rational(1, 2)).coeff(3) == Poly::monomial(make_rational(1, 8), 3, 0));
  CHECK(!gx.first_mismatch(gx));
  TSeries gx2 = gx;
  gx2.add_to_coeff(4, Poly(1));
  gx2.add_to_coeff(9, Poly(1));
  CHECK(gx.first_mismatch(gx2) == 4);
}

TEST_CASE("series product matches a naive double loop") {
  std::mt19937_64 rng(3);
  const int N = 8;
  for (int trial = 0; trial < 10; ++trial) {
    TSeries f(N), g(N);
    for (int n = 0; n <= N; ++n) {
      f.set_coeff(n, random_poly(rng, 3));
      g.set_coeff(n, random_poly(rng, 3));
    }
    TSeries h = f * g;
    for (int n = 0; n <= N; ++n) {
      Poly want;
      for (int k = 0; k <= n; ++k) want += f.coeff(k) * g.coeff(n - k);
      CHECK(h.coeff(n) == want);
    }
  }
}

TEST_CASE("series coefficients of the inverse Euler product") {
  TSeries s = euler_inv_poch_series(Poly::x(), make_rational(1, 2), 4);
  CHECK(s.coeff(0) == Poly(1));
  CHECK(s.coeff(1) == Poly::monomial(Rational(2), 1, 0));
}

TEST_CASE("parameter sets") {
  ParamSet p;
  p.q = make_rational(1, 2);
  p.d = Rational(4);  // q^-2
  CHECK_NOTHROW(p.validate(1));
  CHECK_THROWS_AS(p.validate(2), std::invalid_argument);
  p.d = 0;
  p.e = Rational(1);  // q^0
  CHECK_THROWS_AS(p.validate(0), std::invalid_argument);
  p.e = 0;
  p.q = Rational(1);
  CHECK_THROWS_AS(p.validate(4), std::invalid_argument);
  p.q = make_rational(-1, 2);
  CHECK_THROWS_AS(p.validate(4), std::invalid_argument);
  CHECK_THROWS_AS(p.extra("sigma"), std::invalid_argument);
  p.set_extra("sigma", make_rational(1, 3));
  CHECK(p.extra("sigma") == make_rational(1, 3));
  auto entries = p.entries();
  REQUIRE(entries.size() == 7);
  CHECK(entries[0].first == "q");
  CHECK(entries[6].first == "sigma");
}

TEST_CASE("sampler policy and determinism") {
  ParamSampler a(99), b(99);
  for (int i = 0; i < 200; ++i) {
    Rational v = a.draw_parameter();
    CHECK(v == b.draw_parameter());
    CHECK(!is_zero(v));
    CHECK(abs(v) <= make_rational(4, 9));
    Rational q = a.draw_q();
    b.draw_q();
    CHECK(q > 0);
    CHECK(q < 1);
  }
  CHECK(ParamSampler::derive_seed(1, "ID-1", 0) != ParamSampler::derive_seed(1, "ID-1", 1));
  CHECK(ParamSampler::derive_seed(1, "ID-1", 0) != ParamSampler::derive_seed(1, "ID-2", 0));
  CHECK(ParamSampler::derive_seed(1, "ID-1", 0) == ParamSampler::derive_seed(1, "ID-1", 0));
  ParamSet s = ParamSampler(7).draw_set({"sigma", "tau"});
  CHECK(s.extras.size() == 2);
  CHECK_NOTHROW(s.validate(12));
}
