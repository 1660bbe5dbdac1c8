#pragma once

#include <compare>
#include <map>
#include <string>

#include "qcalc/rational.hpp"

namespace qcalc {

/// Exponent pair of a monomial x^x y^y.
struct Exponent {
  int x = 0;
  int y = 0;
  auto operator<=>(const Exponent&) const = default;
};

/// Sparse polynomial in the symbols x, y over the rationals. Zero
/// coefficients are never stored, so structural equality is value equality.
class Poly {
 public:
  using Terms = std::map<Exponent, Rational>;

  Poly() = default;
  Poly(const Rational& constant);  // NOLINT: constants promote implicitly
  Poly(long constant) : Poly(Rational(constant)) {}  // NOLINT

  static Poly monomial(const Rational& coeff, int x_exp, int y_exp);
  static Poly x() { return monomial(Rational(1), 1, 0); }
  static Poly y() { return monomial(Rational(1), 0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(int x_exp, int y_exp) const;

  /// Largest exponent of x (resp. y); -1 for the zero polynomial.
  int degree_x() const;
  int degree_y() const;

  /// Adds coeff * x^i y^j in place, erasing the term if it cancels.
  void add_term(const Exponent& e, const Rational& coeff);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  Poly operator-() const;

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Substitution x -> sx * x, y -> sy * y.
  Poly shifted(const Rational& sx, const Rational& sy) const;

  /// Terms whose y-degree is zero.
  Poly y_free_part() const;

  /// Canonical rendering: descending x-degree, then descending y-degree,
  /// e.g. "x^2 - (3/4)x*y + 2".
  std::string to_string() const;

 private:
  Terms terms_;
};

/// poly_shift: coefficient of x^i y^j multiplied by sx^i sy^j.
inline Poly shift(const Poly& p, const Rational& sx, const Rational& sy) { return p.shifted(sx, sy); }

}  // namespace qcalc
