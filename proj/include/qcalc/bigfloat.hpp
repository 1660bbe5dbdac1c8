#pragma once

#include <mpfr.h>

#include <string>

#include "qcalc/rational.hpp"

namespace qcalc {

/// Working precision in bits for newly created BigFloats on this thread.
long working_precision();

/// Sets the thread's working precision for the lifetime of the guard.
class PrecisionScope {
 public:
  explicit PrecisionScope(long bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  long saved_;
};

/// Binary floating point over mpfr_t. Every result is rounded to nearest
/// at the working precision current when it is produced.
class BigFloat {
 public:
  BigFloat();
  BigFloat(long v);  // NOLINT
  BigFloat(const Rational& v);  // NOLINT
  explicit BigFloat(const std::string& decimal);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  long precision() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  BigFloat operator-() const;

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Scientific decimal, e.g. "1.2345e-40". digits = 0 derives the count
  /// from the precision.
  std::string to_string(int digits = 0) const;

  static BigFloat pi();
  /// 10^e exactly rounded.
  static BigFloat pow10(long e);

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
void sin_cos(const BigFloat& x, BigFloat& s, BigFloat& c);
BigFloat max(const BigFloat& a, const BigFloat& b);
/// x^e for integer e.
BigFloat pow(const BigFloat& x, long e);

struct ComplexBF {
  BigFloat re, im;

  ComplexBF() = default;
  ComplexBF(BigFloat r) : re(std::move(r)) {}  // NOLINT
  ComplexBF(long r) : re(r) {}  // NOLINT
  ComplexBF(const Rational& r) : re(r) {}  // NOLINT
  ComplexBF(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  ComplexBF& operator+=(const ComplexBF& o);
  ComplexBF& operator-=(const ComplexBF& o);
  ComplexBF& operator*=(const ComplexBF& o);
  ComplexBF& operator*=(const BigFloat& s);
  ComplexBF& operator/=(const ComplexBF& o);
  friend ComplexBF operator+(ComplexBF a, const ComplexBF& b) { return a += b; }
  friend ComplexBF operator-(ComplexBF a, const ComplexBF& b) { return a -= b; }
  friend ComplexBF operator*(ComplexBF a, const ComplexBF& b) { return a *= b; }
  friend ComplexBF operator*(ComplexBF a, const BigFloat& s) { return a *= s; }
  friend ComplexBF operator/(ComplexBF a, const ComplexBF& b) { return a /= b; }
  ComplexBF operator-() const { return {-re, -im}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  std::string to_string(int digits = 0) const;
};

BigFloat abs(const ComplexBF& z);
ComplexBF conj(const ComplexBF& z);
/// e^{i theta}.
ComplexBF expi(const BigFloat& theta);

}  // namespace qcalc
